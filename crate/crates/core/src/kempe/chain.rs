use serde::Serialize;

use crate::bitset::VertexSet;
use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A maximal connected component of the subgraph induced by two color classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct KempeChain {
    /// Stored with the smaller color first.
    pub colors: (Color, Color),
    pub vertices: VertexSet,
}

pub(crate) fn component(g: &Graph, c: &Coloring, v: usize, i: Color, j: Color) -> VertexSet {
    let allowed = c.class(i).union(&c.class(j));
    g.reachable_within(v, &allowed)
}

pub fn kempe_component(g: &Graph, c: &Coloring, v: usize, i: Color, j: Color) -> Result<KempeChain> {
    if v >= g.order() || v >= c.len() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.order() });
    }
    if i == j {
        return Err(Error::Precondition(format!("chain colors must differ, got {i} twice")));
    }
    let cv = c.raw(v);
    if cv != i && cv != j {
        return Err(Error::NotInChainColors { vertex: v, i, j });
    }
    Ok(KempeChain {
        colors: (i.min(j), i.max(j)),
        vertices: component(g, c, v, i, j),
    })
}

/// Exchanges the chain's two colors on the chain's vertices.
///
/// Fails with [`Error::StaleChain`] unless the chain is still a maximal
/// component of `c`.
pub fn kempe_swap(g: &Graph, c: &Coloring, chain: &KempeChain) -> Result<Coloring> {
    let (i, j) = chain.colors;
    let start = chain.vertices.first().ok_or(Error::StaleChain)?;
    if chain.vertices.last().is_some_and(|v| v >= c.len())
        || chain.vertices.iter().any(|v| c.raw(v) != i && c.raw(v) != j)
        || component(g, c, start, i, j) != chain.vertices
    {
        return Err(Error::StaleChain);
    }
    let mut out = c.clone();
    for v in chain.vertices.iter() {
        out.set(v, if c.raw(v) == i { j } else { i });
    }
    Ok(out)
}
