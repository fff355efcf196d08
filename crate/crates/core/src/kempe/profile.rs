use std::collections::BTreeMap;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::coloring::{Color, Coloring, UNASSIGNED};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// How the colors of `N(u)` are distributed over the palette `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PaletteProfile {
    pub center: usize,
    pub palette: usize,
    /// Color `i` seen exactly once in `N(u)`, mapped to that neighbor.
    pub unique_vertices: BTreeMap<Color, usize>,
    /// Colors seen at least twice in `N(u)`, with the neighbors carrying them.
    pub repeat_colors: BTreeMap<Color, VertexSet>,
    pub missing_colors: Vec<Color>,
}

impl PaletteProfile {
    /// The configuration a failed extension leaves at a maximum-degree vertex:
    /// `Δ - 2` unique colors, one color on exactly two neighbors, nothing
    /// missing, palette `Δ - 1`.
    pub fn is_launch_configuration(&self, delta: usize) -> bool {
        delta >= 2
            && self.palette + 1 == delta
            && self.missing_colors.is_empty()
            && self.unique_vertices.len() + 2 == delta
            && self.repeat_colors.len() == 1
            && self.repeat_colors.values().all(|s| s.len() == 2)
    }

    /// The repeated color and its two vertices, when exactly one pair repeats.
    pub fn repeated_pair(&self) -> Option<(Color, usize, usize)> {
        let mut it = self.repeat_colors.iter();
        match (it.next(), it.next()) {
            (Some((&c, s)), None) if s.len() == 2 => {
                let v = s.to_vec();
                Some((c, v[0], v[1]))
            }
            _ => None,
        }
    }
}

/// Checks that `c` is proper once `u` and its incident edges are ignored.
pub(crate) fn check_proper_without(g: &Graph, c: &Coloring, u: usize) -> Result<()> {
    for (a, b) in g.edges() {
        if a == u || b == u {
            continue;
        }
        let ca = c.raw(a);
        if ca != UNASSIGNED && ca == c.raw(b) {
            return Err(Error::ImproperColoring(a, b, ca));
        }
    }
    Ok(())
}

pub fn palette_profile(g: &Graph, c: &Coloring, u: usize) -> Result<PaletteProfile> {
    if u >= g.order() {
        return Err(Error::VertexOutOfRange { vertex: u, n: g.order() });
    }
    if c.len() != g.order() {
        return Err(Error::Precondition(format!(
            "coloring covers {} vertices, graph has {}",
            c.len(),
            g.order()
        )));
    }
    check_proper_without(g, c, u)?;
    let mut by_color: BTreeMap<Color, VertexSet> = BTreeMap::new();
    for v in g.neighbors(u).iter() {
        match c.raw(v) {
            UNASSIGNED => return Err(Error::Uncolored(v)),
            col => by_color.entry(col).or_default().insert(v),
        }
    }
    let mut unique_vertices = BTreeMap::new();
    let mut repeat_colors = BTreeMap::new();
    for (col, set) in by_color {
        if set.len() == 1 {
            unique_vertices.insert(col, set.first().expect("nonempty"));
        } else {
            repeat_colors.insert(col, set);
        }
    }
    let missing_colors = (1..=c.palette() as Color)
        .filter(|col| !unique_vertices.contains_key(col) && !repeat_colors.contains_key(col))
        .collect();
    Ok(PaletteProfile {
        center: u,
        palette: c.palette(),
        unique_vertices,
        repeat_colors,
        missing_colors,
    })
}
