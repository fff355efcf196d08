//! Exact structural parameters: clique number, independence number,
//! 4K1-freeness, and the special graphs excluded by Brooks' theorem.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Exact clique and independence data for one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureSummary {
    pub alpha: usize,
    pub omega: usize,
    pub is_4k1_free: bool,
    pub witness_independent_set: VertexSet,
    pub witness_clique: VertexSet,
}

impl StructureSummary {
    pub fn of(g: &Graph) -> Self {
        let (alpha, witness_independent_set) = independence_number(g);
        let (omega, witness_clique) = clique_number(g);
        StructureSummary {
            alpha,
            omega,
            is_4k1_free: alpha <= 3,
            witness_independent_set,
            witness_clique,
        }
    }
}

/// Upper bound on the clique number of `g[p]` from a greedy sequential coloring.
fn color_bound(g: &Graph, p: &VertexSet) -> usize {
    let mut uncolored = *p;
    let mut colors = 0;
    while !uncolored.is_empty() {
        colors += 1;
        let mut q = uncolored;
        while let Some(v) = q.first() {
            q.remove(v);
            q = q.difference(g.neighbors(v));
            uncolored.remove(v);
        }
    }
    colors
}

struct CliqueSearch<'a> {
    g: &'a Graph,
    current: Vec<usize>,
    best: Vec<usize>,
    // a clique must exceed this size to be recorded
    floor: usize,
    stop_at: Option<usize>,
    done: bool,
}

impl CliqueSearch<'_> {
    fn threshold(&self) -> usize {
        self.best.len().max(self.floor)
    }

    // Include-smallest-first depth-first order visits cliques in lexicographic
    // order, so the first clique of maximum size is the lexicographically least.
    fn expand(&mut self, p: VertexSet) {
        if self.current.len() > self.threshold() {
            self.best = self.current.clone();
            if self.stop_at.is_some_and(|s| self.best.len() >= s) {
                self.done = true;
                return;
            }
        }
        if p.is_empty() || self.current.len() + color_bound(self.g, &p) <= self.threshold() {
            return;
        }
        let mut rest = p;
        while let Some(v) = rest.first() {
            if self.done || self.current.len() + rest.len() <= self.threshold() {
                return;
            }
            rest.remove(v);
            self.current.push(v);
            self.expand(rest.intersection(self.g.neighbors(v)));
            self.current.pop();
        }
    }
}

fn max_clique_within(g: &Graph, floor: usize, stop_at: Option<usize>) -> Vec<usize> {
    let mut search = CliqueSearch {
        g,
        current: Vec::new(),
        best: Vec::new(),
        floor,
        stop_at,
        done: false,
    };
    search.expand(g.vertices());
    search.best
}

/// Exact clique number with the lexicographically least maximum clique.
pub fn clique_number(g: &Graph) -> (usize, VertexSet) {
    let best = max_clique_within(g, 0, None);
    (best.len(), best.into_iter().collect())
}

/// Exact independence number with the lexicographically least maximum independent set.
pub fn independence_number(g: &Graph) -> (usize, VertexSet) {
    clique_number(&g.complement())
}

/// Whether `g` contains a clique on `size` vertices. Stops at the first one found.
pub fn has_clique_of_size(g: &Graph, size: usize) -> bool {
    if size == 0 {
        return true;
    }
    !max_clique_within(g, size - 1, Some(size)).is_empty()
}

/// True iff `g` has no induced `4K1`, i.e. `alpha(g) <= 3`.
pub fn is_4k1_free(g: &Graph) -> bool {
    !has_clique_of_size(&g.complement(), 4)
}

pub fn is_complete(g: &Graph) -> bool {
    let n = g.order();
    (0..n).all(|v| g.deg(v) + 1 == n)
}

/// Connected, 2-regular, odd order at least 3.
pub fn is_odd_cycle(g: &Graph) -> bool {
    let n = g.order();
    n >= 3 && n % 2 == 1 && (0..n).all(|v| g.deg(v) == 2) && g.is_connected()
}
