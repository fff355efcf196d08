//! Immutable simple undirected graphs with bit-row adjacency.

use std::fmt;

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency is stored as one [`VertexSet`] per vertex. Rows are always
/// symmetric and irreflexive; every constructor checks this, and no method
/// mutates a graph after construction.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices (`nK1`).
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::new(); n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            g.adj[a].insert(b);
            g.adj[b].insert(a);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency masks of a graph with at most 64 vertices.
    ///
    /// The masks must already be symmetric and irreflexive.
    pub(crate) fn from_masks(masks: &[u64]) -> Self {
        let n = masks.len();
        debug_assert!(n <= 64);
        let adj = masks.iter().map(|&m| VertexSet::from_mask(m)).collect();
        let g = Graph { n, adj };
        debug_assert!(g.check_invariants());
        g
    }

    pub(crate) fn from_rows_unchecked(adj: Vec<VertexSet>) -> Self {
        let g = Graph { n: adj.len(), adj };
        debug_assert!(g.check_invariants());
        g
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let all = VertexSet::full(n);
        for v in 0..n {
            let mut row = all;
            row.remove(v);
            g.adj[v] = row;
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Precondition(format!("cycle needs n >= 3, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        let edges: Vec<_> = (0..a)
            .flat_map(|i| (a..a + b).map(move |j| (i, j)))
            .collect();
        Graph::from_edges(a + b, &edges)
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_edges(10, &edges).expect("petersen edges are valid")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && self.adj[a].contains(b)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(a, b)` with `a < b`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |a| self.adj[a].iter().filter(move |&b| b > a).map(move |b| (a, b)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    #[inline]
    pub(crate) fn deg(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(VertexSet::len).min().unwrap_or(0)
    }

    pub fn complement(&self) -> Graph {
        let all = VertexSet::full(self.n);
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, row)| {
                let mut r = all.difference(row);
                r.remove(v);
                r
            })
            .collect();
        Graph { n: self.n, adj }
    }

    /// Subgraph induced by `s`, relabeled in ascending order of original index.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Graph {
        let keep: Vec<usize> = s.iter().filter(|&v| v < self.n).collect();
        let mut index = vec![usize::MAX; self.n];
        for (new, &old) in keep.iter().enumerate() {
            index[old] = new;
        }
        let adj = keep
            .iter()
            .map(|&old| {
                self.adj[old]
                    .iter()
                    .map(|w| index[w])
                    .filter(|&w| w != usize::MAX)
                    .collect()
            })
            .collect();
        Graph {
            n: keep.len(),
            adj,
        }
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let mut s = self.vertices();
        s.remove(v);
        Ok(self.induced_subgraph(&s))
    }

    /// Adds vertex `n` adjacent to every existing vertex.
    pub fn add_apex(&self) -> Result<Graph> {
        let n = self.n;
        if n + 1 > MAX_VERTICES {
            return Err(Error::TooManyVertices(n + 1));
        }
        let mut adj = self.adj.clone();
        for row in adj.iter_mut() {
            row.insert(n);
        }
        adj.push(VertexSet::full(n));
        Ok(Graph { n: n + 1, adj })
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        let mut g = Graph::empty(n)?;
        for (a, b) in self.edges() {
            g.adj[a].insert(b);
            g.adj[b].insert(a);
        }
        for (a, b) in other.edges() {
            g.adj[a + self.n].insert(b + self.n);
            g.adj[b + self.n].insert(a + self.n);
        }
        Ok(g)
    }

    /// Connected components, each as a vertex set, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for v in 0..self.n {
            if seen.contains(v) {
                continue;
            }
            let comp = self.reachable_within(v, &self.vertices());
            seen = seen.union(&comp);
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `start` using only vertices of `allowed`.
    pub fn reachable_within(&self, start: usize, allowed: &VertexSet) -> VertexSet {
        let mut comp = VertexSet::singleton(start);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::new();
            for v in frontier.iter() {
                next = next.union(&self.adj[v]);
            }
            next = next.intersection(allowed).difference(&comp);
            comp = comp.union(&next);
            frontier = next;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reachable_within(0, &self.vertices()).len() == self.n
    }

    /// Low-word adjacency masks; requires `n <= 64`.
    pub(crate) fn masks(&self) -> Vec<u64> {
        debug_assert!(self.n <= 64);
        self.adj.iter().map(VertexSet::low_mask).collect()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_invariants(&self) -> bool {
        let all = VertexSet::full(self.n);
        self.adj.len() == self.n
            && self.adj.iter().enumerate().all(|(v, row)| {
                !row.contains(v) && row.is_subset(&all) && row.iter().all(|w| self.adj[w].contains(v))
            })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; ", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}
