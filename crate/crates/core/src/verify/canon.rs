//! Canonical labeling by equitable refinement and individualization.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, then branch on each vertex of the first non-singleton
//! cell. The canonical form is the largest relabeled adjacency matrix over
//! all leaves. Leaves with equal forms yield automorphisms, which prune
//! sibling branches by orbit and allow a jump back to the node where the
//! current path left the first path.

use crate::bitset::bits;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order [`canonical_form`] accepts.
pub const CANON_SCOPE: usize = 64;

/// A canonical labeling together with the relabeled adjacency rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Canonical {
    /// Row `i` is the neighborhood of canonical vertex `i`.
    pub form: Vec<u64>,
    /// `labeling[i]` is the input vertex placed at canonical position `i`.
    pub labeling: Vec<usize>,
}

impl Canonical {
    pub fn graph(&self) -> Graph {
        Graph::from_masks(&self.form)
    }
}

pub fn canonical_form(g: &Graph) -> Result<Canonical> {
    if g.order() > CANON_SCOPE {
        return Err(Error::ScopeExceeded {
            what: "canonical form",
            limit: CANON_SCOPE,
            n: g.order(),
        });
    }
    Ok(canonical_masks(&g.masks()))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(a)?.form == canonical_form(b)?.form)
}

pub(crate) fn canonical_masks(adj: &[u64]) -> Canonical {
    let n = adj.len();
    if n == 0 {
        return Canonical {
            form: Vec::new(),
            labeling: Vec::new(),
        };
    }
    let mut search = Search {
        adj,
        first: None,
        best: None,
        autos: Vec::new(),
        path: Vec::new(),
    };
    let mut root = vec![low_bits(n)];
    refine(adj, &mut root);
    search.descend(root);
    let (form, labeling) = search.best.expect("at least one leaf");
    Canonical { form, labeling }
}

fn low_bits(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Splits cells until every vertex of a cell has the same number of
/// neighbors in every cell. Subcells replace their parent in place, ordered
/// by increasing neighbor count.
fn refine(adj: &[u64], cells: &mut Vec<u64>) {
    let mut groups: Vec<(u32, u64)> = Vec::new();
    'restart: loop {
        for s in 0..cells.len() {
            let splitter = cells[s];
            for i in 0..cells.len() {
                let cell = cells[i];
                if cell.count_ones() == 1 {
                    continue;
                }
                groups.clear();
                for v in bits(cell) {
                    let d = (adj[v] & splitter).count_ones();
                    match groups.iter_mut().find(|(c, _)| *c == d) {
                        Some((_, m)) => *m |= 1 << v,
                        None => groups.push((d, 1 << v)),
                    }
                }
                if groups.len() > 1 {
                    groups.sort_unstable_by_key(|&(d, _)| d);
                    cells.splice(i..=i, groups.iter().map(|&(_, m)| m));
                    continue 'restart;
                }
            }
        }
        return;
    }
}

struct Search<'a> {
    adj: &'a [u64],
    /// Form, labeling and path of the first leaf.
    first: Option<(Vec<u64>, Vec<usize>, Vec<usize>)>,
    best: Option<(Vec<u64>, Vec<usize>)>,
    /// Automorphisms as vertex maps.
    autos: Vec<Vec<usize>>,
    path: Vec<usize>,
}

impl Search<'_> {
    /// Returns the level to jump back to, if the subtree became redundant.
    fn descend(&mut self, cells: Vec<u64>) -> Option<usize> {
        let level = self.path.len();
        let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
            return self.leaf(&cells);
        };
        let cell = cells[target];
        let mut tried: Vec<usize> = Vec::new();
        for v in bits(cell) {
            if !tried.is_empty() && self.same_orbit(v, &tried) {
                continue;
            }
            tried.push(v);
            let mut child = cells.clone();
            child[target] = 1 << v;
            child.insert(target + 1, cell & !(1 << v));
            refine(self.adj, &mut child);
            self.path.push(v);
            let jump = self.descend(child);
            self.path.pop();
            if let Some(t) = jump {
                if t < level {
                    return Some(t);
                }
            }
        }
        None
    }

    /// Whether `v` shares an orbit with a tried vertex under the known
    /// automorphisms that fix the current path pointwise.
    fn same_orbit(&self, v: usize, tried: &[usize]) -> bool {
        let n = self.adj.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for a in &self.autos {
            if self.path.iter().any(|&x| a[x] != x) {
                continue;
            }
            for (x, &y) in a.iter().enumerate() {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[rx.max(ry)] = rx.min(ry);
                }
            }
        }
        let rv = find(&mut parent, v);
        tried.iter().any(|&w| find(&mut parent, w) == rv)
    }

    fn leaf(&mut self, cells: &[u64]) -> Option<usize> {
        let labeling: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let form = relabel(self.adj, &labeling);
        let Some((first_form, first_lab, first_path)) = &self.first else {
            self.first = Some((form.clone(), labeling.clone(), self.path.clone()));
            self.best = Some((form, labeling));
            return None;
        };
        if form == *first_form {
            self.autos.push(automorphism(first_lab, &labeling));
            let common = first_path.iter().zip(&self.path).take_while(|(a, b)| a == b).count();
            return Some(common);
        }
        let (best_form, best_lab) = self.best.as_ref().expect("set with first");
        if form == *best_form {
            let a = automorphism(best_lab, &labeling);
            self.autos.push(a);
        } else if form > *best_form {
            self.best = Some((form, labeling));
        }
        None
    }
}

fn relabel(adj: &[u64], labeling: &[usize]) -> Vec<u64> {
    let mut pos = vec![0usize; adj.len()];
    for (i, &v) in labeling.iter().enumerate() {
        pos[v] = i;
    }
    labeling
        .iter()
        .map(|&v| bits(adj[v]).fold(0u64, |m, w| m | 1 << pos[w]))
        .collect()
}

/// The map sending `from[i]` to `to[i]`.
fn automorphism(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut a = vec![0; from.len()];
    for (&x, &y) in from.iter().zip(to) {
        a[x] = y;
    }
    a
}
