//! Isomorph-free generation by canonical augmentation.
//!
//! Level `k + 1` is built from the canonical representatives of level `k`:
//! every neighborhood `S` of a new vertex is tried, and the child is kept
//! only when deleting the vertex that its canonical labeling places last
//! gives back the parent. Children of one parent that are isomorphic to each
//! other are merged by canonical form. With a hereditary pruning predicate
//! (closed under vertex deletion) every graph of the class has its canonical
//! parent inside the class, so pruning loses nothing.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par::{ordered_map, Jobs};
use crate::structure::independence_number;
use crate::verify::canon::canonical_masks;

/// Largest order [`enumerate_graphs`] accepts.
pub const ENUMERATION_SCOPE: usize = 12;

/// Canonical representatives of one order, in a deterministic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    n: usize,
    forms: Vec<Vec<u64>>,
}

impl Enumeration {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = Graph> + '_ {
        self.forms.iter().map(|f| Graph::from_masks(f))
    }

    pub fn to_vec(&self) -> Vec<Graph> {
        self.iter().collect()
    }
}

/// A hereditary predicate: `α(G) ≤ k`.
pub fn alpha_at_most(k: usize) -> impl Fn(&Graph) -> bool + Sync {
    move |g| independence_number(g).0 <= k
}

pub fn enumerate_all(n: usize) -> Result<Enumeration> {
    enumerate_graphs(n, |_: &Graph| true, Jobs::AUTO)
}

/// Every graph on `n` vertices accepted by `pruning`, one per isomorphism class.
///
/// `pruning` must be hereditary; it is applied at every intermediate order.
pub fn enumerate_graphs<P>(n: usize, pruning: P, jobs: Jobs) -> Result<Enumeration>
where
    P: Fn(&Graph) -> bool + Sync,
{
    if n > ENUMERATION_SCOPE {
        return Err(Error::ScopeExceeded {
            what: "enumeration",
            limit: ENUMERATION_SCOPE,
            n,
        });
    }
    let mut level: Vec<Vec<u64>> = if pruning(&Graph::from_masks(&[])) {
        vec![Vec::new()]
    } else {
        Vec::new()
    };
    for _ in 0..n {
        let children = ordered_map(&level, jobs, |parent| augment(parent, &pruning));
        level = children.into_iter().flatten().collect();
    }
    Ok(Enumeration { n, forms: level })
}

/// Canonical children of one canonical parent, sorted by form.
fn augment<P: Fn(&Graph) -> bool>(parent: &[u64], pruning: &P) -> Vec<Vec<u64>> {
    let k = parent.len();
    let parent_degrees = sorted_degrees(parent);
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut child = parent.to_vec();
    child.push(0);
    for s in 0u64..1 << k {
        for (v, row) in child.iter_mut().enumerate().take(k) {
            *row = parent[v] | ((s >> v) & 1) << k;
        }
        child[k] = s;
        if !pruning(&Graph::from_masks(&child)) {
            continue;
        }
        let canon = canonical_masks(&child);
        if seen.contains(&canon.form) {
            continue;
        }
        let last = canon.labeling[k];
        if last != k {
            let reduced = delete(&child, last);
            if sorted_degrees(&reduced) != parent_degrees || canonical_masks(&reduced).form != parent {
                continue;
            }
        }
        seen.insert(canon.form);
    }
    let mut out: Vec<Vec<u64>> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

fn delete(adj: &[u64], v: usize) -> Vec<u64> {
    let low = (1u64 << v) - 1;
    adj.iter()
        .enumerate()
        .filter(|&(w, _)| w != v)
        .map(|(_, &m)| (m & low) | ((m >> 1) & !low))
        .collect()
}

fn sorted_degrees(adj: &[u64]) -> Vec<u32> {
    let mut d: Vec<u32> = adj.iter().map(|m| m.count_ones()).collect();
    d.sort_unstable();
    d
}
