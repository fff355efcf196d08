use super::{dsatur_color, Color, Coloring};
use crate::bitset::bits;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::structure::clique_number;

/// Largest graph the exact solver accepts.
pub const EXACT_SCOPE: usize = 64;

const NONE: u8 = u8::MAX;

struct Search<'a> {
    adj: &'a [u64],
    k: usize,
    colors: Vec<u8>,
}

impl Search<'_> {
    fn forbidden(&self, v: usize) -> u64 {
        bits(self.adj[v]).fold(0u64, |acc, w| match self.colors[w] {
            NONE => acc,
            c => acc | 1u64 << c,
        })
    }

    // Branch on the most constrained uncolored vertex (fewest available
    // colors, then higher degree, then lower index). A fresh color is only
    // ever the next unused one, which removes palette symmetry.
    fn solve(&mut self, remaining: usize, used: usize) -> bool {
        if remaining == 0 {
            return true;
        }
        let limit = (used + 1).min(self.k);
        let window = if limit == 64 { u64::MAX } else { (1u64 << limit) - 1 };
        let mut pick = None;
        let mut pick_key = (usize::MAX, 0usize);
        for v in 0..self.colors.len() {
            if self.colors[v] != NONE {
                continue;
            }
            let forb = self.forbidden(v);
            let blocked = (forb & window).count_ones() as usize;
            let available = limit - blocked;
            if available == 0 {
                return false;
            }
            let key = (available, self.adj[v].count_ones() as usize);
            if key.0 < pick_key.0 || (key.0 == pick_key.0 && key.1 > pick_key.1) {
                pick_key = key;
                pick = Some((v, forb));
            }
        }
        let (v, forb) = pick.expect("an uncolored vertex remains");
        for c in 0..limit {
            if forb >> c & 1 == 1 {
                continue;
            }
            self.colors[v] = c as u8;
            if self.solve(remaining - 1, used.max(c + 1)) {
                return true;
            }
        }
        self.colors[v] = NONE;
        false
    }
}

fn k_colorable_seeded(g: &Graph, k: usize, clique: &[usize]) -> Option<Coloring> {
    let n = g.order();
    if clique.len() > k {
        return None;
    }
    if n == 0 {
        return Some(Coloring::uncolored(0, k));
    }
    let adj = g.masks();
    let mut search = Search {
        adj: &adj,
        k,
        colors: vec![NONE; n],
    };
    for (c, &v) in clique.iter().enumerate() {
        search.colors[v] = c as u8;
    }
    if !search.solve(n - clique.len(), clique.len()) {
        return None;
    }
    let colors = search.colors.iter().map(|&c| c as Color + 1).collect();
    Some(Coloring::from_colors(colors, k).expect("search stays inside the palette"))
}

/// A proper coloring with at most `k` colors, if one exists.
pub fn is_k_colorable(g: &Graph, k: usize) -> Result<Option<Coloring>> {
    check_scope(g)?;
    let clique: Vec<usize> = clique_number(g).1.to_vec();
    Ok(k_colorable_seeded(g, k, &clique))
}

fn check_scope(g: &Graph) -> Result<()> {
    if g.order() > EXACT_SCOPE {
        return Err(Error::ScopeExceeded {
            what: "exact coloring",
            limit: EXACT_SCOPE,
            n: g.order(),
        });
    }
    Ok(())
}

/// Exact chromatic number with a witness coloring whose palette is exactly `chi`.
///
/// The clique number bounds from below and DSATUR from above; the gap is
/// closed by testing `k`-colorability upward from the lower bound, with a
/// maximum clique precolored.
pub fn chromatic_number(g: &Graph) -> Result<(usize, Coloring)> {
    check_scope(g)?;
    let (omega, clique) = clique_number(g);
    let upper = dsatur_color(g);
    let ub = upper.num_colors();
    let clique = clique.to_vec();
    for k in omega..ub {
        if let Some(c) = k_colorable_seeded(g, k, &clique) {
            return Ok((k, c));
        }
    }
    Ok((ub, upper))
}
