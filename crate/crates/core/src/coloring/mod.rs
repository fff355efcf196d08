//! Proper-coloring data model and solvers.
//!
//! Colors are 1-based (`1..=k`); `0` is reserved for "unassigned".

mod brooks;
mod exact;

pub use brooks::brooks_color;
pub use exact::{chromatic_number, is_k_colorable, EXACT_SCOPE};

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub type Color = u16;

pub const UNASSIGNED: Color = 0;

/// Partial or total assignment of colors from the palette `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Coloring {
    colors: Vec<Color>,
    k: usize,
}

impl Coloring {
    /// All vertices unassigned.
    pub fn uncolored(n: usize, k: usize) -> Self {
        Coloring {
            colors: vec![UNASSIGNED; n],
            k,
        }
    }

    /// Wraps raw colors; `0` entries are unassigned. Fails if a color exceeds `k`.
    pub fn from_colors(colors: Vec<Color>, k: usize) -> Result<Self> {
        if let Some((vertex, &color)) = colors
            .iter()
            .enumerate()
            .find(|(_, &c)| c as usize > k)
        {
            return Err(Error::ColorOutOfPalette { vertex, color, k });
        }
        Ok(Coloring { colors, k })
    }

    /// Like [`Coloring::from_colors`] with `k` set to the largest color used.
    pub fn from_colors_tight(colors: Vec<Color>) -> Self {
        let k = colors.iter().copied().max().unwrap_or(0) as usize;
        Coloring { colors, k }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.colors.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Palette size.
    #[inline]
    pub fn palette(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn get(&self, v: usize) -> Option<Color> {
        match self.colors[v] {
            UNASSIGNED => None,
            c => Some(c),
        }
    }

    /// Raw color, `UNASSIGNED` for none.
    #[inline]
    pub(crate) fn raw(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn as_slice(&self) -> &[Color] {
        &self.colors
    }

    /// Panics if `c` is outside the palette.
    pub fn set(&mut self, v: usize, c: Color) {
        assert!(c as usize <= self.k, "color {c} outside palette 1..={}", self.k);
        self.colors[v] = c;
    }

    pub fn unset(&mut self, v: usize) {
        self.colors[v] = UNASSIGNED;
    }

    /// Returns a copy with the palette widened or narrowed to `k`.
    pub fn with_palette(&self, k: usize) -> Result<Coloring> {
        Coloring::from_colors(self.colors.clone(), k)
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(|&c| c != UNASSIGNED)
    }

    /// Number of distinct colors in use.
    pub fn num_colors(&self) -> usize {
        let mut seen = vec![false; self.k + 1];
        for &c in &self.colors {
            seen[c as usize] = true;
        }
        seen[1..].iter().filter(|&&s| s).count()
    }

    pub fn max_color(&self) -> Color {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    /// Vertices carrying color `c`.
    pub fn class(&self, c: Color) -> VertexSet {
        self.colors
            .iter()
            .enumerate()
            .filter(|(_, &x)| x == c && c != UNASSIGNED)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn classes(&self) -> ColorClasses {
        let mut classes = vec![VertexSet::new(); self.k];
        for (v, &c) in self.colors.iter().enumerate() {
            if c != UNASSIGNED {
                classes[c as usize - 1].insert(v);
            }
        }
        ColorClasses { classes }
    }

    /// Colors present on the vertices of `s`.
    pub fn colors_on(&self, s: &VertexSet) -> u64 {
        s.iter().fold(0u64, |acc, v| acc | color_bit(self.colors[v]))
    }

    /// Renumbers colors by first occurrence so equal partitions compare equal.
    pub fn normalized(&self) -> Vec<Color> {
        let mut map = vec![UNASSIGNED; self.k + 1];
        let mut next = 0;
        self.colors
            .iter()
            .map(|&c| {
                if c == UNASSIGNED {
                    return UNASSIGNED;
                }
                if map[c as usize] == UNASSIGNED {
                    next += 1;
                    map[c as usize] = next;
                }
                map[c as usize]
            })
            .collect()
    }

    /// First edge whose endpoints share an assigned color, if any.
    pub fn conflict(&self, g: &Graph) -> Option<(usize, usize)> {
        g.edges().find(|&(a, b)| {
            let c = self.colors[a];
            c != UNASSIGNED && c == self.colors[b]
        })
    }

    /// `Ok` iff proper; otherwise the first offending edge.
    pub fn check_proper(&self, g: &Graph) -> Result<()> {
        match self.conflict(g) {
            None => Ok(()),
            Some((a, b)) => Err(Error::ImproperColoring(a, b, self.colors[a])),
        }
    }
}

/// Bit `c` set for color `c`. `UNASSIGNED` and colors above 63 map to the empty mask.
#[inline]
pub(crate) fn color_bit(c: Color) -> u64 {
    if c == UNASSIGNED || c >= 64 {
        0
    } else {
        1u64 << c
    }
}

/// Color classes indexed from color 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorClasses {
    classes: Vec<VertexSet>,
}

impl ColorClasses {
    pub fn get(&self, c: Color) -> &VertexSet {
        &self.classes[c as usize - 1]
    }

    /// `(color, class)` pairs, including empty classes.
    pub fn iter(&self) -> impl Iterator<Item = (Color, &VertexSet)> {
        self.classes
            .iter()
            .enumerate()
            .map(|(i, s)| (i as Color + 1, s))
    }

    pub fn all_independent(&self, g: &Graph) -> bool {
        self.classes
            .iter()
            .all(|s| s.iter().all(|v| g.neighbors(v).intersection(s).is_empty()))
    }
}

pub fn is_proper(g: &Graph, c: &Coloring) -> bool {
    c.conflict(g).is_none()
}

fn least_free(forbidden: u64) -> Color {
    // bit 0 is never a color
    (!(forbidden | 1)).trailing_zeros() as Color
}

/// Colors vertices in `order`, each with the least color absent from its colored neighbors.
pub fn greedy_color(g: &Graph, order: &[usize]) -> Result<Coloring> {
    let n = g.order();
    let mut seen = vec![false; n];
    if order.len() != n || !order.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true)) {
        return Err(Error::NotAPermutation(n));
    }
    let mut colors = vec![UNASSIGNED; n];
    for &v in order {
        let forbidden = g
            .neighbors(v)
            .iter()
            .fold(0u64, |acc, w| acc | color_bit(colors[w]));
        colors[v] = if forbidden.count_ones() >= 63 {
            wide_least_free(g, &colors, v)
        } else {
            least_free(forbidden)
        };
    }
    Ok(Coloring::from_colors_tight(colors))
}

// Slow path for vertices whose neighborhoods already use 63+ colors.
fn wide_least_free(g: &Graph, colors: &[Color], v: usize) -> Color {
    let mut used: Vec<Color> = g.neighbors(v).iter().map(|w| colors[w]).collect();
    used.sort_unstable();
    used.dedup();
    let mut c = 1;
    for u in used {
        if u == c {
            c += 1;
        } else if u > c {
            break;
        }
    }
    c
}

/// DSATUR: repeatedly color the uncolored vertex seeing the most distinct
/// colors, ties broken by higher degree then lower index.
pub fn dsatur_color(g: &Graph) -> Coloring {
    let n = g.order();
    let mut colors = vec![UNASSIGNED; n];
    let mut seen: Vec<Vec<bool>> = vec![vec![false; n + 2]; n];
    let mut saturation = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == UNASSIGNED)
            .max_by(|&a, &b| {
                saturation[a]
                    .cmp(&saturation[b])
                    .then(g.deg(a).cmp(&g.deg(b)))
                    .then(b.cmp(&a))
            })
            .expect("an uncolored vertex remains");
        let c = (1..).find(|&c| !seen[v][c]).expect("a free color exists");
        colors[v] = c as Color;
        for w in g.neighbors(v).iter() {
            if !seen[w][c] {
                seen[w][c] = true;
                saturation[w] += 1;
            }
        }
    }
    Coloring::from_colors_tight(colors)
}
