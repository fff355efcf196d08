//! Literal evaluation of the structural conditions a failed extension
//! must satisfy at a maximum-degree vertex `u`.
//!
//! In the launch configuration `N(u)` holds `Δ - 2` vertices `A_i` whose
//! colors are unique in `N(u)` and a pair `X, Y` sharing the remaining color.
//! An "m-vertex of v" is a neighbor of `v` colored `m`. Case 1 applies when
//! some two `A_i` are nonadjacent, Case 2 when all are pairwise adjacent;
//! the predicates of the other case are reported as vacuous.
//!
//! Witnesses are tuples whose meaning is given per field. Colors identify
//! the `A_i`; `X` and `Y` are given as vertex indices.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::kempe::palette_profile;
use crate::structure::clique_number;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "verdict", content = "witness")]
pub enum Verdict {
    Holds,
    Violated(Vec<usize>),
    /// The predicate belongs to the case that does not apply.
    Vacuous,
}

impl Verdict {
    pub fn is_violated(&self) -> bool {
        matches!(self, Verdict::Violated(_))
    }

    fn from_witness(w: Option<Vec<usize>>) -> Self {
        w.map_or(Verdict::Holds, Verdict::Violated)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AuditCase {
    /// Some two unique-colored neighbors are nonadjacent.
    One,
    /// All unique-colored neighbors are pairwise adjacent.
    Two,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Launch {
    pub delta: usize,
    pub case: AuditCase,
    /// Unique color to the neighbor `A_i` carrying it.
    pub unique: BTreeMap<Color, usize>,
    pub pair_color: Color,
    pub x: usize,
    pub y: usize,
    /// Witness `(i, j, m)`: `A_i A_j ∉ E` and `A_m` is the only m-vertex of both.
    pub cond_a: Verdict,
    /// Witness `(i, j, k, l, m)`: `A_i A_j ∉ E` and both are adjacent to `A_k, A_l, A_m`.
    pub cond_b: Verdict,
    /// Witness `(i, k1, k2, k3, k4)`: `A_i` is nonadjacent to four other `A_k`.
    pub cond_c: Verdict,
    /// Witness `(i, count)`: `A_i` is adjacent to fewer than three other `A_k`.
    pub cond_c_inference: Verdict,
    /// Witness `(i, j, k)`: three `A` nonadjacent to both `X` and `Y`.
    pub case_i: Verdict,
    /// Witness `(i, j)`: `A_i` has no j-vertex.
    pub case_ii: Verdict,
    /// Witness `(vertex, k)`: `X` or `Y` has no k-vertex.
    pub case_iii: Verdict,
    /// Witness `(vertex, count)`: `X` or `Y` is adjacent to fewer than `ω - 5` of the `A_i`.
    pub case_iv: Verdict,
    /// Witness `(vertex, i)`: `X` or `Y` is the only pair-colored neighbor of `A_i`.
    pub case_v: Verdict,
}

impl Launch {
    pub fn verdicts(&self) -> [(&'static str, &Verdict); 9] {
        [
            ("cond_a", &self.cond_a),
            ("cond_b", &self.cond_b),
            ("cond_c", &self.cond_c),
            ("cond_c_inference", &self.cond_c_inference),
            ("case_i", &self.case_i),
            ("case_ii", &self.case_ii),
            ("case_iii", &self.case_iii),
            ("case_iv", &self.case_iv),
            ("case_v", &self.case_v),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum ConfigAudit {
    NotApplicable { reason: String },
    Audited(Box<Launch>),
}

impl ConfigAudit {
    pub fn launch(&self) -> Option<&Launch> {
        match self {
            ConfigAudit::Audited(l) => Some(l),
            ConfigAudit::NotApplicable { .. } => None,
        }
    }
}

struct Config<'a> {
    g: &'a Graph,
    c: &'a Coloring,
    unique: &'a BTreeMap<Color, usize>,
}

impl Config<'_> {
    /// Neighbors of `v` with color `m`.
    fn count(&self, v: usize, m: Color) -> usize {
        self.g.neighbors(v).iter().filter(|&w| self.c.raw(w) == m).count()
    }

    /// Whether `w` is the only m-vertex of `v`, `m` being `w`'s color.
    fn only(&self, v: usize, w: usize) -> bool {
        self.g.has_edge(v, w) && self.count(v, self.c.raw(w)) == 1
    }

    fn a(&self, i: Color) -> usize {
        self.unique[&i]
    }

    fn colors(&self) -> impl Iterator<Item = Color> + '_ {
        self.unique.keys().copied()
    }

    fn nonadjacent_pairs(&self) -> impl Iterator<Item = (Color, Color)> + '_ {
        self.colors().flat_map(move |i| {
            self.colors()
                .filter(move |&j| j > i && !self.g.has_edge(self.a(i), self.a(j)))
                .map(move |j| (i, j))
        })
    }

    fn cond_a(&self) -> Option<Vec<usize>> {
        self.nonadjacent_pairs().find_map(|(i, j)| {
            self.colors()
                .filter(|&m| m != i && m != j)
                .find(|&m| self.only(self.a(i), self.a(m)) && self.only(self.a(j), self.a(m)))
                .map(|m| vec![i as usize, j as usize, m as usize])
        })
    }

    fn cond_b(&self) -> Option<Vec<usize>> {
        self.nonadjacent_pairs().find_map(|(i, j)| {
            let common: Vec<usize> = self
                .colors()
                .filter(|&k| k != i && k != j)
                .filter(|&k| self.g.has_edge(self.a(i), self.a(k)) && self.g.has_edge(self.a(j), self.a(k)))
                .map(|k| k as usize)
                .collect();
            (common.len() >= 3).then(|| [vec![i as usize, j as usize], common[..3].to_vec()].concat())
        })
    }

    fn non_neighbors_among_a(&self, i: Color) -> Vec<usize> {
        self.colors()
            .filter(|&k| k != i && !self.g.has_edge(self.a(i), self.a(k)))
            .map(|k| k as usize)
            .collect()
    }

    fn cond_c(&self) -> Option<Vec<usize>> {
        self.colors().find_map(|i| {
            let non = self.non_neighbors_among_a(i);
            (non.len() > 3).then(|| [vec![i as usize], non[..4].to_vec()].concat())
        })
    }

    fn cond_c_inference(&self) -> Option<Vec<usize>> {
        self.colors().find_map(|i| {
            let adjacent = self.unique.len() - 1 - self.non_neighbors_among_a(i).len();
            (adjacent < 3).then(|| vec![i as usize, adjacent])
        })
    }

    fn case_i(&self, x: usize, y: usize) -> Option<Vec<usize>> {
        let far: Vec<usize> = self
            .colors()
            .filter(|&i| !self.g.has_edge(self.a(i), x) && !self.g.has_edge(self.a(i), y))
            .map(|i| i as usize)
            .collect();
        (far.len() >= 3).then(|| far[..3].to_vec())
    }

    fn case_ii(&self) -> Option<Vec<usize>> {
        self.colors().find_map(|i| {
            self.colors()
                .find(|&j| j != i && self.count(self.a(i), j) == 0)
                .map(|j| vec![i as usize, j as usize])
        })
    }

    fn case_iii(&self, x: usize, y: usize) -> Option<Vec<usize>> {
        [x, y].into_iter().find_map(|v| {
            self.colors()
                .find(|&k| self.count(v, k) == 0)
                .map(|k| vec![v, k as usize])
        })
    }

    fn case_iv(&self, x: usize, y: usize, omega: usize) -> Option<Vec<usize>> {
        [x, y].into_iter().find_map(|v| {
            let adjacent = self.colors().filter(|&i| self.g.has_edge(v, self.a(i))).count();
            (adjacent < omega.saturating_sub(5)).then(|| vec![v, adjacent])
        })
    }

    fn case_v(&self, x: usize, y: usize) -> Option<Vec<usize>> {
        [x, y].into_iter().find_map(|v| {
            self.colors()
                .find(|&i| self.only(self.a(i), v))
                .map(|i| vec![v, i as usize])
        })
    }
}

/// Evaluates every predicate on the configuration `(g, c, u)`.
///
/// `c` must be proper and total on `G - u`; the color of `u` is ignored.
/// Configurations other than the launch configuration at a vertex of
/// degree `Δ` with palette `Δ - 1` are reported as not applicable.
pub fn audit_config(g: &Graph, c: &Coloring, u: usize) -> Result<ConfigAudit> {
    let mut c = c.clone();
    if u < c.len() {
        c.unset(u);
    }
    let profile = palette_profile(g, &c, u)?;
    if let Some(v) = (0..g.order()).find(|&v| v != u && c.raw(v) == 0) {
        return Err(Error::Uncolored(v));
    }
    let delta = g.max_degree();
    let not_applicable = |reason: String| Ok(ConfigAudit::NotApplicable { reason });
    if g.deg(u) != delta {
        return not_applicable(format!("deg({u}) = {} is not Δ = {delta}", g.deg(u)));
    }
    if c.palette() + 1 != delta {
        return not_applicable(format!("palette {} is not Δ - 1 = {}", c.palette(), delta.saturating_sub(1)));
    }
    if !profile.is_launch_configuration(delta) {
        return not_applicable(format!(
            "N({u}) has {} unique colors, {} repeated, {} missing",
            profile.unique_vertices.len(),
            profile.repeat_colors.len(),
            profile.missing_colors.len()
        ));
    }
    let (pair_color, x, y) = profile.repeated_pair().expect("launch configuration has a pair");
    let cfg = Config {
        g,
        c: &c,
        unique: &profile.unique_vertices,
    };
    let case = if cfg.nonadjacent_pairs().next().is_some() {
        AuditCase::One
    } else {
        AuditCase::Two
    };
    let (case_one, case_two) = (case == AuditCase::One, case == AuditCase::Two);
    let eval = |active: bool, f: &dyn Fn() -> Option<Vec<usize>>| {
        if active {
            Verdict::from_witness(f())
        } else {
            Verdict::Vacuous
        }
    };
    let omega = if case_two { clique_number(g).0 } else { 0 };
    let launch = Launch {
        delta,
        case,
        unique: profile.unique_vertices.clone(),
        pair_color,
        x,
        y,
        cond_a: eval(case_one, &|| cfg.cond_a()),
        cond_b: eval(case_one, &|| cfg.cond_b()),
        cond_c: eval(case_one, &|| cfg.cond_c()),
        cond_c_inference: eval(case_one, &|| cfg.cond_c_inference()),
        case_i: eval(case_two, &|| cfg.case_i(x, y)),
        case_ii: eval(case_two, &|| cfg.case_ii()),
        case_iii: eval(case_two, &|| cfg.case_iii(x, y)),
        case_iv: eval(case_two, &|| cfg.case_iv(x, y, omega)),
        case_v: eval(case_two, &|| cfg.case_v(x, y)),
    };
    Ok(ConfigAudit::Audited(Box::new(launch)))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// u = 0 adjacent to A_1..A_7 = 1..7 (colored 1..7) and X, Y = 8, 9 (colored 8).
    fn star_config(extra_edges: &[(usize, usize)], extra_colors: &[Color]) -> (Graph, Coloring) {
        let n = 10 + extra_colors.len();
        let mut edges: Vec<_> = (1..10).map(|v| (0, v)).collect();
        edges.extend_from_slice(extra_edges);
        let g = Graph::from_edges(n, &edges).unwrap();
        let mut colors = vec![0, 1, 2, 3, 4, 5, 6, 7, 8, 8];
        colors.extend_from_slice(extra_colors);
        (g, Coloring::from_colors(colors, 8).unwrap())
    }

    #[test]
    fn case_one_witnesses() {
        // A1, A2 nonadjacent, both adjacent to A3, A4, A5; extra vertices colored 3 and 4
        // hang off A1 and A2 so that A5 is the first color unique to both.
        let mut edges = vec![(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)];
        edges.extend([(1, 10), (2, 10), (1, 11), (2, 11)]);
        let (g, c) = star_config(&edges, &[3, 4]);
        let audit = audit_config(&g, &c, 0).unwrap();
        let l = audit.launch().unwrap();
        assert_eq!(l.case, AuditCase::One);
        assert_eq!((l.pair_color, l.x, l.y), (8, 8, 9));
        assert_eq!(l.cond_a, Verdict::Violated(vec![1, 2, 5]));
        assert_eq!(l.cond_b, Verdict::Violated(vec![1, 2, 3, 4, 5]));
        // A1 is nonadjacent to A2, A6, A7 only: three, so (C) holds for it, but A3 misses four
        assert_eq!(l.cond_c, Verdict::Violated(vec![3, 4, 5, 6, 7]));
        assert_eq!(l.cond_c_inference, Verdict::Violated(vec![3, 2]));
        assert_eq!(l.case_i, Verdict::Vacuous);
        assert_eq!(audit_config(&g, &c, 0).unwrap(), audit);
    }

    #[test]
    fn case_two_when_uniques_form_a_clique() {
        let mut edges = Vec::new();
        for a in 1..8 {
            for b in a + 1..8 {
                edges.push((a, b));
            }
        }
        // X sees A_1..A_3, Y sees nothing among the A_i
        edges.extend([(8, 1), (8, 2), (8, 3)]);
        let (g, c) = star_config(&edges, &[]);
        let l = audit_config(&g, &c, 0).unwrap().launch().cloned().unwrap();
        assert_eq!(l.case, AuditCase::Two);
        assert_eq!(l.cond_a, Verdict::Vacuous);
        assert_eq!(l.case_i, Verdict::Violated(vec![4, 5, 6]));
        assert_eq!(l.case_ii, Verdict::Holds);
        assert_eq!(l.case_iii, Verdict::Violated(vec![8, 4]));
        // ω = 8 (u with A_1..A_7), so X and Y need 3 neighbors among the A_i
        assert_eq!(l.case_iv, Verdict::Violated(vec![9, 0]));
        // X is the only 8-vertex of A_1
        assert_eq!(l.case_v, Verdict::Violated(vec![8, 1]));
    }

    #[test]
    fn not_applicable_configurations() {
        // K10 minus a perfect matching: 8-regular, so the palette Δ - 1 = 7
        let edges: Vec<_> = (0..10)
            .flat_map(|a| (a + 1..10).map(move |b| (a, b)))
            .filter(|&(a, b)| !(a % 2 == 0 && b == a + 1))
            .collect();
        let g = Graph::from_edges(10, &edges).unwrap();
        // an 8-coloring has the wrong palette
        let c = Coloring::from_colors(vec![0, 1, 2, 2, 3, 3, 4, 4, 5, 5], 8).unwrap();
        assert!(matches!(audit_config(&g, &c, 0).unwrap(), ConfigAudit::NotApplicable { .. }));
        // with palette 7, N(0) = {2..9} uses 4 colors twice: not the launch shape
        let c7 = c.with_palette(7).unwrap();
        let audit = audit_config(&g, &c7, 0).unwrap();
        assert!(matches!(audit, ConfigAudit::NotApplicable { ref reason } if reason.contains("4 repeated")));
    }

    #[test]
    fn rejects_improper_colorings() {
        let (g, mut c) = star_config(&[(1, 2)], &[]);
        c.set(2, 1);
        assert!(matches!(audit_config(&g, &c, 0), Err(Error::ImproperColoring(1, 2, 1))));
    }
}
