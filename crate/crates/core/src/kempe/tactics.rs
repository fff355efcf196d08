//! Recoloring tactics used to extend a coloring of `G - u` to `G`.
//!
//! Two kinds of local move are available: recoloring a single vertex to a
//! color absent from its neighborhood, and exchanging the colors of a Kempe
//! chain. The extension procedure tries, in order, a direct assignment, a
//! single recolor of a neighbor, and a bounded-depth search over sequences
//! of both moves restricted to the second neighborhood of `u`.

use std::collections::HashMap;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::coloring::{color_bit, Color, Coloring, UNASSIGNED};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::kempe::chain::component;
use crate::kempe::profile::{check_proper_without, palette_profile, PaletteProfile};
use crate::kempe::trace::{Change, Tactic, TacticStep, TacticTrace, TraceOutcome};

pub const DEFAULT_TACTIC_DEPTH: usize = 4;
pub const DEFAULT_NODE_LIMIT: usize = 20_000;

/// Limits for the cascade search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CascadeConfig {
    /// Maximum number of moves before `u` must become colorable.
    pub depth: usize,
    /// Maximum number of search nodes expanded over all depths.
    pub node_limit: usize,
}

impl Default for CascadeConfig {
    fn default() -> Self {
        CascadeConfig {
            depth: DEFAULT_TACTIC_DEPTH,
            node_limit: DEFAULT_NODE_LIMIT,
        }
    }
}

impl CascadeConfig {
    pub fn with_depth(depth: usize) -> Self {
        CascadeConfig {
            depth,
            ..Default::default()
        }
    }
}

/// Which stage of [`extend_coloring`] produced the result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "depth")]
pub enum ExtensionMethod {
    Direct,
    FreeColor,
    /// Cascade success after this many moves.
    Cascade(usize),
    Failed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extension {
    pub method: ExtensionMethod,
    /// Proper coloring of all of `G`, present unless the method is `Failed`.
    pub coloring: Option<Coloring>,
    pub trace: TacticTrace,
    /// Search nodes the cascade expanded.
    pub nodes: usize,
}

/// Neighbor colors as a bit mask, ignoring `skip`.
fn neighborhood_colors(g: &Graph, c: &Coloring, v: usize, skip: usize) -> u64 {
    let mut nbrs = *g.neighbors(v);
    nbrs.remove(skip);
    c.colors_on(&nbrs)
}

fn palette_mask(k: usize) -> u64 {
    ((1u64 << (k + 1)) - 1) & !1
}

fn missing_at(g: &Graph, c: &Coloring, u: usize) -> Option<Color> {
    let free = palette_mask(c.palette()) & !c.colors_on(g.neighbors(u));
    (free != 0).then(|| free.trailing_zeros() as Color)
}

fn free_color_step(g: &Graph, c: &Coloring, u: usize, v: usize) -> Vec<TacticStep> {
    let cv = c.raw(v);
    let blocked = neighborhood_colors(g, c, v, u) | color_bit(cv);
    let mut free = palette_mask(c.palette()) & !blocked;
    let mut out = Vec::new();
    while free != 0 {
        let r = free.trailing_zeros() as Color;
        free &= free - 1;
        out.push(TacticStep {
            tactic: Tactic::FreeColor,
            changes: vec![Change { vertex: v, before: cv, after: r }],
        });
    }
    out
}

/// Recolors `v` (a neighbor of `u`) to the least color absent from `N(v) - u`.
///
/// Returns `None` when every other color already appears around `v`.
pub fn tactic_free_color(g: &Graph, c: &Coloring, u: usize, v: usize) -> Result<Option<Coloring>> {
    if !g.has_edge(u, v) {
        return Err(Error::Precondition(format!("{v} is not a neighbor of {u}")));
    }
    check_proper_without(g, c, u)?;
    if c.raw(v) == UNASSIGNED {
        return Err(Error::Uncolored(v));
    }
    Ok(free_color_step(g, c, u, v).into_iter().next().map(|step| {
        let mut out = c.clone();
        step.apply(&mut out);
        out
    }))
}

struct Cascade<'a> {
    g: &'a Graph,
    u: usize,
    region: Vec<usize>,
    nbrs: VertexSet,
    node_limit: usize,
    nodes: usize,
    // best remaining depth each normalized coloring has been expanded with
    seen: HashMap<Vec<Color>, usize>,
}

impl Cascade<'_> {
    // Free recolors first, then swaps; lower vertex and lower color first.
    fn moves(&self, c: &Coloring, last: bool) -> Vec<TacticStep> {
        let mut out = Vec::new();
        for &v in &self.region {
            if last && !self.nbrs.contains(v) {
                continue;
            }
            out.extend(free_color_step(self.g, c, self.u, v));
        }
        let k = c.palette() as Color;
        let mut tried: Vec<VertexSet> = Vec::new();
        for &v in &self.region {
            let i = c.raw(v);
            for j in 1..=k {
                if j == i {
                    continue;
                }
                let chain = component(self.g, c, v, i, j);
                let class_j = c.class(j);
                // an empty class makes this a free recolor, already generated;
                // swapping two entire classes only renames colors
                if class_j.is_empty() || chain == c.class(i).union(&class_j) {
                    continue;
                }
                if last && chain.intersection(&self.nbrs).is_empty() {
                    continue;
                }
                if tried.contains(&chain) {
                    continue;
                }
                tried.push(chain);
                let changes = chain
                    .iter()
                    .map(|w| {
                        let before = c.raw(w);
                        Change {
                            vertex: w,
                            before,
                            after: if before == i { j } else { i },
                        }
                    })
                    .collect();
                out.push(TacticStep {
                    tactic: Tactic::KempeSwap,
                    changes,
                });
            }
        }
        out
    }

    fn search(&mut self, c: &mut Coloring, path: &mut Vec<TacticStep>, remaining: usize) -> bool {
        if self.nodes >= self.node_limit {
            return false;
        }
        self.nodes += 1;
        let key = c.normalized();
        match self.seen.get(&key) {
            Some(&r) if r >= remaining => return false,
            _ => {
                self.seen.insert(key, remaining);
            }
        }
        for step in self.moves(c, remaining == 1) {
            let saved: Vec<Change> = step.changes.clone();
            step.apply(c);
            path.push(step);
            if missing_at(self.g, c, self.u).is_some() {
                return true;
            }
            if remaining > 1 && self.search(c, path, remaining - 1) {
                return true;
            }
            path.pop();
            for ch in saved {
                c.set(ch.vertex, ch.before);
            }
            if self.nodes >= self.node_limit {
                return false;
            }
        }
        false
    }
}

fn second_neighborhood(g: &Graph, u: usize) -> VertexSet {
    let mut region = *g.neighbors(u);
    for v in g.neighbors(u).iter() {
        region = region.union(g.neighbors(v));
    }
    region.remove(u);
    region
}

/// Iterative-deepening search for a sequence of at most `config.depth` moves
/// on vertices within distance two of `u` after which some color vanishes
/// from `N(u)`. Returns the steps and the number of nodes expanded.
pub(crate) fn cascade_search(
    g: &Graph,
    c: &Coloring,
    u: usize,
    config: CascadeConfig,
) -> (Option<Vec<TacticStep>>, usize) {
    let mut search = Cascade {
        g,
        u,
        region: second_neighborhood(g, u).to_vec(),
        nbrs: *g.neighbors(u),
        node_limit: config.node_limit,
        nodes: 0,
        seen: HashMap::new(),
    };
    for depth in 1..=config.depth {
        search.seen.clear();
        let mut work = c.clone();
        let mut path = Vec::new();
        if search.search(&mut work, &mut path, depth) {
            return (Some(path), search.nodes);
        }
        if search.nodes >= search.node_limit {
            break;
        }
    }
    (None, search.nodes)
}

/// Bounded-depth cascade of recolors and Kempe swaps around `u`.
///
/// Returns the recolored coloring of `G - u` (with `u` still unassigned)
/// after which some color is absent from `N(u)`, or `None`.
pub fn tactic_chain_cascade(g: &Graph, c: &Coloring, u: usize, depth: usize) -> Result<Option<Coloring>> {
    if depth == 0 {
        return Err(Error::Precondition("cascade depth must be at least 1".into()));
    }
    check_proper_without(g, c, u)?;
    let mut base = c.clone();
    base.unset(u);
    let (steps, _) = cascade_search(g, &base, u, CascadeConfig::with_depth(depth));
    Ok(steps.map(|steps| {
        for s in &steps {
            s.apply(&mut base);
        }
        base
    }))
}

fn validate_input(g: &Graph, u: usize, c: &Coloring, k: usize) -> Result<Coloring> {
    let n = g.order();
    if u >= n {
        return Err(Error::VertexOutOfRange { vertex: u, n });
    }
    if c.len() != n {
        return Err(Error::Precondition(format!(
            "coloring covers {} vertices, graph has {n}",
            c.len()
        )));
    }
    if k > 63 {
        return Err(Error::ScopeExceeded {
            what: "tactic palette",
            limit: 63,
            n: k,
        });
    }
    let mut c = c.with_palette(k)?;
    c.unset(u);
    if let Some(v) = (0..n).find(|&v| v != u && c.raw(v) == UNASSIGNED) {
        return Err(Error::Uncolored(v));
    }
    check_proper_without(g, &c, u)?;
    Ok(c)
}

/// Extends a proper total `k`-coloring of `G - u` to a `k`-coloring of `G`.
///
/// Stages: a color already missing from `N(u)`; one free recolor of a
/// neighbor; the bounded cascade. A failed attempt is an outcome, not an
/// error, and always comes with its trace.
pub fn extend_coloring(
    g: &Graph,
    u: usize,
    c: &Coloring,
    k: usize,
    config: CascadeConfig,
) -> Result<Extension> {
    let initial = validate_input(g, u, c, k)?;
    let finish = |method, steps: Vec<TacticStep>, nodes| {
        let mut work = initial.clone();
        for s in &steps {
            s.apply(&mut work);
        }
        let mut steps = steps;
        let (coloring, outcome) = match missing_at(g, &work, u) {
            Some(col) if method != ExtensionMethod::Failed => {
                steps.push(TacticStep {
                    tactic: Tactic::Assign,
                    changes: vec![Change { vertex: u, before: UNASSIGNED, after: col }],
                });
                work.set(u, col);
                (Some(work), TraceOutcome::Colored(col))
            }
            _ => (None, TraceOutcome::Failed),
        };
        Extension {
            method,
            coloring,
            trace: TacticTrace {
                center: u,
                initial: initial.clone(),
                steps,
                outcome,
            },
            nodes,
        }
    };

    if missing_at(g, &initial, u).is_some() {
        return Ok(finish(ExtensionMethod::Direct, Vec::new(), 0));
    }
    for v in g.neighbors(u).iter() {
        for step in free_color_step(g, &initial, u, v) {
            let mut trial = initial.clone();
            step.apply(&mut trial);
            if missing_at(g, &trial, u).is_some() {
                return Ok(finish(ExtensionMethod::FreeColor, vec![step], 0));
            }
        }
    }
    if config.depth == 0 {
        return Ok(finish(ExtensionMethod::Failed, Vec::new(), 0));
    }
    match cascade_search(g, &initial, u, config) {
        (Some(steps), nodes) => {
            let depth = steps.len();
            Ok(finish(ExtensionMethod::Cascade(depth), steps, nodes))
        }
        (None, nodes) => Ok(finish(ExtensionMethod::Failed, Vec::new(), nodes)),
    }
}

/// Profile of the center for a failed extension.
pub fn failure_profile(g: &Graph, ext: &Extension) -> Result<PaletteProfile> {
    palette_profile(g, &ext.trace.initial, ext.trace.center)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_proper;

    #[test]
    fn free_color_examples() {
        // star center 0 with leaves 1..3; leaf 3 has nothing around it but the center
        let g = Graph::complete_bipartite(1, 3).unwrap();
        let c = Coloring::from_colors(vec![0, 1, 2, 3], 3).unwrap();
        let out = tactic_free_color(&g, &c, 0, 3).unwrap().unwrap();
        assert_eq!(out.raw(3), 1);

        // K4 minus nothing: v = 1 sees colors 2 and 3 besides the center
        let k4 = Graph::complete(4).unwrap();
        let c = Coloring::from_colors(vec![0, 1, 2, 3], 3).unwrap();
        assert_eq!(tactic_free_color(&k4, &c, 0, 1).unwrap(), None);
        assert!(tactic_free_color(&g, &c, 1, 2).is_err());
    }

    #[test]
    fn direct_assignment() {
        let g = Graph::cycle(5).unwrap();
        let c = Coloring::from_colors(vec![0, 1, 2, 1, 2], 3).unwrap();
        let ext = extend_coloring(&g, 0, &c, 3, CascadeConfig::default()).unwrap();
        assert_eq!(ext.method, ExtensionMethod::Direct);
        let out = ext.coloring.unwrap();
        assert!(is_proper(&g, &out) && out.is_total());
        assert_eq!(ext.trace.replay().unwrap(), out);
    }

    #[test]
    fn free_recolor_frees_a_unique_color() {
        // u = 0 adjacent to 1, 2, 3 colored 1, 2, 2; vertex 1 can move to 3
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let c = Coloring::from_colors(vec![0, 1, 2, 2], 2).unwrap();
        let ext = extend_coloring(&g, 0, &c, 2, CascadeConfig::default()).unwrap();
        assert_eq!(ext.method, ExtensionMethod::FreeColor);
        let out = ext.coloring.unwrap();
        assert!(is_proper(&g, &out));
        assert_eq!(out.num_colors(), 2);
    }

    #[test]
    fn k10_minus_edge_extends_after_pair_analysis() {
        let mut edges = Vec::new();
        for a in 0..10 {
            for b in a + 1..10 {
                if (a, b) != (1, 2) {
                    edges.push((a, b));
                }
            }
        }
        let g = Graph::from_edges(10, &edges).unwrap();
        let mut colors = vec![0];
        colors.extend(1..=9);
        let c = Coloring::from_colors(colors, 9).unwrap();
        let cascaded = tactic_chain_cascade(&g, &c, 0, 1).unwrap().unwrap();
        assert!(missing_at(&g, &cascaded, 0).is_some());
        let ext = extend_coloring(&g, 0, &c, 9, CascadeConfig::default()).unwrap();
        let out = ext.coloring.unwrap();
        assert!(is_proper(&g, &out));
        assert_eq!(out.num_colors(), 9);
    }

    #[test]
    fn universal_vertex_in_clique_never_extends() {
        let g = Graph::complete(10).unwrap();
        let mut colors = vec![0];
        colors.extend(1..=9);
        let c = Coloring::from_colors(colors, 9).unwrap();
        for depth in 1..=3 {
            assert_eq!(tactic_chain_cascade(&g, &c, 0, depth).unwrap(), None);
        }
        let ext = extend_coloring(&g, 0, &c, 9, CascadeConfig::default()).unwrap();
        assert_eq!(ext.method, ExtensionMethod::Failed);
        assert!(ext.coloring.is_none());
        assert_eq!(ext.trace.outcome, TraceOutcome::Failed);
    }

    #[test]
    fn cascade_uses_a_kempe_swap() {
        // u = 0 sees colors 1, 2, 3 once each; every neighbor already sees the
        // other two colors, so no single recolor helps, but the 1-2 chain
        // {1, 4} can be swapped.
        let g = Graph::from_edges(
            10,
            &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (2, 7), (3, 8), (3, 9)],
        )
        .unwrap();
        let c = Coloring::from_colors(vec![0, 1, 2, 3, 2, 3, 1, 3, 1, 2], 3).unwrap();
        let ext = extend_coloring(&g, 0, &c, 3, CascadeConfig::default()).unwrap();
        assert_eq!(ext.method, ExtensionMethod::Cascade(1));
        assert_eq!(ext.trace.steps[0].tactic, Tactic::KempeSwap);
        let out = ext.coloring.expect("extension succeeds");
        assert!(is_proper(&g, &out) && out.is_total());
        assert_eq!(out.raw(0), 1);
        assert_eq!(ext.trace.replay().unwrap(), out);
        ext.trace.check_intermediates(&g).unwrap();
    }

    #[test]
    fn rejects_bad_input() {
        let g = Graph::complete(3).unwrap();
        let c = Coloring::from_colors(vec![0, 1, 1], 2).unwrap();
        assert_eq!(
            extend_coloring(&g, 0, &c, 2, CascadeConfig::default()),
            Err(Error::ImproperColoring(1, 2, 1))
        );
        let c = Coloring::from_colors(vec![0, 1, 0], 2).unwrap();
        assert_eq!(
            extend_coloring(&g, 0, &c, 2, CascadeConfig::default()),
            Err(Error::Uncolored(2))
        );
        let c = Coloring::from_colors(vec![0, 1, 3], 3).unwrap();
        assert!(matches!(
            extend_coloring(&g, 0, &c, 2, CascadeConfig::default()),
            Err(Error::ColorOutOfPalette { .. })
        ));
    }
}
