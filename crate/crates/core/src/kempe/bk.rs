//! Constructive coloring within `max{Δ - 1, ω}` for 4K1-free graphs with Δ ≥ 9.
//!
//! The procedure follows a minimal-counterexample recursion: strip a
//! maximum-degree vertex until the remaining graph has Δ < 9, color that
//! base with Brooks' construction, then add the stripped vertices back one
//! at a time through [`extend_coloring`]. An extension that the tactics
//! cannot complete falls back to the exact solver on that level's graph and
//! is recorded as a tactic gap.

use serde::Serialize;

use crate::coloring::{brooks_color, chromatic_number, dsatur_color, Color, Coloring, EXACT_SCOPE, UNASSIGNED};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::kempe::profile::palette_profile;
use crate::kempe::tactics::{extend_coloring, CascadeConfig, ExtensionMethod};
use crate::kempe::trace::{Change, Tactic, TacticStep, TacticTrace, TraceOutcome};
use crate::structure::{clique_number, is_4k1_free, is_complete, is_odd_cycle};

/// Degree threshold of the bound; below it the recursion bottoms out in Brooks.
pub const MIN_DELTA: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct BkOptions {
    pub cascade: CascadeConfig,
    /// Keep the full trace of every extension, not only failed ones.
    pub keep_traces: bool,
}

/// One vertex re-inserted during the recursion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionEvent {
    /// Order of the graph the vertex was inserted into.
    pub level_order: usize,
    /// Index of the inserted vertex in the input graph.
    pub center: usize,
    pub degree: usize,
    /// Maximum degree of the graph the vertex was inserted into.
    pub level_delta: usize,
    pub palette: usize,
    pub method: ExtensionMethod,
    pub nodes: usize,
    pub fallback: bool,
    /// For failures: whether the center's palette profile is the launch
    /// configuration (Δ - 2 unique colors and one repeated pair).
    pub launch_configuration: Option<bool>,
    /// For failures: the graph the vertex was inserted into, so the
    /// configuration can be audited later.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub level_graph6: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<TacticTrace>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BkRun {
    pub coloring: Coloring,
    pub bound: usize,
    pub delta: usize,
    pub omega: usize,
    /// Order of the graph colored by the Brooks base case.
    pub base_order: usize,
    pub extensions: Vec<ExtensionEvent>,
    pub fallbacks: usize,
    /// Set if an exact fallback needed more than `bound` colors.
    pub bound_exceeded: bool,
}

impl ExtensionEvent {
    /// Whether a failure here falls under the launch law: the center has
    /// maximum degree and the palette is one short of it.
    pub fn launch_law_applies(&self) -> bool {
        self.fallback && self.degree == self.level_delta && self.palette + 1 == self.level_delta
    }
}

impl BkRun {
    pub fn tactic_only(&self) -> bool {
        self.fallbacks == 0
    }
}

/// Colors a graph whose maximum degree is below [`MIN_DELTA`] with at most `k` colors.
fn color_base(h: &Graph, k: usize) -> Result<Coloring> {
    let mut colors = vec![UNASSIGNED; h.order()];
    for comp in h.components() {
        let sub = h.induced_subgraph(&comp);
        let local: Vec<Color> = if is_complete(&sub) {
            (1..=sub.order() as Color).collect()
        } else if is_odd_cycle(&sub) {
            dsatur_color(&sub).as_slice().to_vec()
        } else {
            brooks_color(&sub)?.as_slice().to_vec()
        };
        for (i, v) in comp.iter().enumerate() {
            colors[v] = local[i];
        }
    }
    Coloring::from_colors(colors, k)
}

fn highest_degree_vertex(g: &Graph) -> usize {
    let delta = g.max_degree();
    (0..g.order()).find(|&v| g.deg(v) == delta).expect("graph is nonempty")
}

pub fn bk_color(g: &Graph) -> Result<Coloring> {
    Ok(bk_color_with(g, &BkOptions::default())?.coloring)
}

pub fn bk_color_with(g: &Graph, opts: &BkOptions) -> Result<BkRun> {
    let n = g.order();
    if n > EXACT_SCOPE {
        return Err(Error::ScopeExceeded {
            what: "bk_color",
            limit: EXACT_SCOPE,
            n,
        });
    }
    let delta = g.max_degree();
    if delta < MIN_DELTA {
        return Err(Error::Precondition(format!(
            "maximum degree {delta} is below {MIN_DELTA}"
        )));
    }
    if !is_4k1_free(g) {
        return Err(Error::Precondition("graph is not 4K1-free".into()));
    }
    let omega = clique_number(g).0;
    let k = omega.max(delta - 1);

    // levels[i] = (graph, its vertices as input indices, stripped local vertex)
    let mut levels: Vec<(Graph, Vec<usize>, usize)> = Vec::new();
    let mut current = g.clone();
    let mut ids: Vec<usize> = (0..n).collect();
    while current.order() > 0 && current.max_degree() >= MIN_DELTA {
        let u = highest_degree_vertex(&current);
        let next = current.delete_vertex(u)?;
        let mut next_ids = ids.clone();
        next_ids.remove(u);
        levels.push((current, ids, u));
        current = next;
        ids = next_ids;
    }
    let base_order = current.order();
    let mut coloring = color_base(&current, k)?;
    let mut extensions = Vec::with_capacity(levels.len());
    let mut fallbacks = 0;
    let mut bound_exceeded = false;

    for (level, level_ids, u) in levels.into_iter().rev() {
        let mut lifted = Vec::with_capacity(level.order());
        lifted.extend_from_slice(&coloring.as_slice()[..u]);
        lifted.push(UNASSIGNED);
        lifted.extend_from_slice(&coloring.as_slice()[u..]);
        let lifted = Coloring::from_colors(lifted, coloring.palette())?;
        let ext = extend_coloring(&level, u, &lifted, coloring.palette(), opts.cascade)?;
        let mut event = ExtensionEvent {
            level_order: level.order(),
            center: level_ids[u],
            degree: level.deg(u),
            level_delta: level.max_degree(),
            palette: coloring.palette(),
            method: ext.method,
            nodes: ext.nodes,
            fallback: false,
            launch_configuration: None,
            level_graph6: None,
            trace: None,
        };
        match ext.coloring {
            Some(c) => {
                coloring = c;
                if opts.keep_traces {
                    event.trace = Some(ext.trace);
                }
            }
            None => {
                fallbacks += 1;
                let (exact, over) = fall_back(&level, u, k, &mut event, ext.trace)?;
                bound_exceeded |= over;
                coloring = exact;
            }
        }
        extensions.push(event);
    }

    debug_assert!(coloring.is_total() && coloring.check_proper(g).is_ok());
    Ok(BkRun {
        coloring,
        bound: k,
        delta,
        omega,
        base_order,
        extensions,
        fallbacks,
        bound_exceeded,
    })
}

/// Colors `level` exactly after the tactics failed at `u`, recording the
/// failure on `event`. Returns the coloring and whether it needed more than
/// `k` colors.
fn fall_back(
    level: &Graph,
    u: usize,
    k: usize,
    event: &mut ExtensionEvent,
    mut trace: TacticTrace,
) -> Result<(Coloring, bool)> {
    event.fallback = true;
    event.level_graph6 = Some(level.to_graph6());
    let profile = palette_profile(level, &trace.initial, u)?;
    event.launch_configuration = Some(profile.is_launch_configuration(event.level_delta));
    let (chi, exact) = chromatic_number(level)?;
    let palette = chi.max(k);
    let exact = exact.with_palette(palette)?;
    let changes: Vec<Change> = (0..level.order())
        .filter(|&v| trace.initial.raw(v) != exact.raw(v))
        .map(|v| Change {
            vertex: v,
            before: trace.initial.raw(v),
            after: exact.raw(v),
        })
        .collect();
    if palette > trace.initial.palette() {
        trace.initial = trace.initial.with_palette(palette)?;
    }
    trace.steps.push(TacticStep {
        tactic: Tactic::ExactFallback,
        changes,
    });
    trace.outcome = TraceOutcome::Colored(exact.raw(u));
    event.trace = Some(trace);
    Ok((exact, palette > k))
}
