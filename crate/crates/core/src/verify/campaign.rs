//! Verification campaigns for `χ ≤ max{Δ - 1, ω}`.

use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::coloring::{chromatic_number, EXACT_SCOPE};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::kempe::{bk_color_with, BkOptions, CascadeConfig, TacticTrace, DEFAULT_TACTIC_DEPTH, MIN_DELTA};
use crate::par::{ordered_map, Jobs};
use crate::structure::{clique_number, independence_number, is_4k1_free};
use crate::verify::enumerate::{enumerate_graphs, ENUMERATION_SCOPE};

pub const DEFAULT_DENSITY: f64 = 0.7;

/// Rejection sampling gives up after this many draws per requested graph.
const MAX_DRAWS_PER_SAMPLE: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ClassFilter {
    #[serde(rename = "all")]
    All,
    #[serde(rename = "4k1_free")]
    FourK1Free,
    /// `apex(H)` for every 4K1-free `H` on `n - 1` vertices.
    #[serde(rename = "4k1_free_with_apex")]
    FourK1FreeWithApex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Mode {
    Exhaustive,
    Sample { count: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CampaignSpec {
    pub n_range: RangeInclusive<usize>,
    pub class_filter: ClassFilter,
    pub min_delta: usize,
    pub mode: Mode,
    pub tactic_depth: usize,
    /// Extra hereditary pruning for exhaustive runs: `α ≤ alpha_max`.
    pub alpha_max: Option<usize>,
    /// Edge probability for sampling.
    pub density: f64,
    /// Record wall-clock time per graph. Makes reports nondeterministic.
    pub record_timings: bool,
    /// Attach the trace of every extension to the records.
    pub include_traces: bool,
}

impl CampaignSpec {
    pub fn new(n_range: RangeInclusive<usize>, class_filter: ClassFilter, mode: Mode) -> Self {
        CampaignSpec {
            n_range,
            class_filter,
            min_delta: MIN_DELTA,
            mode,
            tactic_depth: DEFAULT_TACTIC_DEPTH,
            alpha_max: None,
            density: DEFAULT_DENSITY,
            record_timings: false,
            include_traces: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let invalid = |m: String| Err(Error::InvalidSpec(m));
        let (lo, hi) = (*self.n_range.start(), *self.n_range.end());
        if lo > hi {
            return invalid(format!("empty vertex range {lo}..={hi}"));
        }
        if self.class_filter == ClassFilter::FourK1FreeWithApex && lo == 0 {
            return invalid("apex campaigns need n ≥ 1".into());
        }
        if self.tactic_depth == 0 {
            return invalid("tactic depth must be at least 1".into());
        }
        match self.mode {
            Mode::Exhaustive => {
                let enumerated = match self.class_filter {
                    ClassFilter::FourK1FreeWithApex => hi - 1,
                    _ => hi,
                };
                if enumerated > ENUMERATION_SCOPE {
                    return Err(Error::ScopeExceeded {
                        what: "enumeration",
                        limit: ENUMERATION_SCOPE,
                        n: enumerated,
                    });
                }
            }
            Mode::Sample { count, .. } => {
                if count == 0 {
                    return invalid("sample count must be at least 1".into());
                }
                if hi > EXACT_SCOPE {
                    return Err(Error::ScopeExceeded {
                        what: "exact chromatic number",
                        limit: EXACT_SCOPE,
                        n: hi,
                    });
                }
                if !(self.density > 0.0 && self.density <= 1.0) {
                    return invalid(format!("density {} is outside (0, 1]", self.density));
                }
            }
        }
        Ok(())
    }

    fn bk_options(&self) -> BkOptions {
        BkOptions {
            cascade: CascadeConfig::with_depth(self.tactic_depth),
            keep_traces: self.include_traces,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TacticOutcome {
    pub colors: usize,
    pub within_bound: bool,
    pub tactic_only: bool,
    pub extensions: usize,
    pub fallbacks: usize,
    /// Failures at a maximum-degree center with palette `Δ - 1`.
    pub launch_law_checked: usize,
    pub launch_law_violations: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub traces: Vec<TacticTrace>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GraphRecord {
    pub graph6: String,
    pub n: usize,
    pub delta: usize,
    pub omega: usize,
    pub chi: usize,
    pub bound: usize,
    /// `χ ≤ bound`.
    pub holds: bool,
    pub four_k1_free: bool,
    /// 4K1-free with `Δ ≥ min_delta`.
    pub in_hypothesis: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tactic: Option<TacticOutcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_us: Option<u64>,
}

impl GraphRecord {
    pub fn is_violation(&self) -> bool {
        self.in_hypothesis && !self.holds
    }
}

/// Computes Δ, ω and χ and checks the bound; runs the constructive
/// procedure as well when the hypothesis applies and `Δ ≥ 9`.
pub fn verify_bound(g: &Graph, spec: &CampaignSpec) -> Result<GraphRecord> {
    let start = Instant::now();
    let n = g.order();
    let delta = g.max_degree();
    let omega = clique_number(g).0;
    let (chi, _) = chromatic_number(g)?;
    let bound = omega.max(delta.saturating_sub(1));
    let four_k1_free = is_4k1_free(g);
    let in_hypothesis = four_k1_free && delta >= spec.min_delta;
    let tactic = if in_hypothesis && delta >= MIN_DELTA {
        let run = bk_color_with(g, &spec.bk_options())?;
        let checked: Vec<_> = run.extensions.iter().filter(|e| e.launch_law_applies()).collect();
        Some(TacticOutcome {
            colors: run.coloring.num_colors(),
            within_bound: run.coloring.num_colors() <= bound,
            tactic_only: run.tactic_only(),
            extensions: run.extensions.len(),
            fallbacks: run.fallbacks,
            launch_law_checked: checked.len(),
            launch_law_violations: checked.iter().filter(|e| e.launch_configuration != Some(true)).count(),
            traces: run.extensions.into_iter().filter_map(|e| e.trace).collect(),
        })
    } else {
        None
    };
    Ok(GraphRecord {
        graph6: g.to_graph6(),
        n,
        delta,
        omega,
        chi,
        bound,
        holds: chi <= bound,
        four_k1_free,
        in_hypothesis,
        tactic,
        runtime_us: spec.record_timings.then(|| start.elapsed().as_micros() as u64),
    })
}

/// The graphs a campaign visits at order `n`, in a deterministic order.
pub fn campaign_graphs(spec: &CampaignSpec, n: usize, jobs: Jobs) -> Result<Vec<Graph>> {
    let alpha_cap = match spec.class_filter {
        ClassFilter::All => spec.alpha_max,
        _ => Some(spec.alpha_max.map_or(3, |a| a.min(3))),
    };
    let base_order = match spec.class_filter {
        ClassFilter::FourK1FreeWithApex => n - 1,
        _ => n,
    };
    let base = match spec.mode {
        Mode::Exhaustive => {
            let e = match alpha_cap {
                Some(a) => enumerate_graphs(base_order, move |g: &Graph| independence_number(g).0 <= a, jobs)?,
                None => enumerate_graphs(base_order, |_: &Graph| true, jobs)?,
            };
            e.to_vec()
        }
        Mode::Sample { count, seed } => sample_graphs(spec, base_order, count, seed, alpha_cap)?,
    };
    match spec.class_filter {
        ClassFilter::FourK1FreeWithApex => base.iter().map(Graph::add_apex).collect(),
        _ => Ok(base),
    }
}

fn sample_graphs(spec: &CampaignSpec, n: usize, count: usize, seed: u64, alpha_cap: Option<usize>) -> Result<Vec<Graph>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(n as u64);
    // an apex adds one to every degree and supplies degree n - 1 itself
    let apex = spec.class_filter == ClassFilter::FourK1FreeWithApex;
    let min_delta = if apex { 0 } else { spec.min_delta };
    let mut out = Vec::with_capacity(count);
    let mut draws = 0usize;
    while out.len() < count {
        if draws >= count.saturating_mul(MAX_DRAWS_PER_SAMPLE) {
            return Err(Error::InvalidSpec(format!(
                "rejection sampling accepted {} of {count} graphs at n = {n} after {draws} draws",
                out.len()
            )));
        }
        draws += 1;
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if rng.gen_bool(spec.density) {
                    edges.push((a, b));
                }
            }
        }
        let g = Graph::from_edges(n, &edges)?;
        if g.max_degree() < min_delta && spec.class_filter != ClassFilter::All {
            continue;
        }
        if alpha_cap.is_some_and(|a| independence_number(&g).0 > a) {
            continue;
        }
        out.push(g);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub chi: usize,
    pub bound: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrderSummary {
    pub n: usize,
    pub graphs: usize,
    pub in_hypothesis: usize,
    pub violations: usize,
    pub tactic_runs: usize,
    pub tactic_only: usize,
    pub fallbacks: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Aggregate {
    pub graphs: usize,
    pub in_hypothesis: usize,
    pub holds: usize,
    pub violations: Vec<Violation>,
    pub tactic_runs: usize,
    pub tactic_only: usize,
    /// Share of tactic runs that needed no exact fallback.
    pub tactic_success_rate: Option<f64>,
    pub tactic_outside_bound: usize,
    pub extensions: usize,
    pub fallbacks: usize,
    pub launch_law_checked: usize,
    pub launch_law_violations: usize,
    pub per_order: Vec<OrderSummary>,
}

impl Aggregate {
    pub fn of(records: &[GraphRecord]) -> Self {
        let tactics: Vec<&TacticOutcome> = records.iter().filter_map(|r| r.tactic.as_ref()).collect();
        let tactic_only = tactics.iter().filter(|t| t.tactic_only).count();
        let mut per_order: Vec<OrderSummary> = Vec::new();
        for r in records {
            if per_order.last().is_none_or(|s| s.n != r.n) {
                per_order.push(OrderSummary {
                    n: r.n,
                    graphs: 0,
                    in_hypothesis: 0,
                    violations: 0,
                    tactic_runs: 0,
                    tactic_only: 0,
                    fallbacks: 0,
                });
            }
            let s = per_order.last_mut().expect("pushed above");
            s.graphs += 1;
            s.in_hypothesis += r.in_hypothesis as usize;
            s.violations += r.is_violation() as usize;
            if let Some(t) = &r.tactic {
                s.tactic_runs += 1;
                s.tactic_only += t.tactic_only as usize;
                s.fallbacks += t.fallbacks;
            }
        }
        Aggregate {
            graphs: records.len(),
            in_hypothesis: records.iter().filter(|r| r.in_hypothesis).count(),
            holds: records.iter().filter(|r| r.holds).count(),
            violations: records
                .iter()
                .filter(|r| r.is_violation())
                .map(|r| Violation {
                    graph6: r.graph6.clone(),
                    chi: r.chi,
                    bound: r.bound,
                })
                .collect(),
            tactic_runs: tactics.len(),
            tactic_only,
            tactic_success_rate: (!tactics.is_empty()).then(|| tactic_only as f64 / tactics.len() as f64),
            tactic_outside_bound: tactics.iter().filter(|t| !t.within_bound).count(),
            extensions: tactics.iter().map(|t| t.extensions).sum(),
            fallbacks: tactics.iter().map(|t| t.fallbacks).sum(),
            launch_law_checked: tactics.iter().map(|t| t.launch_law_checked).sum(),
            launch_law_violations: tactics.iter().map(|t| t.launch_law_violations).sum(),
            per_order,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub spec: CampaignSpec,
    pub records: Vec<GraphRecord>,
    pub aggregate: Aggregate,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Per-order table followed by totals and any violations.
    pub fn summary(&self) -> String {
        let a = &self.aggregate;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:>4} {:>9} {:>9} {:>10} {:>8} {:>11} {:>9}",
            "n", "graphs", "in-hyp", "violations", "bk-runs", "tactic-only", "fallbacks"
        );
        for s in &a.per_order {
            let _ = writeln!(
                out,
                "{:>4} {:>9} {:>9} {:>10} {:>8} {:>11} {:>9}",
                s.n, s.graphs, s.in_hypothesis, s.violations, s.tactic_runs, s.tactic_only, s.fallbacks
            );
        }
        let _ = writeln!(out, "graphs: {}, in hypothesis: {}, violations: {}", a.graphs, a.in_hypothesis, a.violations.len());
        if let Some(rate) = a.tactic_success_rate {
            let _ = writeln!(
                out,
                "tactic-only success: {}/{} ({:.2}%), launch law: {} checked, {} violated",
                a.tactic_only,
                a.tactic_runs,
                rate * 100.0,
                a.launch_law_checked,
                a.launch_law_violations
            );
        }
        for v in &a.violations {
            let _ = writeln!(out, "VIOLATION {} chi={} bound={}", v.graph6, v.chi, v.bound);
        }
        out
    }
}

pub fn run_campaign(spec: &CampaignSpec, jobs: Jobs) -> Result<VerificationReport> {
    spec.validate()?;
    let mut records = Vec::new();
    for n in spec.n_range.clone() {
        let graphs = campaign_graphs(spec, n, jobs)?;
        let checked = ordered_map(&graphs, jobs, |g| verify_bound(g, spec));
        for r in checked {
            records.push(r?);
        }
    }
    let aggregate = Aggregate::of(&records);
    Ok(VerificationReport {
        spec: spec.clone(),
        records,
        aggregate,
    })
}
