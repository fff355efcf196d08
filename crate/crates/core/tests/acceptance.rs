//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::collections::HashSet;
use std::time::Instant;

use bklab::coloring::{brooks_color, chromatic_number};
use bklab::kempe::{bk_color_with, extend_coloring, kempe_component, kempe_swap, BkOptions, CascadeConfig, ExtensionEvent};
use bklab::par::{ordered_map, Jobs};
use bklab::structure::{clique_number, independence_number};
use bklab::verify::{campaign_graphs, enumerate_all, run_campaign, CampaignSpec, ClassFilter, Mode, VerificationReport};
use bklab::{Color, Coloring, Graph};
use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

/// Graphs visited by one campaign, with its report.
struct Campaign {
    graphs: Vec<Graph>,
    report: VerificationReport,
}

fn campaign(spec: CampaignSpec) -> Campaign {
    let n = *spec.n_range.start();
    assert_eq!(spec.n_range.start(), spec.n_range.end());
    let graphs = campaign_graphs(&spec, n, Jobs::AUTO).expect("campaign graphs");
    let report = run_campaign(&spec, Jobs::AUTO).expect("campaign runs");
    Campaign { graphs, report }
}

fn criterion_1() -> Outcome {
    let mut mismatches = Vec::new();
    let mut graphs = 0;
    for n in 0..=7 {
        let e = enumerate_all(n).unwrap();
        if e.len() as u64 != burnside_count(n) {
            mismatches.push(format!("n={n}: {} classes, Burnside says {}", e.len(), burnside_count(n)));
        }
        let perms = permutations(n);
        let distinct: HashSet<u64> = e.iter().map(|g| brute_canonical(&g, &perms)).collect();
        if distinct.len() != e.len() {
            mismatches.push(format!("n={n}: {} of {} pairwise non-isomorphic", distinct.len(), e.len()));
        }
        let list = e.to_vec();
        let bad = ordered_map(&list, Jobs::AUTO, |g| {
            let (chi, c) = chromatic_number(g).unwrap();
            let ok = chi == brute_chromatic(g)
                && proper(g, &c, None)
                && independence_number(g).0 == brute_alpha(g)
                && clique_number(g).0 == brute_omega(g);
            (!ok).then(|| g.to_graph6())
        });
        mismatches.extend(bad.into_iter().flatten());
        graphs += list.len();
    }
    outcome(
        mismatches.is_empty(),
        format!("{graphs} graphs on n <= 7 (1044 at n = 7), mismatches: {:?}", mismatches),
    )
}

fn violations(c: &Campaign) -> usize {
    c.report.aggregate.violations.len()
}

fn criterion_2(c: &Campaign) -> Outcome {
    let records = &c.report.records;
    let hypothesis_ok = c
        .graphs
        .iter()
        .all(|g| g.order() == 10 && g.max_degree() == 9 && g.degree(9).unwrap() == 9 && quartet_4k1_free(g));
    let bound_ok = records.iter().all(|r| r.bound == 8usize.max(r.omega) && r.in_hypothesis);
    let pass = violations(c) == 0 && hypothesis_ok && bound_ok && records.len() == c.graphs.len();
    outcome(
        pass,
        format!(
            "{} apex graphs on 10 vertices (9-vertex alpha <= 3 classes), violations: {}",
            records.len(),
            violations(c)
        ),
    )
}

fn criterion_3(samples: &[Campaign]) -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for c in samples {
        let n = c.graphs[0].order();
        let in_class = c.graphs.iter().all(|g| g.max_degree() >= 9 && quartet_4k1_free(g));
        pass &= in_class && c.graphs.len() == 10_000 && violations(c) == 0;
        parts.push(format!("n={n}: {} graphs, in class: {in_class}, violations: {}", c.graphs.len(), violations(c)));
    }
    outcome(pass, parts.join("; "))
}

fn criterion_4() -> Outcome {
    let mut checked = 0;
    let mut failures = Vec::new();
    for n in 1..=8 {
        let list = enumerate_all(n).unwrap().to_vec();
        let results = ordered_map(&list, Jobs::AUTO, |g| {
            let m = adjacency(g);
            let complete = g.edge_count() == n * (n - 1) / 2;
            let odd_cycle = n % 2 == 1 && n >= 3 && (0..n).all(|v| m[v].iter().filter(|&&b| b).count() == 2);
            if !g.is_connected() || complete || odd_cycle {
                return None;
            }
            let ok = match brooks_color(g) {
                Ok(c) => c.is_total() && proper(g, &c, None) && c.num_colors() <= g.max_degree(),
                Err(_) => false,
            };
            Some((g.to_graph6(), ok))
        });
        for (g6, ok) in results.into_iter().flatten() {
            checked += 1;
            if !ok {
                failures.push(g6);
            }
        }
    }
    outcome(failures.is_empty(), format!("{checked} eligible graphs on n <= 8, failures: {failures:?}"))
}

/// Random swaps plus trace replay on random extensions.
fn criterion_5(stress: &Stress) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let trials = 100_000;
    let mut improper = 0;
    let mut not_involution = 0;
    for _ in 0..trials {
        let n = rng.gen_range(2..=16);
        let g = random_graph(n, rng.gen_range(0.1..0.9), &mut rng);
        let k = g.max_degree() + 1 + rng.gen_range(0..2);
        let c = random_coloring(&g, None, k.max(2), &mut rng).unwrap();
        let v = rng.gen_range(0..n);
        let i = c.get(v).unwrap();
        let mut j = rng.gen_range(1..=c.palette() as Color);
        if j == i {
            j = if i == 1 { 2 } else { 1 };
        }
        let chain = kempe_component(&g, &c, v, i, j).unwrap();
        let swapped = kempe_swap(&g, &c, &chain).unwrap();
        if !proper(&g, &swapped, None) {
            improper += 1;
        }
        if kempe_swap(&g, &swapped, &chain).ok().as_ref() != Some(&c) {
            not_involution += 1;
        }
    }
    let pass = improper == 0 && not_involution == 0 && stress.replay_mismatches == 0;
    outcome(
        pass,
        format!(
            "{trials} swaps: {improper} improper, {not_involution} not involutive; {} traces replayed, {} mismatches",
            stress.replayed, stress.replay_mismatches
        ),
    )
}

#[derive(Default)]
struct BkTally {
    runs: usize,
    tactic_only: usize,
    outside_bound: usize,
    improper: usize,
    extensions: usize,
    fallbacks: usize,
    law_checked: usize,
    law_broken: usize,
}

/// Exactly `Δ - 2` colors once and one color twice on `N(u)`, counted directly.
fn launch_shape(g: &Graph, c: &Coloring, u: usize, delta: usize) -> bool {
    let mut counts = vec![0usize; c.palette() + 1];
    for v in g.neighbors(u).iter() {
        counts[c.as_slice()[v] as usize] += 1;
    }
    let once = counts[1..].iter().filter(|&&x| x == 1).count();
    let twice = counts[1..].iter().filter(|&&x| x == 2).count();
    let other = counts[1..].iter().filter(|&&x| x > 2).count();
    once + 2 == delta && twice == 1 && other == 0
}

fn tally_bk(graphs: &[Graph], tally: &mut BkTally) {
    let results = ordered_map(graphs, Jobs::AUTO, |g| {
        let run = bk_color_with(g, &BkOptions::default()).unwrap();
        let bound = brute_omega_fast(g).max(g.max_degree() - 1);
        let law: Vec<bool> = run
            .extensions
            .iter()
            .filter(|e| e.launch_law_applies())
            .map(law_holds)
            .collect();
        (
            run.tactic_only(),
            run.coloring.num_colors() <= bound,
            proper(g, &run.coloring, None) && run.coloring.is_total(),
            run.extensions.len(),
            run.fallbacks,
            law,
        )
    });
    for (only, within, ok, ext, fb, law) in results {
        tally.runs += 1;
        tally.tactic_only += only as usize;
        tally.outside_bound += !within as usize;
        tally.improper += !ok as usize;
        tally.extensions += ext;
        tally.fallbacks += fb;
        tally.law_checked += law.len();
        tally.law_broken += law.iter().filter(|&&b| !b).count();
    }
}

fn brute_omega_fast(g: &Graph) -> usize {
    if g.order() <= 12 {
        brute_omega(g)
    } else {
        clique_number(g).0
    }
}

/// Recounts the colors around the center of a failed extension.
fn law_holds(e: &ExtensionEvent) -> bool {
    let trace = e.trace.as_ref().expect("failures keep their trace");
    let level = Graph::from_graph6(e.level_graph6.as_deref().expect("failures keep their graph")).unwrap();
    launch_shape(&level, &trace.initial, trace.center, level.max_degree()) && e.launch_configuration == Some(true)
}

fn criterion_6_and_7(apex: &Campaign, samples: &[Campaign], stress: &Stress) -> (Outcome, Outcome) {
    let mut tally = BkTally::default();
    tally_bk(&apex.graphs, &mut tally);
    for c in samples {
        tally_bk(&c.graphs, &mut tally);
    }
    let rate = tally.tactic_only as f64 / tally.runs.max(1) as f64;
    let six = outcome(
        tally.outside_bound == 0 && tally.improper == 0,
        format!(
            "{} runs, {} outside bound, {} improper; tactic-only success rate {:.4} ({} of {}), {} extensions, {} fallbacks",
            tally.runs, tally.outside_bound, tally.improper, rate, tally.tactic_only, tally.runs, tally.extensions, tally.fallbacks
        ),
    );
    let seven = outcome(
        tally.law_broken == 0 && stress.law_broken == 0,
        format!(
            "campaign failures checked: {} ({} broken); stress extensions: {} attempted, {} failed ({} with omega <= 8), {} broken",
            tally.law_checked,
            tally.law_broken,
            stress.attempts,
            stress.failures,
            stress.failures_below_clique_bound,
            stress.law_broken
        ),
    );
    (six, seven)
}

fn criterion_8(apex: &Campaign) -> Outcome {
    let mut checked = 0;
    let mut mismatches = Vec::new();
    let mut check = |g: &Graph| {
        checked += 1;
        let text = g.to_graph6();
        if Graph::from_graph6(&text).as_ref() != Ok(g) {
            mismatches.push(text);
        }
    };
    for n in 0..=7 {
        enumerate_all(n).unwrap().iter().for_each(|g| check(&g));
    }
    apex.graphs.iter().for_each(&mut check);
    for (g, r) in apex.graphs.iter().zip(&apex.report.records) {
        if r.graph6 != g.to_graph6() {
            mismatches.push(r.graph6.clone());
        }
    }
    let vectors = [
        ("C~", Graph::complete(4).unwrap()),
        ("C?", Graph::empty(4).unwrap()),
        ("Dhc", Graph::cycle(5).unwrap()),
    ];
    for (text, g) in &vectors {
        checked += 1;
        if Graph::from_graph6(text).as_ref() != Ok(g) || g.to_graph6() != *text {
            mismatches.push(text.to_string());
        }
    }
    outcome(mismatches.is_empty(), format!("{checked} round trips, mismatches: {mismatches:?}"))
}

/// Extensions from random 8-colorings of `H` at the apex of every campaign
/// graph. Campaign colorings almost never leave the apex without a free
/// color, so this is where the tactics and the launch law get exercised.
/// Graphs with `ω = 9` cannot be extended at all and always fail.
#[derive(Default)]
struct Stress {
    attempts: usize,
    failures: usize,
    /// Failures on graphs with `ω ≤ 8`, where an 8-coloring exists.
    failures_below_clique_bound: usize,
    law_broken: usize,
    replayed: usize,
    replay_mismatches: usize,
}

fn stress_extensions(apex: &Campaign) -> Stress {
    let results = ordered_map(
        &apex.graphs.iter().enumerate().collect::<Vec<_>>(),
        Jobs::AUTO,
        |&(i, g)| {
            let mut rng = ChaCha8Rng::seed_from_u64(i as u64);
            let c = random_coloring(g, Some(9), 8, &mut rng)?;
            let ext = extend_coloring(g, 9, &c, 8, CascadeConfig::default()).unwrap();
            let replay = ext.trace.replay();
            let replay_ok = match &ext.coloring {
                Some(done) => {
                    replay.as_ref().map(|r| serde_json::to_string(r).unwrap()) == Some(serde_json::to_string(done).unwrap())
                        && proper(g, done, None)
                }
                None => replay.is_some(),
            };
            let failed = ext.coloring.is_none();
            let law_ok = !failed || launch_shape(g, &c, 9, 9);
            Some((failed, law_ok, replay_ok, brute_omega(g) > 8))
        },
    );
    let mut s = Stress::default();
    for (failed, law_ok, replay_ok, big_clique) in results.into_iter().flatten() {
        s.attempts += 1;
        s.failures += failed as usize;
        s.failures_below_clique_bound += (failed && !big_clique) as usize;
        s.law_broken += !law_ok as usize;
        s.replayed += 1;
        s.replay_mismatches += !replay_ok as usize;
    }
    s
}

fn main() {
    let start = Instant::now();
    let mut lines: Vec<(usize, &str, Outcome)> = Vec::new();

    lines.push((1, "solver oracle equivalence", criterion_1()));

    let apex = campaign(CampaignSpec::new(10..=10, ClassFilter::FourK1FreeWithApex, Mode::Exhaustive));
    let samples: Vec<Campaign> = [(12, 1201), (14, 1401), (16, 1601)]
        .into_iter()
        .map(|(n, seed)| {
            campaign(CampaignSpec::new(n..=n, ClassFilter::FourK1Free, Mode::Sample { count: 10_000, seed }))
        })
        .collect();
    let stress = stress_extensions(&apex);

    lines.push((2, "bound on every apex graph at n = 10", criterion_2(&apex)));
    lines.push((3, "bound on sampled graphs at n = 12, 14, 16", criterion_3(&samples)));
    lines.push((4, "Brooks construction on n <= 8", criterion_4()));
    lines.push((5, "Kempe swaps and trace replay", criterion_5(&stress)));
    let (six, seven) = criterion_6_and_7(&apex, &samples, &stress);
    lines.push((6, "bk_color within the bound", six));
    lines.push((7, "launch-configuration law on failures", seven));
    lines.push((8, "graph6 fidelity", criterion_8(&apex)));

    let mut failed = 0;
    for (id, name, o) in &lines {
        let word = if o.pass { "PASS" } else { "FAIL" };
        failed += !o.pass as usize;
        println!("{word} [{id}] {name}: {}", o.detail);
    }
    println!("acceptance: {} of {} criteria passed in {:.1?}", lines.len() - failed, lines.len(), start.elapsed());
    if failed > 0 {
        std::process::exit(1);
    }
}
