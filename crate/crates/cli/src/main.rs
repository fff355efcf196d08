use std::fs;
use std::io::{self, BufRead, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use bklab::coloring::{brooks_color, chromatic_number, dsatur_color};
use bklab::kempe::{bk_color_with, BkOptions, CascadeConfig, DEFAULT_TACTIC_DEPTH};
use bklab::par::Jobs;
use bklab::structure::{clique_number, independence_number, is_4k1_free};
use bklab::verify::{
    alpha_at_most, audit_config, collect_graphs, enumerate_graphs, ingest_graph6_stream, run_campaign,
    verify_bound, Aggregate, CampaignSpec, ClassFilter, ConfigAudit, Mode, VerificationReport, DEFAULT_DENSITY,
};
use bklab::{Color, Coloring, Graph};

const EXIT_OK: u8 = 0;
const EXIT_ERROR: u8 = 1;
const EXIT_VIOLATION: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "bk-lab", version, about = "Check χ ≤ max{Δ-1, ω} on 4K1-free graphs")]
struct Cli {
    /// Graph6 file, or an inline graph6 string; standard input if absent
    #[arg(short, long, global = true)]
    input: Option<String>,
    /// Write results here instead of standard output
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Worker threads for campaigns (default: all cores)
    #[arg(long, env = "BK_LAB_JOBS", global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report n, Δ, α, ω, χ, 4K1-freeness and the bound for each input graph
    Analyze,
    /// Color each input graph
    Color(ColorArgs),
    /// Run a verification campaign, or check each input graph if --n is absent
    Verify(VerifyArgs),
    /// Print one graph6 line per isomorphism class
    Enumerate(EnumerateArgs),
    /// Evaluate the structural predicates on a colored configuration
    Audit(AuditArgs),
}

#[derive(Args, Debug)]
#[group(multiple = false)]
struct MethodFlags {
    /// Exact chromatic number (default)
    #[arg(long)]
    exact: bool,
    /// Recursive extension procedure; needs a 4K1-free graph with Δ ≥ 9
    #[arg(long)]
    bk: bool,
    /// Brooks construction with at most Δ colors
    #[arg(long)]
    brooks: bool,
    /// DSATUR heuristic
    #[arg(long)]
    dsatur: bool,
}

#[derive(Args, Debug)]
struct ColorArgs {
    #[command(flatten)]
    method: MethodFlags,
    /// Print the tactic trace of every extension (with --bk)
    #[arg(long)]
    trace: bool,
    #[arg(long, default_value_t = DEFAULT_TACTIC_DEPTH)]
    tactic_depth: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    All,
    #[value(name = "4k1-free")]
    FourK1Free,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Vertex count or inclusive range such as 12..16
    #[arg(long, value_parser = parse_range)]
    n: Option<(usize, usize)>,
    /// Enumerate every graph (default unless --sample is given)
    #[arg(long, conflicts_with = "sample")]
    exhaustive: bool,
    /// Rejection-sample this many graphs per order
    #[arg(long, value_name = "N")]
    sample: Option<usize>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 9)]
    min_delta: usize,
    /// Prune exhaustive enumeration to α ≤ this value
    #[arg(long)]
    alpha_max: Option<usize>,
    /// Apex every 4K1-free graph on n - 1 vertices
    #[arg(long)]
    apex_campaign: bool,
    /// Graph class for non-apex campaigns
    #[arg(long, value_enum, default_value_t = ClassArg::FourK1Free, conflicts_with = "apex_campaign")]
    class: ClassArg,
    /// Edge probability for sampling
    #[arg(long, default_value_t = DEFAULT_DENSITY)]
    density: f64,
    #[arg(long, default_value_t = DEFAULT_TACTIC_DEPTH)]
    tactic_depth: usize,
    /// Attach extension traces to the records
    #[arg(long)]
    trace: bool,
    /// Record per-graph wall-clock time
    #[arg(long)]
    timings: bool,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    alpha_max: Option<usize>,
}

#[derive(Args, Debug)]
struct AuditArgs {
    /// Lines of "vertex color", vertices from 0, colors from 1
    #[arg(long)]
    coloring: PathBuf,
    /// The uncolored center vertex
    #[arg(long)]
    center: usize,
    /// Palette size (default Δ - 1, or the largest color if bigger)
    #[arg(long)]
    palette: Option<usize>,
}

fn parse_range(s: &str) -> std::result::Result<(usize, usize), String> {
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
        None => match s.split_once('-') {
            Some((a, b)) => (parse(a)?, parse(b)?),
            None => {
                let n = parse(s)?;
                (n, n)
            }
        },
    };
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

struct Ctx {
    format: Format,
    jobs: Jobs,
    out: Box<dyn Write>,
}

impl Ctx {
    fn emit(&mut self, text: &str) -> Result<()> {
        self.out.write_all(text.as_bytes()).context("writing output")
    }

    fn emit_json(&mut self, value: &Value) -> Result<()> {
        let text = serde_json::to_string_pretty(value)?;
        self.emit(&text)?;
        self.emit("\n")
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    let out: Box<dyn Write> = match &cli.output {
        Some(p) => Box::new(io::BufWriter::new(
            fs::File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(io::BufWriter::new(io::stdout().lock())),
    };
    if cli.jobs == Some(0) {
        bail!("--jobs must be at least 1");
    }
    let mut ctx = Ctx {
        format: cli.format,
        jobs: Jobs(cli.jobs),
        out,
    };
    let input = cli.input.as_deref();
    let code = match &cli.command {
        Command::Analyze => cmd_analyze(&mut ctx, input)?,
        Command::Color(args) => cmd_color(&mut ctx, input, args)?,
        Command::Verify(args) => cmd_verify(&mut ctx, input, args)?,
        Command::Enumerate(args) => cmd_enumerate(&mut ctx, args)?,
        Command::Audit(args) => cmd_audit(&mut ctx, input, args)?,
    };
    ctx.out.flush()?;
    Ok(code)
}

/// Graphs from a file, an inline graph6 string, or standard input.
/// Malformed lines are reported on stderr; the flag says whether any were.
fn read_graphs(input: Option<&str>) -> Result<(Vec<Graph>, bool)> {
    let text = match input {
        Some(s) if Path::new(s).is_file() => fs::read_to_string(s).with_context(|| format!("reading {s}"))?,
        Some(s) => s.to_string(),
        None => {
            let mut buf = String::new();
            io::stdin().lock().read_to_string(&mut buf).context("reading standard input")?;
            buf
        }
    };
    let (graphs, errors) = collect_graphs(ingest_graph6_stream(text.as_bytes()))?;
    for e in &errors {
        eprintln!("error: {e}");
    }
    Ok((graphs.into_iter().map(|(_, g)| g).collect(), !errors.is_empty()))
}

fn read_one_graph(input: Option<&str>) -> Result<Graph> {
    let (mut graphs, bad) = read_graphs(input)?;
    if bad {
        bail!("malformed graph input");
    }
    match graphs.len() {
        1 => Ok(graphs.remove(0)),
        0 => bail!("no graph in input"),
        n => bail!("expected one graph, found {n}"),
    }
}

fn cmd_analyze(ctx: &mut Ctx, input: Option<&str>) -> Result<u8> {
    let (graphs, bad) = read_graphs(input)?;
    let mut results = Vec::new();
    for g in &graphs {
        let delta = g.max_degree();
        let (alpha, _) = independence_number(g);
        let (omega, _) = clique_number(g);
        let (chi, _) = chromatic_number(g)?;
        let bound = omega.max(delta.saturating_sub(1));
        results.push(json!({
            "graph6": g.to_graph6(),
            "n": g.order(),
            "delta": delta,
            "alpha": alpha,
            "omega": omega,
            "chi": chi,
            "four_k1_free": is_4k1_free(g),
            "bound": bound,
            "holds": chi <= bound,
        }));
    }
    match ctx.format {
        Format::Json if results.len() == 1 => ctx.emit_json(&results[0])?,
        Format::Json => ctx.emit_json(&Value::Array(results))?,
        Format::Text => {
            let keys = ["graph6", "n", "delta", "alpha", "omega", "chi", "four_k1_free", "bound", "holds"];
            let mut text = String::new();
            for (i, r) in results.iter().enumerate() {
                if i > 0 {
                    text.push('\n');
                }
                for k in keys {
                    text.push_str(&format!("{k}: {}\n", plain(&r[k])));
                }
            }
            ctx.emit(&text)?;
        }
    }
    Ok(if bad { EXIT_ERROR } else { EXIT_OK })
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn cmd_color(ctx: &mut Ctx, input: Option<&str>, args: &ColorArgs) -> Result<u8> {
    let (graphs, bad) = read_graphs(input)?;
    let m = &args.method;
    let method = if m.bk {
        "bk"
    } else if m.brooks {
        "brooks"
    } else if m.dsatur {
        "dsatur"
    } else {
        "exact"
    };
    let mut results = Vec::new();
    let mut text = String::new();
    for g in &graphs {
        let mut traces = Vec::new();
        let coloring: Coloring = match method {
            "bk" => {
                let opts = BkOptions {
                    cascade: CascadeConfig::with_depth(args.tactic_depth),
                    keep_traces: args.trace,
                };
                let run = bk_color_with(g, &opts)?;
                traces = run.extensions.into_iter().filter_map(|e| e.trace).collect();
                run.coloring
            }
            "brooks" => brooks_color(g)?,
            "dsatur" => dsatur_color(g),
            _ => chromatic_number(g)?.1,
        };
        coloring.check_proper(g)?;
        let colors = coloring.num_colors();
        if !text.is_empty() {
            text.push('\n');
        }
        text.push_str(&format!("graph6: {}\nmethod: {method}\ncolors: {colors}\n", g.to_graph6()));
        for (v, c) in coloring.as_slice().iter().enumerate() {
            text.push_str(&format!("{v} {c}\n"));
        }
        for t in &traces {
            text.push_str(&format!("trace center {}\n", t.center));
            text.push_str(&t.to_log());
        }
        results.push(json!({
            "graph6": g.to_graph6(),
            "method": method,
            "colors": colors,
            "coloring": coloring.as_slice(),
            "traces": traces,
        }));
    }
    match ctx.format {
        Format::Json if results.len() == 1 => ctx.emit_json(&results[0])?,
        Format::Json => ctx.emit_json(&Value::Array(results))?,
        Format::Text => ctx.emit(&text)?,
    }
    Ok(if bad { EXIT_ERROR } else { EXIT_OK })
}

fn cmd_verify(ctx: &mut Ctx, input: Option<&str>, args: &VerifyArgs) -> Result<u8> {
    let class_filter = if args.apex_campaign {
        ClassFilter::FourK1FreeWithApex
    } else {
        match args.class {
            ClassArg::All => ClassFilter::All,
            ClassArg::FourK1Free => ClassFilter::FourK1Free,
        }
    };
    let mode = match args.sample {
        Some(count) => Mode::Sample { count, seed: args.seed },
        None => Mode::Exhaustive,
    };
    let (lo, hi) = args.n.unwrap_or((0, 0));
    let spec = CampaignSpec {
        min_delta: args.min_delta,
        tactic_depth: args.tactic_depth,
        alpha_max: args.alpha_max,
        density: args.density,
        record_timings: args.timings,
        include_traces: args.trace,
        ..CampaignSpec::new(lo..=hi, class_filter, mode)
    };
    let mut bad_input = false;
    let report = if args.n.is_some() {
        run_campaign(&spec, ctx.jobs)?
    } else {
        if args.apex_campaign || args.sample.is_some() || args.exhaustive {
            bail!("campaign flags need --n");
        }
        let (graphs, bad) = read_graphs(input)?;
        bad_input = bad;
        let records = graphs.iter().map(|g| verify_bound(g, &spec)).collect::<bklab::Result<Vec<_>>>()?;
        let aggregate = Aggregate::of(&records);
        VerificationReport {
            spec,
            records,
            aggregate,
        }
    };
    match ctx.format {
        Format::Json => {
            let text = report.to_json();
            ctx.emit(&text)?;
            ctx.emit("\n")?;
        }
        Format::Text => ctx.emit(&report.summary())?,
    }
    let violations = report.aggregate.violations.len();
    if violations > 0 {
        eprintln!("{violations} violation(s) of the bound");
        return Ok(EXIT_VIOLATION);
    }
    Ok(if bad_input { EXIT_ERROR } else { EXIT_OK })
}

fn cmd_enumerate(ctx: &mut Ctx, args: &EnumerateArgs) -> Result<u8> {
    let e = match args.alpha_max {
        Some(a) => enumerate_graphs(args.n, alpha_at_most(a), ctx.jobs)?,
        None => enumerate_graphs(args.n, |_: &Graph| true, ctx.jobs)?,
    };
    match ctx.format {
        Format::Text => {
            let mut text = String::new();
            for g in e.iter() {
                text.push_str(&g.to_graph6());
                text.push('\n');
            }
            ctx.emit(&text)?;
        }
        Format::Json => {
            let lines: Vec<String> = e.iter().map(|g| g.to_graph6()).collect();
            ctx.emit_json(&json!({ "n": args.n, "count": lines.len(), "graphs": lines }))?;
        }
    }
    eprintln!("{} graphs on {} vertices", e.len(), args.n);
    Ok(EXIT_OK)
}

fn read_coloring(path: &Path, n: usize) -> Result<Vec<Color>> {
    let file = fs::File::open(path).with_context(|| format!("opening {}", path.display()))?;
    let mut colors = vec![0 as Color; n];
    for (i, line) in io::BufReader::new(file).lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let (Some(v), Some(c), None) = (parts.next(), parts.next(), parts.next()) else {
            bail!("{}:{}: expected \"vertex color\"", path.display(), i + 1);
        };
        let v: usize = v.parse().with_context(|| format!("{}:{}: bad vertex", path.display(), i + 1))?;
        let c: Color = c.parse().with_context(|| format!("{}:{}: bad color", path.display(), i + 1))?;
        if v >= n {
            bail!("{}:{}: vertex {v} out of range for {n} vertices", path.display(), i + 1);
        }
        if c == 0 {
            bail!("{}:{}: colors start at 1", path.display(), i + 1);
        }
        colors[v] = c;
    }
    Ok(colors)
}

fn cmd_audit(ctx: &mut Ctx, input: Option<&str>, args: &AuditArgs) -> Result<u8> {
    let g = read_one_graph(input)?;
    if args.center >= g.order() {
        bail!("center {} out of range for {} vertices", args.center, g.order());
    }
    let mut colors = read_coloring(&args.coloring, g.order())?;
    colors[args.center] = 0;
    let largest = colors.iter().copied().max().unwrap_or(0) as usize;
    let palette = args
        .palette
        .unwrap_or_else(|| largest.max(g.max_degree().saturating_sub(1)));
    let coloring = Coloring::from_colors(colors, palette)?;
    let audit = audit_config(&g, &coloring, args.center)?;
    match ctx.format {
        Format::Json => ctx.emit_json(&serde_json::to_value(&audit)?)?,
        Format::Text => {
            let text = match &audit {
                ConfigAudit::NotApplicable { reason } => format!("NOT_APPLICABLE: {reason}\n"),
                ConfigAudit::Audited(l) => {
                    let mut t = format!(
                        "delta: {}\ncase: {:?}\npair: color {} on {} and {}\n",
                        l.delta, l.case, l.pair_color, l.x, l.y
                    );
                    for (name, verdict) in l.verdicts() {
                        let v = serde_json::to_value(verdict)?;
                        let word = v["verdict"].as_str().ok_or_else(|| anyhow!("verdict tag"))?.to_uppercase();
                        match v.get("witness") {
                            Some(w) => t.push_str(&format!("{name:<17} {word} {w}\n")),
                            None => t.push_str(&format!("{name:<17} {word}\n")),
                        }
                    }
                    t
                }
            };
            ctx.emit(&text)?;
        }
    }
    Ok(EXIT_OK)
}
