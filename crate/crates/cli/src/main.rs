//! `tdl`: compute, construct and verify total difference labelings.
//!
//! Exit codes: 0 ok, 1 usage or parse error, 2 indeterminate result,
//! 3 verification failure, 4 sweep disagreement.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use tdl_core::constructions::{closed_form, construct, ConstructionResult};
use tdl_core::lobster::m_table;
use tdl_core::solver::{bounds, chi_td};
use tdl_core::verifier::find_violations;
use tdl_core::{BoundsResult, FamilySpec, Graph, Labeling, SearchOptions};

const EXIT_INDETERMINATE: u8 = 2;
const EXIT_VERIFY_FAILED: u8 = 3;
const EXIT_DISAGREEMENT: u8 = 4;

#[derive(Parser)]
#[command(name = "tdl", version, about = "Total difference labelings of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute chi_td exactly by search.
    Chi(ChiArgs),
    /// Emit a family's constructive labeling.
    Construct(ConstructArgs),
    /// Check a labeling against a graph.
    Verify(VerifyArgs),
    /// Construct, verify and optionally solve a range of family instances.
    Sweep(SweepArgs),
    /// Print the table of greedy tertiary maxima m(r, s).
    LobsterTable(TableArgs),
    /// Print theorem-based bounds.
    Bounds(BoundsArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Star,
    Wheel,
    Gear,
    Helm,
    Caterpillar,
    Lobster,
    UniformTree,
}

#[derive(Args, Clone, Default)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: Option<Family>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    /// Caterpillar spine degrees, comma separated.
    #[arg(long, value_delimiter = ',')]
    spine: Vec<usize>,
    #[arg(long)]
    delta: Option<usize>,
    #[arg(long)]
    h: Option<usize>,
    #[arg(long)]
    delta1: Option<usize>,
    #[arg(long)]
    delta2: Option<usize>,
}

fn need(v: Option<usize>, flag: &str) -> Result<usize> {
    v.with_context(|| format!("--{flag} is required for this family"))
}

impl FamilyArgs {
    fn spec(&self) -> Result<FamilySpec> {
        let family = self.family.context("--family is required")?;
        let spec = match family {
            Family::Path => FamilySpec::Path(need(self.n, "n")?),
            Family::Cycle => FamilySpec::Cycle(need(self.n, "n")?),
            Family::Star => FamilySpec::Star(need(self.m.or(self.n), "m")?),
            Family::Wheel => FamilySpec::Wheel(need(self.n, "n")?),
            Family::Gear => FamilySpec::Gear(need(self.n, "n")?),
            Family::Helm => FamilySpec::Helm(need(self.n, "n")?),
            Family::Caterpillar => {
                if self.spine.is_empty() {
                    bail!("--spine is required for caterpillars");
                }
                FamilySpec::Caterpillar(self.spine.clone())
            }
            Family::Lobster => FamilySpec::MaximalLobster {
                n: need(self.n, "n")?,
                delta1: need(self.delta1, "delta1")?,
                delta2: need(self.delta2, "delta2")?,
            },
            Family::UniformTree => FamilySpec::UniformTree {
                delta: need(self.delta, "delta")?,
                height: need(self.h, "h")?,
            },
        };
        spec.validate()?;
        Ok(spec)
    }

    /// The same family with its sweep parameter set to `value`.
    fn with_sweep_value(&self, value: usize) -> Result<FamilySpec> {
        let mut a = self.clone();
        match a.family.context("--family is required")? {
            Family::Star => a.m = Some(value),
            Family::UniformTree => a.delta = Some(value),
            Family::Caterpillar => bail!("caterpillars cannot be swept; use chi or construct per spine"),
            _ => a.n = Some(value),
        }
        a.spec()
    }
}

#[derive(Args)]
struct SearchArgs {
    /// Give up after this k.
    #[arg(long)]
    max_k: Option<u64>,
    /// Search nodes per decision run.
    #[arg(long, env = "TDL_NODE_LIMIT")]
    node_limit: Option<u64>,
    /// Wall-clock budget in seconds.
    #[arg(long)]
    time_limit: Option<f64>,
}

impl SearchArgs {
    fn options(&self) -> Result<SearchOptions> {
        let time_limit = match self.time_limit {
            Some(s) if !(s.is_finite() && s > 0.0) => bail!("--time-limit must be a positive number of seconds"),
            s => s.map(Duration::from_secs_f64),
        };
        let opts = SearchOptions {
            max_k: self.max_k,
            node_limit: self.node_limit,
            time_limit,
            ..Default::default()
        };
        opts.validate()?;
        Ok(opts)
    }
}

#[derive(Args)]
struct ChiArgs {
    /// Edge-list file; alternative to --family.
    #[arg(long, conflicts_with = "family")]
    input: Option<PathBuf>,
    #[command(flatten)]
    family: FamilyArgs,
    #[command(flatten)]
    search: SearchArgs,
    /// Write the witness labeling here as JSON.
    #[arg(long)]
    witness_out: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ConstructArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Labeling JSON destination; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Edge-list destination for the family graph.
    #[arg(long)]
    graph_out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    labeling: PathBuf,
    /// Largest label allowed; defaults to the largest label used.
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    Exact,
    VerifyOnly,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long)]
    from: usize,
    #[arg(long)]
    to: usize,
    #[arg(long, value_enum, default_value = "verify-only")]
    check: Check,
    /// Worker threads; instances run in parallel, each solve single-threaded.
    #[arg(long, default_value_t = 1)]
    parallel: usize,
    #[command(flatten)]
    search: SearchArgs,
    /// Print the report as JSON instead of a table.
    #[arg(long)]
    json: bool,
    /// Also write the JSON report here.
    #[arg(long)]
    json_out: Option<PathBuf>,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    delta1: u64,
    #[arg(long)]
    delta2: u64,
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long, conflicts_with = "family")]
    input: Option<PathBuf>,
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long)]
    json: bool,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn load_graph(path: &Path) -> Result<Graph> {
    Graph::parse_edge_list(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn input_graph(input: &Option<PathBuf>, family: &FamilyArgs) -> Result<(String, Graph)> {
    match input {
        Some(path) => Ok((path.display().to_string(), load_graph(path)?)),
        None => {
            let spec = family.spec()?;
            Ok((spec.to_string(), spec.build()?.0))
        }
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("report serializes"));
}

fn print_bounds(b: &BoundsResult) {
    println!("lower: {} ({})", b.lower, b.lower_reason);
    println!("upper: {} ({})", b.upper, b.upper_reason);
}

fn cmd_chi(a: ChiArgs) -> Result<u8> {
    let (name, g) = input_graph(&a.input, &a.family)?;
    let opts = a.search.options()?;
    let result = chi_td(&g, &opts)?;
    if let (Some(path), Some(w)) = (&a.witness_out, &result.witness) {
        write(path, &w.to_json())?;
    }
    if a.json {
        print_json(&result);
    } else {
        println!("graph: {name} ({} vertices, {} edges)", g.vertex_count(), g.edge_count());
        print_bounds(&result);
        match (result.exact, &result.witness) {
            (Some(k), Some(w)) => {
                println!("chi_td: {k}");
                match &a.witness_out {
                    Some(path) => println!("witness: {}", path.display()),
                    None => println!("witness: {:?}", w.vertex_labels),
                }
            }
            _ if opts.max_k.is_some_and(|m| result.lower > m) => {
                println!("no labeling with k <= {}", opts.max_k.unwrap());
            }
            _ => println!("chi_td: indeterminate within budget"),
        }
    }
    Ok(if result.exact.is_some() { 0 } else { EXIT_INDETERMINATE })
}

fn cmd_construct(a: ConstructArgs) -> Result<u8> {
    let spec = a.family.spec()?;
    let c = construct(&spec)?;
    if let Some(path) = &a.graph_out {
        write(path, &spec.build()?.0.to_edge_list())?;
    }
    let json = c.to_json();
    match &a.out {
        Some(path) => {
            write(path, &json)?;
            println!("{spec}: claimed k = {}, tight = {}, repaired = {}", c.claimed_k, c.tight, c.repaired);
            println!("provenance: {}", c.provenance);
        }
        None => println!("{json}"),
    }
    Ok(0)
}

fn cmd_verify(a: VerifyArgs) -> Result<u8> {
    let g = load_graph(&a.graph)?;
    let labeling = Labeling::from_json(&read(&a.labeling)?)
        .with_context(|| format!("parsing {}", a.labeling.display()))?;
    let report = find_violations(&g, &labeling)?;
    let k = a.k.unwrap_or_else(|| labeling.max_label());
    let within = labeling.max_label() <= k;
    let doc = report.to_doc(k, within);
    if a.json {
        print_json(&doc);
    } else {
        for v in &doc.violations {
            println!("{:?}: vertices {:?} labels {:?}", v.kind, v.vertices, v.labels);
        }
        if !within {
            println!("largest label {} exceeds k = {k}", labeling.max_label());
        }
        if doc.ok {
            println!("clean, k = {k}");
        } else {
            println!("{} violation(s)", doc.violations.len());
        }
    }
    Ok(if doc.ok { 0 } else { EXIT_VERIFY_FAILED })
}

#[derive(Serialize)]
struct SweepRow {
    spec: String,
    theorem_lower: u64,
    theorem_upper: u64,
    theorem_exact: Option<u64>,
    claimed_k: u64,
    solver_value: Option<u64>,
    witness_ok: bool,
    agree: bool,
    elapsed_ms: u128,
}

#[derive(Serialize)]
struct SweepReport {
    rows: Vec<SweepRow>,
    all_agree: bool,
}

fn sweep_row(spec: &FamilySpec, check: Check, opts: &SearchOptions) -> Result<SweepRow> {
    let start = Instant::now();
    let g = spec.build()?.0;
    let theorem = closed_form(spec)?;
    let c: ConstructionResult = construct(spec)?;
    let witness_ok = find_violations(&g, &c.labeling)?.is_clean() && c.labeling.max_label() <= c.claimed_k;
    let solver_value = match check {
        Check::Exact => chi_td(&g, opts)?.exact,
        Check::VerifyOnly => None,
    };
    let agree = match (theorem.exact, solver_value) {
        (Some(t), Some(s)) => t == s,
        _ => true,
    };
    Ok(SweepRow {
        spec: spec.to_string(),
        theorem_lower: theorem.lower,
        theorem_upper: theorem.upper,
        theorem_exact: theorem.exact,
        claimed_k: c.claimed_k,
        solver_value,
        witness_ok,
        agree,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

fn cmd_sweep(a: SweepArgs) -> Result<u8> {
    if a.from > a.to {
        bail!("--from must not exceed --to");
    }
    if a.parallel == 0 {
        bail!("--parallel must be at least 1");
    }
    let specs = (a.from..=a.to)
        .map(|v| a.family.with_sweep_value(v))
        .collect::<Result<Vec<_>>>()?;
    let opts = a.search.options()?;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(a.parallel).build()?;
    let rows = pool.install(|| {
        specs
            .par_iter()
            .map(|s| sweep_row(s, a.check, &opts))
            .collect::<Result<Vec<_>>>()
    })?;
    let all_agree = rows.iter().all(|r| r.agree && r.witness_ok);
    let report = SweepReport { rows, all_agree };
    let json = serde_json::to_string_pretty(&report)?;
    if let Some(path) = &a.json_out {
        write(path, &json)?;
    }
    if a.json {
        println!("{json}");
    } else {
        println!(
            "{:<28} {:>8} {:>7} {:>7} {:>8} {:>6} {:>9}",
            "instance", "theorem", "claimed", "solver", "witness", "agree", "ms"
        );
        let opt = |v: Option<u64>| v.map_or("-".to_string(), |x| x.to_string());
        for r in &report.rows {
            let theorem = match r.theorem_exact {
                Some(t) => t.to_string(),
                None => format!("{}..{}", r.theorem_lower, r.theorem_upper),
            };
            println!(
                "{:<28} {:>8} {:>7} {:>7} {:>8} {:>6} {:>9}",
                r.spec,
                theorem,
                r.claimed_k,
                opt(r.solver_value),
                if r.witness_ok { "ok" } else { "BAD" },
                if r.agree { "yes" } else { "NO" },
                r.elapsed_ms
            );
        }
        println!("{}", if report.all_agree { "all agree" } else { "DISAGREEMENT" });
    }
    Ok(if report.all_agree { 0 } else { EXIT_DISAGREEMENT })
}

fn cmd_lobster_table(a: TableArgs) -> Result<u8> {
    let t = m_table(a.delta1, a.delta2)?;
    print!("{}", if a.csv { t.to_csv() } else { t.to_text() });
    Ok(0)
}

fn cmd_bounds(a: BoundsArgs) -> Result<u8> {
    let result = match &a.input {
        Some(path) => bounds(&load_graph(path)?)?,
        None => closed_form(&a.family.spec()?)?,
    };
    if a.json {
        print_json(&result);
    } else {
        print_bounds(&result);
        if let Some(k) = result.exact {
            println!("exact: {k}");
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match cli.command {
        Command::Chi(a) => cmd_chi(a),
        Command::Construct(a) => cmd_construct(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::LobsterTable(a) => cmd_lobster_table(a),
        Command::Bounds(a) => cmd_bounds(a),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
