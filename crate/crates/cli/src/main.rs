use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use floodit::extremal::{
    max_moves_with, predicted_value, verify_theorem, CampaignConfig, ExtremalError, ExtremalOptions, PredictQuery,
};
use floodit::io::{parse_certificate, parse_graph, write_certificate, write_graph};
use floodit::solvers::{min_moves_exact_with_budget, DEFAULT_BUDGET};
use floodit::strategies::{
    arbitrary_blowup_strategy, dominating_path_strategy, path_colouring_strategy, radius_strategy,
    rainbow_blowup_strategy,
};
use floodit::{
    blowup_graph, gen_colouring, gen_graph, play_certificate, Base, Certificate, Colour, ColouredGraph, ColouringSpec,
    FamilySpec, Graph, SolveError, SolveQuery,
};

#[derive(Parser)]
#[command(name = "floodit", version, about = "Free Flood-It on coloured graphs")]
struct Cli {
    /// Print one JSON document instead of key: value lines.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a coloured graph in floodgraph format.
    Gen(GenArgs),
    /// Minimum number of moves to flood a graph.
    Solve(SolveArgs),
    /// Largest minimum move count over all surjective colourings.
    Extremal(ExtremalArgs),
    /// Run a constructive strategy and write its certificate.
    Strategy(StrategyArgs),
    /// Check a named claim over a parameter grid.
    Verify(VerifyArgs),
    /// Replay a certificate against a graph.
    CheckCert(CheckCertArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Star,
    BlowupPath,
    BlowupCycle,
    Tree,
    Grid,
    Random,
}

#[derive(Args)]
struct ShapeArgs {
    #[arg(long, value_enum)]
    family: Option<Family>,
    /// Vertex count (path, cycle, random) or columns (grid).
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    leaves: Option<usize>,
    /// Class sizes, comma separated.
    #[arg(long, value_delimiter = ',')]
    sizes: Vec<usize>,
    /// Rows of a grid.
    #[arg(long)]
    k: Option<usize>,
    /// Leg colour count of `T_{c,r}`.
    #[arg(long)]
    tree_c: Option<usize>,
    /// Leg depth of `T_{c,r}`.
    #[arg(long)]
    tree_r: Option<usize>,
    #[arg(long, default_value_t = 30)]
    edge_percent: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Scheme {
    Rainbow,
    Shifted,
    Wrapped,
    CycleRainbow,
    Path,
    Scr,
    Remark,
    Random,
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    shape: ShapeArgs,
    #[arg(long, value_enum, default_value = "rainbow")]
    colouring: Scheme,
    /// Colour count.
    #[arg(long, short)]
    c: Option<usize>,
    /// Shift of a shifted, wrapped or cycle rainbow.
    #[arg(long, default_value_t = 0)]
    shift: usize,
    /// Colour per base position for `--colouring path`.
    #[arg(long, value_delimiter = ',')]
    f: Vec<u8>,
    #[arg(long, default_value_t = 0)]
    colouring_seed: u64,
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    target_colour: Option<usize>,
    /// Vertices that must end in one component.
    #[arg(long, value_delimiter = ',')]
    target: Vec<usize>,
    /// Largest number of stored search states.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Where to write the optimal certificate.
    #[arg(long)]
    cert: Option<PathBuf>,
}

#[derive(Args)]
struct ExtremalArgs {
    /// Graph file; only its shape is used.
    #[arg(long, conflicts_with = "family")]
    graph: Option<PathBuf>,
    #[command(flatten)]
    shape: ShapeArgs,
    /// Colour count.
    #[arg(long, short)]
    c: usize,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Worker threads (default: all cores).
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyName {
    Radius,
    Rainbow,
    PathColouring,
    Arbitrary,
    Dominating,
}

#[derive(Clone, Copy, ValueEnum)]
enum BaseArg {
    Path,
    Cycle,
}

#[derive(Args)]
struct StrategyArgs {
    #[arg(long, value_enum)]
    name: StrategyName,
    #[arg(long)]
    graph: PathBuf,
    /// Class sizes of the blow-up; classes are consecutive vertex ranges.
    #[arg(long, value_delimiter = ',')]
    sizes: Vec<usize>,
    #[arg(long, value_enum, default_value = "path")]
    base: BaseArg,
    /// One vertex per class for `dominating` (default: first of each class).
    #[arg(long, value_delimiter = ',')]
    transversal: Vec<usize>,
    #[arg(long)]
    cert: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    claim: String,
    /// JSON campaign config; flags below override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    colours: Vec<usize>,
    #[arg(long)]
    instances: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    budget: Option<u64>,
    /// Where to write the JSON report.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct CheckCertArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    cert: PathBuf,
}

enum Fail {
    Verify(String),
    Usage(String),
    Budget(String),
}

impl Fail {
    fn code(&self) -> u8 {
        match self {
            Fail::Verify(_) => 1,
            Fail::Usage(_) => 2,
            Fail::Budget(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Fail::Verify(m) | Fail::Usage(m) | Fail::Budget(m) => m,
        }
    }
}

fn usage(e: impl std::fmt::Display) -> Fail {
    Fail::Usage(e.to_string())
}

fn from_solve(e: SolveError) -> Fail {
    match e {
        SolveError::BudgetExceeded { .. } | SolveError::TooLarge { .. } => Fail::Budget(e.to_string()),
        other => usage(other),
    }
}

fn from_extremal(e: ExtremalError) -> Fail {
    match e {
        ExtremalError::Solve(s) => from_solve(s),
        other => usage(other),
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = std::io::stdout().write_all(text.as_bytes());
}

/// Output sink: either `key: value` lines or one JSON object.
struct Out {
    json: bool,
    fields: serde_json::Map<String, serde_json::Value>,
}

impl Out {
    fn new(json: bool) -> Self {
        Out { json, fields: serde_json::Map::new() }
    }

    fn put(&mut self, key: &str, value: impl Into<serde_json::Value>) {
        let value = value.into();
        if !self.json {
            match &value {
                serde_json::Value::String(s) => emit(&format!("{key}: {s}\n")),
                v => emit(&format!("{key}: {v}\n")),
            }
        }
        self.fields.insert(key.to_string(), value);
    }

    fn finish(self) {
        if self.json {
            emit(&format!("{}\n", serde_json::Value::Object(self.fields)));
        }
    }
}

fn read(path: &Path) -> Result<String, Fail> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Fail> {
    fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<ColouredGraph, Fail> {
    parse_graph(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T, Fail> {
    v.ok_or_else(|| usage(format!("--{flag} is required for this family")))
}

fn family_spec(s: &ShapeArgs) -> Result<FamilySpec, Fail> {
    Ok(match need(s.family, "family")? {
        Family::Path => FamilySpec::Path { n: need(s.n, "n")? },
        Family::Cycle => FamilySpec::Cycle { n: need(s.n, "n")? },
        Family::Star => FamilySpec::Star { leaves: need(s.leaves, "leaves")? },
        Family::BlowupPath => FamilySpec::BlowupPath { sizes: s.sizes.clone() },
        Family::BlowupCycle => FamilySpec::BlowupCycle { sizes: s.sizes.clone() },
        Family::Tree => FamilySpec::TreeTcr { c: need(s.tree_c, "tree-c")?, r: need(s.tree_r, "tree-r")? },
        Family::Grid => FamilySpec::Grid { k: need(s.k, "k")?, n: need(s.n, "n")? },
        Family::Random => {
            FamilySpec::RandomConnected { n: need(s.n, "n")?, edge_percent: s.edge_percent, seed: s.seed }
        }
    })
}

fn prediction_query(spec: &FamilySpec, c: usize) -> Option<PredictQuery> {
    match *spec {
        FamilySpec::Path { n } => Some(PredictQuery::Path { n, c }),
        FamilySpec::Cycle { n } => Some(PredictQuery::Cycle { n, c }),
        FamilySpec::BlowupPath { ref sizes } => Some(PredictQuery::BlowupPath { t: sizes.len(), c }),
        FamilySpec::BlowupCycle { ref sizes } => Some(PredictQuery::BlowupCycle { t: sizes.len(), c }),
        FamilySpec::TreeTcr { c: tc, r } if tc == c => Some(PredictQuery::TreeTcr { c, r }),
        FamilySpec::Grid { k, n } => Some(PredictQuery::GridBounds { k, n, c }),
        _ => None,
    }
}

fn gen(args: &GenArgs, out: &mut Out) -> Result<(), Fail> {
    let spec = family_spec(&args.shape)?;
    let shape = gen_graph(&spec).map_err(usage)?;
    let c = || need(args.c, "c");
    let cspec = match args.colouring {
        Scheme::Rainbow => ColouringSpec::Rainbow { c: c()? },
        Scheme::Shifted => ColouringSpec::ShiftedRainbow { c: c()?, r: args.shift },
        Scheme::Wrapped => ColouringSpec::WrappedRainbow { c: c()?, r: args.shift },
        Scheme::CycleRainbow => ColouringSpec::CycleRainbow { c: c()?, r: args.shift },
        Scheme::Path => ColouringSpec::PathColouring { c: c()?, f: args.f.clone() },
        Scheme::Scr => ColouringSpec::ScrTree,
        Scheme::Remark => ColouringSpec::RemarkBichromatic { c: c()? },
        Scheme::Random => ColouringSpec::RandomSurjective { c: c()?, seed: args.colouring_seed },
    };
    let g = gen_colouring(&shape, &cspec).map_err(usage)?;
    let text = write_graph(&g);
    match &args.out {
        Some(p) => {
            write(p, &text)?;
            out.put("written", p.display().to_string());
            out.put("n", g.n());
            out.put("c", g.c());
        }
        None if out.json => out.put("graph", text),
        None => emit(&text),
    }
    Ok(())
}

fn solve(args: &SolveArgs, out: &mut Out) -> Result<(), Fail> {
    let g = load_graph(&args.graph)?;
    let mut q = SolveQuery::new(g);
    if let Some(d) = args.target_colour {
        q = q.colour(Colour::new(d));
    }
    if !args.target.is_empty() {
        q = q.target(args.target.clone());
    }
    let res = match min_moves_exact_with_budget(&q, args.budget) {
        Ok(r) => r,
        Err(SolveError::BudgetExceeded { explored, best }) => {
            out.put("upper_bound", best.moves);
            out.put("explored_states", explored);
            return Err(Fail::Budget(format!("search budget exhausted after {explored} states")));
        }
        Err(e) => return Err(from_solve(e)),
    };
    out.put("min_moves", res.moves);
    out.put("explored_states", res.explored_states);
    if let Some(p) = &args.cert {
        write(p, &write_certificate(&res.certificate))?;
        out.put("certificate", p.display().to_string());
    } else {
        out.put("moves", moves_text(&res.certificate));
    }
    Ok(())
}

fn moves_text(cert: &Certificate) -> String {
    cert.moves.iter().map(|m| format!("{}:{}", m.vertex, m.colour.index())).collect::<Vec<_>>().join(" ")
}

fn extremal(args: &ExtremalArgs, out: &mut Out) -> Result<(), Fail> {
    let (graph, spec): (Arc<Graph>, Option<FamilySpec>) = match &args.graph {
        Some(p) => (Arc::clone(load_graph(p)?.shape()), None),
        None => {
            let spec = family_spec(&args.shape)?;
            (gen_graph(&spec).map_err(usage)?.graph, Some(spec))
        }
    };
    let opts = ExtremalOptions { budget: args.budget, workers: args.workers };
    let res = max_moves_with(&graph, args.c, opts).map_err(from_extremal)?;
    out.put("max_moves", res.value);
    out.put("witness", res.witness_colouring.iter().map(|d| d.index().to_string()).collect::<Vec<_>>().join(" "));
    out.put("colourings_evaluated", res.colourings_evaluated);
    if let Some(q) = spec.as_ref().and_then(|s| prediction_query(s, args.c)) {
        if let Ok(p) = predicted_value(&q) {
            out.put("prediction", serde_json::to_value(p).expect("serializable"));
        }
    }
    Ok(())
}

fn strategy(args: &StrategyArgs, out: &mut Out) -> Result<(), Fail> {
    let g = load_graph(&args.graph)?;
    let structure = || {
        if args.sizes.is_empty() {
            return Err(usage("--sizes is required for blow-up strategies"));
        }
        let base = match args.base {
            BaseArg::Path => Base::Path,
            BaseArg::Cycle => Base::Cycle,
        };
        let (_, b) = blowup_graph(base, &args.sizes).map_err(usage)?;
        b.validate(g.graph()).map_err(|e| usage(format!("graph does not match --sizes: {e}")))?;
        Ok(b)
    };
    let cert = match args.name {
        StrategyName::Radius => radius_strategy(&g),
        StrategyName::Rainbow => rainbow_blowup_strategy(&structure()?, &g).map_err(usage)?,
        StrategyName::PathColouring => path_colouring_strategy(&structure()?, &g).map_err(usage)?,
        StrategyName::Arbitrary => {
            let res = arbitrary_blowup_strategy(&structure()?, &g).map_err(usage)?;
            out.put("best_effort", res.best_effort);
            res.certificate
        }
        StrategyName::Dominating => {
            let b = structure()?;
            let q = if args.transversal.is_empty() {
                b.classes.iter().map(|cl| cl[0]).collect()
            } else {
                args.transversal.clone()
            };
            dominating_path_strategy(&b, &g, &q).map_err(usage)?
        }
    };
    let outcome = play_certificate(&g, &cert).map_err(|e| Fail::Verify(e.to_string()))?;
    out.put("moves", cert.len());
    out.put("flooded", outcome.flooded);
    if let Some(p) = &args.cert {
        write(p, &write_certificate(&cert))?;
        out.put("certificate", p.display().to_string());
    }
    if !outcome.flooded {
        return Err(Fail::Verify("certificate does not flood the graph".into()));
    }
    Ok(())
}

fn verify(args: &VerifyArgs, out: &mut Out) -> Result<(), Fail> {
    let mut cfg: CampaignConfig = match &args.config {
        Some(p) => serde_json::from_str(&read(p)?).map_err(|e| usage(format!("{}: {e}", p.display())))?,
        None => CampaignConfig::default(),
    };
    if args.n_max.is_some() {
        cfg.n_max = args.n_max;
    }
    if !args.colours.is_empty() {
        cfg.colours = Some(args.colours.clone());
    }
    if let Some(i) = args.instances {
        cfg.instances = i;
    }
    if let Some(s) = args.seed {
        cfg.seed = s;
    }
    if let Some(b) = args.budget {
        cfg.budget = b;
    }
    let report = verify_theorem(&args.claim, &cfg).map_err(from_extremal)?;
    let doc = serde_json::to_string_pretty(&report).expect("serializable");
    if let Some(p) = &args.report {
        write(p, &(doc + "\n"))?;
        out.put("report", p.display().to_string());
    }
    out.put("claim", report.claim.clone());
    out.put("instances", report.instances);
    out.put("failures", report.failures.len());
    out.put("passed", report.passed);
    if !out.json {
        for f in report.failures.iter().take(3) {
            emit(&format!("failure: {}\n", f.detail));
        }
    } else {
        out.put("first_failures", serde_json::to_value(report.failures.iter().take(3).collect::<Vec<_>>()).unwrap());
    }
    if !report.passed {
        return Err(Fail::Verify(format!("{} failures", report.failures.len())));
    }
    Ok(())
}

fn check_cert(args: &CheckCertArgs, out: &mut Out) -> Result<(), Fail> {
    let g = load_graph(&args.graph)?;
    let cert = parse_certificate(&read(&args.cert)?).map_err(|e| usage(format!("{}: {e}", args.cert.display())))?;
    let outcome = play_certificate(&g, &cert).map_err(|e| Fail::Verify(e.to_string()))?;
    out.put("length", outcome.length);
    out.put("flooded", outcome.flooded);
    out.put("target_met", outcome.target_met);
    if let Some(d) = outcome.final_colour {
        out.put("final_colour", d.index());
    }
    let ok = if cert.claimed_target.is_some() { outcome.target_met } else { outcome.flooded && outcome.target_met };
    if !ok {
        return Err(Fail::Verify("certificate does not meet its claim".into()));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let mut out = Out::new(cli.json);
    let res = match &cli.cmd {
        Cmd::Gen(a) => gen(a, &mut out),
        Cmd::Solve(a) => solve(a, &mut out),
        Cmd::Extremal(a) => extremal(a, &mut out),
        Cmd::Strategy(a) => strategy(a, &mut out),
        Cmd::Verify(a) => verify(a, &mut out),
        Cmd::CheckCert(a) => check_cert(a, &mut out),
    };
    if let Err(f) = &res {
        if out.json {
            out.put("error", f.message().to_string());
        } else {
            eprintln!("error: {}", f.message());
        }
    }
    out.finish();
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => ExitCode::from(f.code()),
    }
}
