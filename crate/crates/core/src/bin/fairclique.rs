use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use fairclique::enumerate::{self, EnumRequest, Model, RelativeMethod};
use fairclique::graph::{assign_random_attributes, load_attributes, load_edge_list, AttributedGraph};
use fairclique::oracle::baseline;
use fairclique::pruning::{apply_core, PruneKind};
use fairclique::{greedy_color, suggest_k, Error, OrderingKind, RunStats, VertexMask};

#[derive(Parser)]
#[command(
    name = "fairclique",
    version,
    about = "Fair maximal clique enumeration in attributed graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate weak, strong or relative fair cliques.
    Enum(EnumArgs),
    /// Run one core at level k-1 and report what survives.
    Prune(PruneArgs),
    /// Print the admissible range of k.
    SuggestK(SuggestArgs),
}

#[derive(Args)]
#[group(id = "attributes", required = true, multiple = false)]
struct AttrSource {
    /// Attribute file with one "id label" pair per line.
    #[arg(long, group = "attributes")]
    attrs: Option<PathBuf>,
    /// Assign D attribute values uniformly at random instead.
    #[arg(long, value_name = "D", group = "attributes")]
    rand_attrs: Option<usize>,
}

#[derive(Args)]
struct Input {
    /// Edge list, one "u v" pair per line.
    #[arg(long)]
    graph: PathBuf,
    #[command(flatten)]
    source: AttrSource,
    #[arg(long, default_value_t = 0, requires = "rand_attrs")]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Refine,
    Alter,
}

#[derive(Args)]
struct EnumArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long, value_parser = parse::<Model>)]
    model: Model,
    #[arg(short = 'k', long = "k")]
    k: usize,
    /// Maximum difference between attribute counts (relative model only).
    #[arg(long)]
    delta: Option<usize>,
    #[arg(long, default_value = "auto", value_parser = parse::<OrderingKind>)]
    ordering: OrderingKind,
    #[arg(long, default_value = "auto", value_parser = parse::<PruneKind>)]
    prune: PruneKind,
    /// Search used for the relative model.
    #[arg(long, value_enum, default_value = "alter")]
    method: MethodArg,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Also run the brute-force baseline and record whether it agrees.
    #[arg(long)]
    oracle: bool,
    /// Clique output file (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Where to write the run statistics as JSON.
    #[arg(long)]
    stats: Option<PathBuf>,
}

#[derive(Args)]
struct PruneArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long, default_value = "colorful", value_parser = parse::<PruneKind>)]
    kind: PruneKind,
    #[arg(short = 'k', long = "k")]
    k: usize,
}

#[derive(Args)]
struct SuggestArgs {
    #[command(flatten)]
    input: Input,
    /// Number of highest-degree vertices to grow greedy cliques from.
    #[arg(long, default_value_t = 32)]
    seeds: usize,
}

fn parse<T: std::str::FromStr<Err = Error>>(s: &str) -> Result<T, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameter(_) | Error::RequiresTwoAttributes { .. } => Failure::Usage(e.to_string()),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

fn load(input: &Input) -> Result<AttributedGraph, Failure> {
    let graph = load_edge_list(&input.graph)?;
    let graph = match (&input.source.attrs, input.source.rand_attrs) {
        (Some(path), _) => load_attributes(graph, path)?,
        (None, Some(d)) => assign_random_attributes(graph, d, input.seed)?,
        (None, None) => unreachable!("clap requires one attribute source"),
    };
    Ok(graph)
}

fn write_to(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Runtime(format!("{}: {e}", p.display()))),
        None => Ok(io::stdout().lock().write_all(text.as_bytes())?),
    }
}

fn cmd_enum(args: &EnumArgs) -> Result<(), Failure> {
    if args.delta.is_some() && args.model != Model::Relative {
        return Err(Failure::Usage("--delta only applies to --model relative".into()));
    }
    let t = Instant::now();
    let graph = load(&args.input)?;
    let load_ms = t.elapsed().as_secs_f64() * 1e3;
    let req = EnumRequest::new(args.model, args.k)
        .delta(args.delta)
        .ordering(args.ordering)
        .prune(args.prune)
        .method(match args.method {
            MethodArg::Refine => RelativeMethod::Refine,
            MethodArg::Alter => RelativeMethod::Alter,
        })
        .threads(args.threads);
    let report = enumerate::run(&graph, &req)?;
    let mut text = report.cliques.to_lines(&graph).join("\n");
    if !text.is_empty() {
        text.push('\n');
    }
    write_to(args.out.as_deref(), &text)?;
    let mut stats = RunStats::new(&graph, &req, &report, load_ms);
    if args.oracle {
        let agree = baseline(&graph, args.model, args.k, args.delta) == report.cliques;
        stats.oracle_verdict = Some(if agree { "equal" } else { "different" }.to_string());
    }
    if let Some(path) = &args.stats {
        fs::write(path, stats.to_json() + "\n").map_err(|e| Failure::Runtime(format!("{}: {e}", path.display())))?;
    }
    if stats.oracle_verdict.as_deref() == Some("different") {
        return Err(Failure::Runtime("enumeration disagrees with the baseline".into()));
    }
    Ok(())
}

#[derive(Serialize)]
struct PruneReport {
    kind: String,
    k: usize,
    level: usize,
    d: usize,
    colors: usize,
    vertices_before: usize,
    edges_before: usize,
    vertices_after: usize,
    edges_after: usize,
    prune_ms: f64,
}

fn cmd_prune(args: &PruneArgs) -> Result<(), Failure> {
    if args.kind == PruneKind::Auto {
        return Err(Failure::Usage("prune needs a concrete --kind".into()));
    }
    let graph = load(&args.input)?;
    let coloring = greedy_color(&graph, &VertexMask::full(graph.n()));
    let level = args.k.saturating_sub(1);
    let t = Instant::now();
    let mask = apply_core(&graph, &coloring, args.kind, level)?;
    let report = PruneReport {
        kind: args.kind.to_string(),
        k: args.k,
        level,
        d: graph.num_attrs(),
        colors: coloring.num_colors(),
        vertices_before: graph.n(),
        edges_before: graph.m(),
        vertices_after: mask.count(),
        edges_after: graph.edges_within(&mask),
        prune_ms: t.elapsed().as_secs_f64() * 1e3,
    };
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    Ok(())
}

fn cmd_suggest(args: &SuggestArgs) -> Result<(), Failure> {
    let graph = load(&args.input)?;
    let s = suggest_k(&graph, args.seeds);
    println!(
        "clique size: {} <= C_max <= {}",
        s.clique_lower_bound, s.color_upper_bound
    );
    println!("k in [1, {}]", s.k_max);
    println!("k cap: {}", s.k_cap);
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Enum(a) => cmd_enum(a),
        Command::Prune(a) => cmd_prune(a),
        Command::SuggestK(a) => cmd_suggest(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
