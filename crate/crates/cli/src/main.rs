mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kclique::{Parallelism, Strategy};

#[derive(Parser)]
#[command(
    name = "kclique",
    version,
    about = "Parallel k-clique counting, sampling and peeling"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count (and optionally list) k-cliques exactly.
    Count(CountArgs),
    /// Estimate the k-clique count by colorful sparsification.
    Approx(ApproxArgs),
    /// Peel for k-clique cores and a dense subgraph.
    Peel(PeelArgs),
    /// Compute a vertex ranking and report the out-degree it induces.
    Orient(OrientArgs),
    /// Brute-force references for small graphs.
    #[command(hide = true)]
    Oracle(OracleArgs),
}

#[derive(Args)]
struct Common {
    /// Edge list: one "u v" pair per line, '#' starts a comment.
    #[arg(long)]
    input: PathBuf,
    /// Worker threads (0 = all hardware threads).
    #[arg(long, default_value_t = 0)]
    threads: usize,
    /// Write a JSON run report here.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct OrderArgs {
    /// Vertex ordering: degree, original, kcore, goodrich or barenboim.
    #[arg(long, default_value = "goodrich")]
    order: Strategy,
    /// Slack for the goodrich and barenboim orderings.
    #[arg(long, default_value_t = 1.0)]
    eps: f64,
    /// Arboricity estimate for the barenboim ordering (estimated when absent).
    #[arg(long)]
    alpha: Option<u32>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ParallelismArg {
    Node,
    Edge,
    Auto,
}

impl ParallelismArg {
    fn resolve(self, k: usize) -> Parallelism {
        match self {
            ParallelismArg::Node => Parallelism::Node,
            ParallelismArg::Edge => Parallelism::Edge,
            ParallelismArg::Auto => Parallelism::auto(k),
        }
    }
}

#[derive(Args)]
struct CountArgs {
    #[command(flatten)]
    common: Common,
    #[command(flatten)]
    order: OrderArgs,
    /// Clique size.
    #[arg(long)]
    k: usize,
    #[arg(long, value_enum, default_value_t = ParallelismArg::Auto)]
    parallelism: ParallelismArg,
    /// Write per-vertex counts as "vertex<TAB>count" lines.
    #[arg(long)]
    per_vertex: Option<PathBuf>,
    /// Write every clique as a line of vertex ids.
    #[arg(long)]
    list: Option<PathBuf>,
}

#[derive(Args)]
struct ApproxArgs {
    #[command(flatten)]
    common: Common,
    #[command(flatten)]
    order: OrderArgs,
    #[arg(long)]
    k: usize,
    /// Number of colors; each edge survives with probability 1/colors.
    #[arg(long)]
    colors: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Repetitions with seeds seed, seed+1, ...; reports mean and sample std.
    #[arg(long, default_value_t = 1)]
    trials: usize,
    /// Comma-separated counts of k-clique pairs sharing 2, 3, ..., k-1
    /// vertices; adds the analytic variance to the report.
    #[arg(long, value_delimiter = ',')]
    shared_pairs: Option<Vec<u64>>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PeelMode {
    Exact,
    Approx,
}

#[derive(Args)]
struct PeelArgs {
    #[command(flatten)]
    common: Common,
    /// Vertex ordering used for counting.
    #[arg(long, default_value = "goodrich")]
    order: Strategy,
    #[arg(long)]
    k: usize,
    #[arg(long, value_enum, default_value_t = PeelMode::Exact)]
    mode: PeelMode,
    /// Slack of approximate peeling.
    #[arg(long, default_value_t = 0.5)]
    eps: f64,
    /// Write core numbers as "vertex<TAB>core" lines (exact mode only).
    #[arg(long)]
    cores: Option<PathBuf>,
}

#[derive(Args)]
struct OrientArgs {
    #[command(flatten)]
    common: Common,
    #[command(flatten)]
    order: OrderArgs,
    /// Write the ranking, one vertex id per line from lowest rank up.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    k: usize,
}

/// Failure classes mapped onto exit codes.
pub enum Failure {
    Usage(String),
    Runtime(anyhow::Error),
}

impl From<kclique::Error> for Failure {
    fn from(e: kclique::Error) -> Self {
        match e {
            kclique::Error::InvalidArgument(msg) => Failure::Usage(msg),
            other => Failure::Runtime(other.into()),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Runtime(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Runtime(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Count(a) => commands::count(a),
        Command::Approx(a) => commands::approx(a),
        Command::Peel(a) => commands::peel(a),
        Command::Orient(a) => commands::orient(a),
        Command::Oracle(a) => commands::oracle(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
