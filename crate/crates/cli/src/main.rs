//! `zagreb` — first Zagreb index toolkit over graphs and their orientations.
//!
//! Exit codes follow a CI-friendly contract: 0 for success/verified, 1 when
//! a scan finds a counterexample or a check suite fails, 2 for usage errors,
//! bad parameters, and unreadable input.

mod commands;
mod render;

use clap::{Args, Parser, Subcommand, ValueEnum};
use zagreb_core::Family;

#[derive(Parser)]
#[command(
    name = "zagreb",
    version,
    about = "First Zagreb index of graphs and digraph orientations: construction, \
             enumeration, and exhaustive extremal verification"
)]
struct Cli {
    /// Worker threads for class scans (default: all cores)
    #[arg(long, global = true, env = "ZAGREB_WORKERS")]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named graph or a parametric family member
    Construct(ConstructArgs),
    /// Compute the index of a graph, or of an orientation given as bits
    Index(IndexArgs),
    /// Enumerate a graph class as graph6 lines
    Enum(EnumArgs),
    /// Scan a whole class and certify the closed-form maximum
    Verify(VerifyArgs),
    /// Run a lemma check suite (exhaustive and randomized)
    Check(CheckArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    /// Bicyclic family graph
    B,
    /// Unicyclic family graph
    U,
    /// The two extremal orientations of the bicyclic family graph
    BStar,
    /// The extremal orientations of the unicyclic family graph
    UStar,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    B,
    U,
}

impl From<ClassArg> for Family {
    fn from(c: ClassArg) -> Family {
        match c {
            ClassArg::B => Family::Bicyclic,
            ClassArg::U => Family::Unicyclic,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Graph6,
    Edges,
    Dot,
    Csv,
    Json,
    Text,
}

#[derive(Args)]
struct ConstructArgs {
    /// Named graph: C<k>, P<k>, B4, Q0, Q1, or B_{n,m}
    #[arg(long, conflicts_with = "family")]
    name: Option<String>,
    /// Parametric family (requires --n and --m)
    #[arg(long, value_enum, requires = "n", requires = "m")]
    family: Option<FamilyArg>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    /// Output format: graph6/edges/dot/csv for graphs, dot/text for
    /// orientation families
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
}

#[derive(Args)]
struct IndexArgs {
    /// Input path, or `-` for stdin (graph6 lines or an edge list)
    #[arg(long, default_value = "-")]
    input: String,
    /// Direction bits orienting the edges (smaller-to-larger when set)
    #[arg(long)]
    bits: Option<u64>,
}

#[derive(Args)]
struct EnumArgs {
    #[arg(long)]
    n: usize,
    /// Restrict to a matching number (enumerates the whole excess class
    /// when omitted)
    #[arg(long)]
    m: Option<usize>,
    /// Cyclomatic excess: 0 unicyclic, 1 bicyclic
    #[arg(long, conflicts_with = "class")]
    excess: Option<usize>,
    /// Class letter, an alias for --excess (B = 1, U = 0)
    #[arg(long, value_enum)]
    class: Option<ClassArg>,
    /// Print only the census size
    #[arg(long)]
    count_only: bool,
    /// graph6 (default) or csv with per-graph index data
    #[arg(long, value_enum, default_value = "graph6")]
    format: OutputFormat,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    class: ClassArg,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    /// Raise the scan cap from 8 to 9 vertices
    #[arg(long)]
    heavy: bool,
    /// json (default) or text
    #[arg(long, value_enum, default_value = "json")]
    format: OutputFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    /// Arc-sum equals vertex-sum on exhaustive small cases plus random
    /// digraphs
    Identity,
    /// Orientation bound with equality exactly on sink-source orientations
    SinkSource,
    /// Degree-shift transform gain on random valid instances
    Transform,
    /// Blossom matching against the brute-force subset oracle
    Matching,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    /// Exhaustive sweep limit (vertices)
    #[arg(long)]
    n_max: Option<usize>,
    /// Number of randomized cases
    #[arg(long)]
    random: Option<u64>,
    /// RNG seed for the randomized cases
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn main() {
    let cli = Cli::parse();
    if let Some(workers) = cli.workers {
        // worker count affects speed only; all outputs are merged
        // deterministically
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global();
    }
    let outcome = match cli.command {
        Command::Construct(args) => commands::construct::run(&args),
        Command::Index(args) => commands::index::run(&args),
        Command::Enum(args) => commands::enumerate::run(&args),
        Command::Verify(args) => commands::verify::run(&args),
        Command::Check(args) => commands::check::run(&args),
    };
    match outcome {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(2);
        }
    }
}
