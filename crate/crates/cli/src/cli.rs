use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "coxeter",
    version,
    about = "Distances in the graphs Γₙ on invertible symmetric GF(2) matrices, and binary self-dual codes"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    /// Largest n for operations that enumerate every vertex.
    #[arg(long, global = true, env = "GAMMA_MAX_N")]
    pub max_n: Option<usize>,
    /// Worker threads for parallel work; 0 uses every core.
    #[arg(long, global = true, env = "GAMMA_WORKERS")]
    pub workers: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
}

/// A matrix or code source: a file path, or `-` for standard input.
pub type Source = PathBuf;

#[derive(Debug, Args)]
pub struct PairArgs {
    /// First matrix (row text, or rows joined by `/`).
    #[arg(long)]
    pub a: Source,
    /// Second matrix.
    #[arg(long)]
    pub b: Source,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form distance d(A, B).
    Dist {
        #[command(flatten)]
        pair: PairArgs,
        /// Also compute the distance by breadth-first search.
        #[arg(long)]
        bfs: bool,
    },
    /// Case of the distance formula that applies to (A, B).
    Classify {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Neighbors of A in ascending order of the update vector.
    Neighbors {
        #[arg(long)]
        a: Source,
    },
    /// A shortest path from A to B.
    Geodesic {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Diameter of Γₙ.
    Diameter {
        #[arg(long)]
        n: usize,
        /// Also compute the eccentricity of the identity by breadth-first search.
        #[arg(long)]
        bfs: bool,
    },
    /// Every vertex of Γₙ.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Print only the number of vertices.
        #[arg(long)]
        count: bool,
    },
    /// Γₙ as an edge list.
    ExportGraph {
        #[arg(long)]
        n: usize,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Every self-dual code of the given length.
    CodesList {
        #[arg(long)]
        length: usize,
    },
    /// Family of matrices of a self-dual code, given directly or by a member.
    CodesFamily {
        /// Code text: one generator row per line.
        #[arg(long, conflicts_with = "a", required_unless_present = "a")]
        code: Option<Source>,
        /// A member of SDₙ; its code is used.
        #[arg(long)]
        a: Option<Source>,
    },
    /// Orthogonal P with (P ⊕ 1) C = C̃.
    CodesWitness {
        #[arg(long)]
        from: Source,
        #[arg(long)]
        to: Source,
    },
    /// Runs verification suites.
    Verify {
        /// Suite to run; repeat for several, omit for all.
        #[arg(long)]
        suite: Vec<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        iters: Option<usize>,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Dist { .. } => "dist",
            Command::Classify { .. } => "classify",
            Command::Neighbors { .. } => "neighbors",
            Command::Geodesic { .. } => "geodesic",
            Command::Diameter { .. } => "diameter",
            Command::Enumerate { .. } => "enumerate",
            Command::ExportGraph { .. } => "export-graph",
            Command::CodesList { .. } => "codes-list",
            Command::CodesFamily { .. } => "codes-family",
            Command::CodesWitness { .. } => "codes-witness",
            Command::Verify { .. } => "verify",
        }
    }
}
