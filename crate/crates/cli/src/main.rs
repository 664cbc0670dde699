//! `wordrep`: command-line front end for co-bipartite word-representability.
//!
//! Exit codes: 0 when the verdict is true, 1 when it is false, 2 on errors.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use wordrep::SearchLimits;

#[derive(Parser, Debug)]
#[command(
    name = "wordrep",
    version,
    about = "Word-representability of co-bipartite graphs"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Refuse orientation searches on graphs with more vertices.
    #[arg(long, global = true, default_value_t = SearchLimits::default().max_vertices)]
    pub cap_vertices: usize,

    /// Refuse orientation searches on graphs with more edges.
    #[arg(long, global = true, default_value_t = SearchLimits::default().max_edges)]
    pub cap_edges: usize,

    /// Refuse certificate searches whose labeled clique is larger.
    #[arg(long, global = true, default_value_t = SearchLimits::default().max_labeling_side)]
    pub cap_labels: usize,

    #[command(subcommand)]
    pub command: Command,
}

impl Cli {
    pub fn limits(&self) -> SearchLimits {
        SearchLimits {
            max_vertices: self.cap_vertices,
            max_edges: self.cap_edges,
            max_labeling_side: self.cap_labels,
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct InputArg {
    /// Graph file (edge list or co-bipartite JSON); `-` reads stdin.
    #[arg(long, short, default_value = "-")]
    pub input: PathBuf,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Search for an ordering certificate and build a word from it.
    Recognize(InputArg),
    /// Print a 3-uniform word representing the graph.
    Word(InputArg),
    /// Representation number: 1, 2, 3 or not representable.
    Repnum(InputArg),
    /// Exhaustive semi-transitive orientation search, or a check of a given
    /// orientation with `--orientation`.
    Oracle {
        #[command(flatten)]
        input: InputArg,
        /// Orientation file with one `u -> v` line per arc.
        #[arg(long)]
        orientation: Option<PathBuf>,
    },
    /// Check whether a word represents a graph.
    Verify {
        #[command(flatten)]
        input: InputArg,
        /// The word, letters separated by spaces (a single token is read one
        /// character per letter).
        #[arg(long, conflicts_with = "word_file")]
        word: Option<String>,
        #[arg(long)]
        word_file: Option<PathBuf>,
    },
    /// Generate an instance.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Cross-check recognition against the oracle on a corpus.
    Sweep {
        /// Exhaustive part: all cross matrices with up to this many vertices.
        #[arg(long, default_value_t = 8)]
        max_vertices: usize,
        /// Number of random instances.
        #[arg(long, default_value_t = 200)]
        random: usize,
        /// Vertex bound for random instances.
        #[arg(long, default_value_t = 10)]
        max_random_vertices: usize,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum GenKind {
    /// `K_n x K_2`.
    Cartesian {
        #[arg(long)]
        n: usize,
    },
    /// `K_{m+n}` split as `K_m` and `K_n`.
    Complete {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Random cross edges with probability `p`.
    Random {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(commands::FAILURE)
        }
    }
}
