//! `duality`: file-based front end to duality-core.
//!
//! Exit status: 0 on success or a true answer, 1 on a false answer or when
//! nothing was found, 2 on any error (bad input, size limit, I/O).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser, Debug)]
#[command(name = "duality", version, about = "Geometric duality and 2-isomorphism toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Worker threads for enumeration (output order does not depend on it).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Edge budget for searches and chain construction [default: 12, or 6
    /// for gen-corpus].
    #[arg(long, global = true)]
    max_edges: Option<usize>,

    /// Use the edge signs in the graph files.
    #[arg(long, global = true)]
    signed: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    #[value(name = "2iso")]
    TwoIso,
    Adual,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ShadeArg {
    Shaded,
    Unshaded,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Geometric dual of an embedding (or of a graph's first embedding).
    Dual {
        #[arg(long, conflicts_with = "graph")]
        embedding: Option<PathBuf>,
        #[arg(required_unless_present = "embedding")]
        graph: Option<PathBuf>,
    },
    /// Blocks and cut vertices.
    Blocks { graph: PathBuf },
    /// Is the map a 2-isomorphism?
    #[command(name = "check-2iso")]
    Check2Iso { g: PathBuf, h: PathBuf, map: PathBuf },
    /// Is the map an abstract duality?
    #[command(name = "check-adual")]
    CheckAdual { g: PathBuf, h: PathBuf, map: PathBuf },
    /// Search for a 2-isomorphism or an abstract duality.
    FindMap {
        #[arg(long, value_enum)]
        mode: Mode,
        g: PathBuf,
        h: PathBuf,
    },
    /// Duality chain realizing a 2-isomorphism or an abstract duality.
    Chain {
        #[arg(long, value_enum)]
        mode: Mode,
        g: PathBuf,
        h: PathBuf,
        map: PathBuf,
    },
    /// Signed checkerboard graphs of a PD code (text or JSON).
    Checkerboard {
        diagram: PathBuf,
        #[arg(long)]
        reversed: bool,
    },
    /// Link diagram of a signed graph's first embedding (or the given one).
    Medial {
        graph: PathBuf,
        #[arg(long)]
        embedding: Option<PathBuf>,
        /// Print PD text instead of JSON.
        #[arg(long)]
        pd: bool,
    },
    /// Goeritz matrix of a signed graph.
    Goeritz {
        graph: PathBuf,
        /// Vertex whose row and column are dropped (default: least vertex).
        #[arg(long)]
        drop: Option<u32>,
    },
    /// Diagrams linking two diagrams through shared checkerboard graphs.
    DiagramChain {
        d1: PathBuf,
        #[arg(value_enum)]
        side1: ShadeArg,
        d2: PathBuf,
        #[arg(value_enum)]
        side2: ShadeArg,
        map: PathBuf,
    },
    /// All connected multigraphs up to --max-edges (default 6 here) with
    /// their spherical embeddings.
    GenCorpus {
        /// Skip non-planar graphs.
        #[arg(long)]
        planar_only: bool,
    },
    /// Re-check a chain file.
    Verify { chain: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
