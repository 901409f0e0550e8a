//! `nestorw`: command-line front end for nestorw-core.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nestorw_core::families::FamilyKind;
use nestorw_core::hypergraph::DEFAULT_CAP;
use nestorw_core::rewrite::FlipOrientation;
use nestorw_core::Error;

#[derive(Parser, Debug)]
#[command(name = "nestorw", version, about = "Rewriting systems on the faces and vertices of nestohedra")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Which flips count as rewriting steps.
    #[arg(long, global = true, default_value = "promote-smaller", value_parser = parse_orientation)]
    pub orient: FlipOrientation,
    /// Largest vertex count accepted by enumerating commands.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    /// Add missing singleton hyperedges instead of rejecting the input.
    #[arg(long, global = true)]
    pub atomize: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Dot,
    Csv,
}

fn parse_orientation(s: &str) -> Result<FlipOrientation, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_family(s: &str) -> Result<FamilyKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write the hypergraph of a family member.
    Gen {
        /// simplex, cube, associahedron, permutahedron, cyclohedron or operahedron.
        family: String,
        /// Dimension (not used for operahedra).
        n: Option<usize>,
        /// Planar tree for operahedra, e.g. `a(z:b(x:c,y:d),u:e)`.
        #[arg(long)]
        tree: Option<String>,
        /// Comma-separated edge labels giving the vertex order of an operahedron.
        #[arg(long)]
        order: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Face lattice: f-vector and all constructs.
    Faces { input: PathBuf },
    /// Constructions (vertices of the polytope).
    Vertices { input: PathBuf },
    /// Rewrite a construction to its normal form.
    Rewrite {
        input: PathBuf,
        #[arg(long)]
        from: String,
    },
    /// Flip digraph on constructions.
    Poset { input: PathBuf },
    /// Oriented covering relation on all constructs.
    FacialOrder { input: PathBuf },
    /// Local diagrams of every peak and the 2-face census.
    Confluence { input: PathBuf },
    /// Shapes of the reconnected restrictions to three-element sets.
    CriticalPairs { input: PathBuf },
    /// Vertex coordinates; with `--mu`, also check a linear functional.
    Coordinates {
        input: PathBuf,
        /// Comma-separated integers, one per vertex.
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
    },
    /// Decide contextuality and print a witness when it fails.
    Contextual { input: PathBuf },
    /// Check the contextual-family conditions up to a dimension.
    FamilyCheck {
        #[arg(value_parser = parse_family)]
        kind: FamilyKind,
        #[arg(long, default_value_t = 4)]
        up_to: usize,
    },
    /// Tensor words for constructions of a linear graph, or back with `--word`.
    Parenthesize {
        input: PathBuf,
        #[arg(long)]
        word: Option<String>,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Capacity { .. } => 2,
        Error::Internal(_) => 3,
        _ => 1,
    }
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
    match commands::run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("nestorw: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
