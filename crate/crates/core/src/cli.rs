//! The `sandtile` command line. Kept in the library so the binary stays a
//! thin wrapper and commands can be driven from tests.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::io;
use crate::linalg::Rat;
use crate::lower::{build_lower_tile, LowerKind};
use crate::srm::StandardRepMatrix;
use crate::svg::{tile_svg, TileKind};
use crate::tiling::{validate_shifting, w_representatives, ShiftingVector};

pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_PARSE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "sandtile", version, about = "Sandpile groups, tiles and multijections of standard representative matrices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bases, multiplicities, group order and the count check.
    Analyze(MatrixArg),
    /// The fibers of the multijection for a shifting vector.
    Reps {
        #[command(flatten)]
        input: MatrixArg,
        #[command(flatten)]
        shifting: ShiftingArg,
        /// Report projections of the representatives instead.
        #[arg(long, value_enum)]
        project: Option<Projection>,
    },
    /// Pieces and representatives of a lower-dimensional tile.
    Lower {
        #[command(flatten)]
        input: MatrixArg,
        #[command(flatten)]
        shifting: ShiftingArg,
        /// prime (in R^r) or double-prime (in R^(n-r)).
        #[arg(long, default_value = "prime")]
        kind: String,
    },
    /// Draws a 2-dimensional tile as SVG.
    TileSvg {
        #[command(flatten)]
        input: MatrixArg,
        #[command(flatten)]
        shifting: ShiftingArg,
        /// full, prime or double-prime.
        #[arg(long, default_value = "prime")]
        kind: String,
        /// Also draw the 3x3 block of lattice translates.
        #[arg(long)]
        grid: bool,
    },
    /// Matrix of a graph and, given a shifting vector, its tree bijection.
    Graph {
        /// Graph JSON file.
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        shifting: Option<String>,
    },
    /// Compares the chambers of two shifting vectors.
    Chambers {
        #[command(flatten)]
        input: MatrixArg,
        #[command(flatten)]
        shifting: ShiftingArg,
        /// The second shifting vector.
        #[arg(long, allow_hyphen_values = true)]
        against: String,
    },
    /// Corner points of every P(B) and their {0,1} forms.
    Corners {
        #[command(flatten)]
        input: MatrixArg,
        #[command(flatten)]
        shifting: ShiftingArg,
    },
}

#[derive(Debug, Args)]
pub struct MatrixArg {
    /// Matrix JSON file: {"r", "n", "M"}.
    pub input: PathBuf,
}

#[derive(Debug, Args)]
pub struct ShiftingArg {
    /// Comma-separated exact rationals, e.g. 1,-1/2,3.
    #[arg(long, allow_hyphen_values = true)]
    pub shifting: String,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Projection {
    First,
    Last,
}

fn read(path: &PathBuf) -> Result<String> {
    Ok(fs::read_to_string(path)?)
}

fn load(arg: &MatrixArg) -> Result<StandardRepMatrix> {
    io::read_matrix(&read(&arg.input)?)
}

fn shifting_for(d: &StandardRepMatrix, s: &str) -> Result<ShiftingVector> {
    validate_shifting(d, &io::parse_shifting(s)?)
}

/// Runs one command and returns the text it produces.
pub fn run(cmd: &Command) -> Result<String> {
    match cmd {
        Command::Analyze(input) => Ok(io::render(&io::analyze_report(&load(input)?))),
        Command::Reps {
            input,
            shifting,
            project,
        } => {
            let d = load(input)?;
            let s = shifting_for(&d, &shifting.shifting)?;
            let f = w_representatives(&d, &s)?;
            let v = match project {
                None => io::fiber_report(&f),
                Some(Projection::First) => io::projected_fiber_report(&d, &f, LowerKind::Prime)?,
                Some(Projection::Last) => io::projected_fiber_report(&d, &f, LowerKind::DoublePrime)?,
            };
            Ok(io::render(&v))
        }
        Command::Lower {
            input,
            shifting,
            kind,
        } => {
            let d = load(input)?;
            let kind: LowerKind = kind.parse()?;
            let s = shifting_for(&d, &shifting.shifting)?;
            let tile = build_lower_tile(&d, &s, kind)?;
            Ok(io::render(&io::lower_report(&d, &tile, &s)?))
        }
        Command::TileSvg {
            input,
            shifting,
            kind,
            grid,
        } => {
            let d = load(input)?;
            let kind: TileKind = kind.parse()?;
            let s = shifting_for(&d, &shifting.shifting)?;
            tile_svg(&d, &s, kind, *grid)
        }
        Command::Graph { input, shifting } => {
            let (g, t) = io::read_graph(&read(input)?)?;
            let d = crate::graph::graph_to_srm(&g, &t)?;
            let f = match shifting {
                Some(s) => Some(w_representatives(&d, &shifting_for(&d, s)?)?),
                None => None,
            };
            Ok(io::render(&io::graph_report(&g, &t, f.as_ref())?))
        }
        Command::Chambers {
            input,
            shifting,
            against,
        } => {
            let d = load(input)?;
            let a: Vec<Rat> = io::parse_shifting(&shifting.shifting)?;
            let b: Vec<Rat> = io::parse_shifting(against)?;
            Ok(io::render(&io::chambers_report(&d, &a, &b)?))
        }
        Command::Corners { input, shifting } => {
            let d = load(input)?;
            let s = shifting_for(&d, &shifting.shifting)?;
            Ok(io::render(&io::corners_report(&d, &s)?))
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    if e.is_parse() {
        EXIT_PARSE
    } else {
        EXIT_VALIDATION
    }
}

/// Parses `args`, runs the command and writes its output. Returns the
/// process exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_VALIDATION } else { 0 };
        }
    };
    let result = run(&cli.command).and_then(|text| match &cli.out {
        Some(path) => Ok(fs::write(path, text)?),
        None => {
            print!("{text}");
            Ok(())
        }
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("sandtile: {e}");
            exit_code(&e)
        }
    }
}
