//! `sudiag`: the associahedral diagonal and A∞-structures on the
//! cohomology of products of cyclic groups, from the command line.
//!
//! Exit codes: 0 computed or verified, 1 a verification failed, 2 usage or
//! resource error.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sudiag::cyclic_products::{Variant, WitnessMode};

#[derive(Parser)]
#[command(name = "sudiag", version, about = "Saneblidze-Umble diagonal and A-infinity structures on H*(C_n x C_m)")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads (defaults to all cores). Output does not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Terms of the diagonal on the top cell of the associahedron.
    DeltaK {
        #[arg(long)]
        arity: usize,
        #[command(flatten)]
        caps: Caps,
    },
    /// One operation of the tensor product structure.
    TensorOp(TensorOpArgs),
    /// Arities carrying non-zero operations, scanned exhaustively.
    AritySupport {
        #[command(flatten)]
        factors: Factors,
        /// Largest arity scanned.
        #[arg(long = "max")]
        max_arity: usize,
        #[arg(long, default_value_t = 4)]
        ycap: u16,
    },
    /// A snake matrix, its replay from a step matrix, its trees and witness.
    Snake {
        #[command(flatten)]
        factors: Factors,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "full", value_parser = parse_variant)]
        variant: Variant,
        #[arg(long, value_enum, default_value_t = Mode::SnakeOnly)]
        mode: Mode,
    },
    /// The worked example on H*(C4 x C4; F2).
    ExampleC4c4 {
        #[arg(long, default_value_t = 4)]
        ycap: u16,
    },
    /// Stasheff identities up to a given arity, exhaustively over basis tuples.
    Stasheff {
        #[command(flatten)]
        factors: Factors,
        /// Largest identity checked.
        #[arg(long = "max")]
        max_arity: usize,
        /// Bound on the total degree of the tuples.
        #[arg(long, default_value_t = 8)]
        degree: u32,
        #[arg(long, env = "SUDIAG_YCAP", default_value_t = 6)]
        ycap: u16,
    },
    /// Brute-force oracles against the main pipeline.
    #[command(hide = true)]
    OracleDiff {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args)]
pub struct Caps {
    /// Largest arity the diagonal is computed for.
    #[arg(long, env = "SUDIAG_MAX_ARITY", default_value_t = sudiag::trees::DEFAULT_MAX_ARITY)]
    max_arity_cap: usize,
}

#[derive(Args, Clone, Copy)]
pub struct Factors {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
}

#[derive(Args)]
pub struct TensorOpArgs {
    #[command(flatten)]
    factors: Factors,
    #[arg(long)]
    arity: usize,
    /// Comma separated basis monomials, e.g. "x1,x1*x2,y1^2".
    #[arg(long)]
    args: String,
    #[arg(long, default_value_t = 2)]
    p: u32,
    #[arg(long, env = "SUDIAG_YCAP", default_value_t = 6)]
    ycap: u16,
    /// Use the Koszul sign rule in odd characteristic (unverified).
    #[arg(long)]
    experimental_signs: bool,
    /// Allow p not dividing n or m; only the shape of the structure is kept.
    #[arg(long)]
    shaped: bool,
    #[command(flatten)]
    caps: Caps,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    SnakeOnly,
    FullDiagonal,
}

impl From<Mode> for WitnessMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::SnakeOnly => WitnessMode::SnakeOnly,
            Mode::FullDiagonal => WitnessMode::FullDiagonal,
        }
    }
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    s.parse().map_err(|e: sudiag::Error| e.to_string())
}

/// What a command produced: its rendering and whether it verified.
pub struct Outcome {
    pub text: String,
    pub verified: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if t == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new().num_threads(t).build_global().expect("thread pool set once");
    }
    let f = cli.format;
    let result = match cli.command {
        Command::DeltaK { arity, caps } => commands::delta_k(arity, caps.max_arity_cap, f),
        Command::TensorOp(a) => commands::tensor_op(&a, f),
        Command::AritySupport { factors, max_arity, ycap } => commands::arity_support(factors, max_arity, ycap, f),
        Command::Snake { factors, k, variant, mode } => commands::snake(factors, k, variant, mode.into(), f),
        Command::ExampleC4c4 { ycap } => commands::example(ycap, f),
        Command::Stasheff { factors, max_arity, degree, ycap } => commands::stasheff(factors, max_arity, degree, ycap, f),
        Command::OracleDiff { n } => commands::oracle_diff(n, f),
    };
    match result {
        Ok(out) => {
            print!("{}", out.text);
            if out.verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
