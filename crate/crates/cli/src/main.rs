//! `r2r` — batch front end for the random-to-random shuffle library.
//!
//! Five subcommands expose the library as reproducible batch jobs:
//!
//! * `spectrum` — exact eigenvalues and multiplicities of a deck,
//! * `bounds` — mixing-bound curves and the cutoff schedule,
//! * `profile` — exact total-variation/χ² trajectories from the oracle,
//! * `verify` — property suites cross-checking formulas against oracles,
//! * `simulate` — seeded Monte Carlo with comparison to exact answers.
//!
//! Every run emits a metadata block (command, parameters, artifact version)
//! alongside its results, and reruns with identical arguments produce
//! byte-identical output: entry orders are fixed, floats are printed in
//! shortest round-trip decimal, and nothing time- or path-dependent is ever
//! written. There is no interactive mode; the intended users are scripts.
//!
//! Exit codes: 2 for invalid arguments, 1 for failed verification or
//! runtime errors, 0 otherwise.

mod commands;
mod output;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "r2r",
    version,
    about = "Exact spectrum, mixing bounds, and oracle checks for the random-to-random shuffle",
    long_about = None
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact eigenvalues and multiplicities of the shuffle on a deck.
    Spectrum(SpectrumArgs),
    /// Mixing-bound curve (exact ℓ², analytic, largest-eigenvalue term) and
    /// the cutoff time.
    Bounds(BoundsArgs),
    /// Exact TV and χ² distance to uniform per step, from the dense oracle.
    Profile(ProfileArgs),
    /// Run the property suites and print a pass/fail table.
    Verify(VerifyArgs),
    /// Seeded Monte Carlo sampling, compared to exact answers when available.
    Simulate(SimulateArgs),
}

/// Output format selection.
#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }
}

/// Flags shared by every data-emitting subcommand.
#[derive(Args)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to this file instead of stdout. Relative paths resolve under
    /// $R2R_OUTPUT_DIR when that variable is set.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SpectrumArgs {
    /// Deck size; the deck has n distinct cards unless --evaluation is given.
    #[arg(long)]
    n: Option<usize>,
    /// Card multiplicities as a comma-separated list, e.g. 2,1 for a
    /// three-card deck with one repeated label.
    #[arg(long, value_delimiter = ',')]
    evaluation: Option<Vec<usize>>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct BoundsArgs {
    /// Deck size (n ≥ 3, distinct cards).
    #[arg(long)]
    n: usize,
    /// Window constant in the cutoff time (3/4)n·ln n − (1/4)n·ln ln n + cn.
    #[arg(long)]
    c: f64,
    /// Last step of the curve; defaults to the cutoff time rounded up.
    #[arg(long = "t-max")]
    t_max: Option<u32>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct ProfileArgs {
    /// Deck size; the deck has n distinct cards unless --evaluation is given.
    #[arg(long)]
    n: Option<usize>,
    /// Card multiplicities as a comma-separated list.
    #[arg(long, value_delimiter = ',')]
    evaluation: Option<Vec<usize>>,
    /// Last step of the trajectory (at most 1000).
    #[arg(long = "t-max")]
    t_max: u32,
    #[command(flatten)]
    out: OutputArgs,
}

/// Which verification suite to run.
#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Suite {
    Spectra,
    Bijection,
    Identities,
    All,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite to run.
    #[arg(long, value_enum, default_value_t = Suite::All)]
    suite: Suite,
    /// Largest deck size to check; clamped to each suite's tractable cap
    /// (spectra 6, bijection 10, identities 12). Labels show the range used.
    #[arg(long = "n-max")]
    n_max: Option<usize>,
}

#[derive(Args)]
struct SimulateArgs {
    /// Deck size (distinct cards, n ≤ 12).
    #[arg(long)]
    n: usize,
    /// Number of shuffle steps per trial.
    #[arg(long)]
    t: u32,
    /// Number of independent trials.
    #[arg(long)]
    trials: u64,
    /// RNG seed; reruns with the same seed are bit-identical.
    #[arg(long)]
    seed: u64,
    #[command(flatten)]
    out: OutputArgs,
}

/// Failures that map onto the documented exit codes.
enum CliError {
    /// Bad arguments or parameters outside the library caps → exit 2.
    Usage(String),
    /// I/O or other environmental failure → exit 1.
    Runtime(String),
    /// One or more verification checks failed → exit 1.
    VerificationFailed(usize),
}

impl From<r2r_core::Error> for CliError {
    fn from(e: r2r_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Spectrum(args) => commands::spectrum(&args),
        Command::Bounds(args) => commands::bounds(&args),
        Command::Profile(args) => commands::profile(&args),
        Command::Verify(args) => commands::verify(&args),
        Command::Simulate(args) => commands::simulate(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::VerificationFailed(count)) => {
            eprintln!("error: {count} verification check(s) failed");
            ExitCode::from(1)
        }
    }
}
