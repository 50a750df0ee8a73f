//! `ecfast` command-line front end: scalar multiplication with selectable
//! algorithms, recoding inspection, oracle verification sweeps, and CSV
//! operation-count benchmarks.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 parse/usage errors,
//! 3 invalid curve data (off-curve points, bad parameters).

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ecfast_cli::{bench, mulcmd, recodecmd, verify};

#[derive(Parser)]
#[command(
    name = "ecfast",
    version,
    about = "Affine elliptic-curve scalar multiplication with single-inversion composite steps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply the curve's base point by a scalar (or compute P + [k]Q).
    Mul(mulcmd::MulArgs),
    /// Show a scalar's recoded digit string and its estimated cost.
    Recode(recodecmd::RecodeArgs),
    /// Run the oracle-equivalence and single-inversion sweeps.
    Verify(verify::VerifyArgs),
    /// Write the composite-vs-primitive operation-count table as CSV.
    Bench(bench::BenchArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Mul(args) => mulcmd::run(args),
        Command::Recode(args) => recodecmd::run(args),
        Command::Verify(args) => verify::run(args),
        Command::Bench(args) => bench::run(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
