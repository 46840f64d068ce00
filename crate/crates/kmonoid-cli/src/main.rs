//! `kmonoid` — analyze finitely generated submonoids of N^k.
//!
//! Exit codes are a stable contract: 0 success (or isomorphic), 1 not
//! isomorphic, 2 parse/input error, 3 unsupported operation, 4 verification
//! failure.

mod commands;
mod error;
mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "kmonoid",
    version,
    about = "Analyze finitely generated submonoids of N^k with exact arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis: minimal generators, index, certificate, and the
    /// canonical numerical semigroup when the index is 1
    Analyze {
        /// Emit the report as JSON (schema 1) instead of text
        #[arg(long)]
        json: bool,
        /// Analyze multiple inputs in parallel with this many threads
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Input files, '-' for stdin, or inline descriptions like "2,4 / 3,6"
        #[arg(required = true)]
        inputs: Vec<String>,
    },
    /// Restrict a monoid to a subset of coordinates
    Project {
        /// 1-based coordinate indices to keep, e.g. "1,3"
        #[arg(long)]
        coords: String,
        input: String,
    },
    /// Emit an isomorphic copy of the monoid inside N^R
    Embed {
        /// Target ambient dimension R (at least the index)
        #[arg(long)]
        dim: usize,
        input: String,
    },
    /// Decide isomorphism of two index-1 monoids via canonical forms
    Iso { a: String, b: String },
    /// The canonical numerical semigroup of an index-1 monoid
    Canonical { input: String },
    /// Lift a numerical semigroup along a ray into N^k
    Lift {
        /// The ray, e.g. "1,2"
        #[arg(long)]
        ray: String,
        /// Generators of the numerical semigroup, e.g. "2,3"
        #[arg(long)]
        gens: String,
    },
    /// Compute and emit an index certificate as JSON
    Certify {
        /// Write the certificate to a file instead of stdout
        #[arg(long, short)]
        output: Option<PathBuf>,
        input: String,
    },
    /// Cross-check the analysis against the naive oracles
    Verify {
        /// Enumeration bound (coordinate sum) for the window oracles
        #[arg(long)]
        bound: Option<u64>,
        /// Verify a previously emitted certificate instead of a fresh one
        #[arg(long)]
        certificate: Option<PathBuf>,
        input: String,
    },
}

fn run(cli: Cli) -> error::Result<u8> {
    match cli.command {
        Command::Analyze { json, jobs, inputs } => {
            commands::analyze(&inputs, json, jobs.max(1))
        }
        Command::Project { coords, input } => commands::project(&input, &coords),
        Command::Embed { dim, input } => commands::embed(&input, dim),
        Command::Iso { a, b } => commands::iso(&a, &b),
        Command::Canonical { input } => commands::canonical(&input),
        Command::Lift { ray, gens } => commands::lift_cmd(&ray, &gens),
        Command::Certify { output, input } => commands::certify(&input, output.as_deref()),
        Command::Verify {
            bound,
            certificate,
            input,
        } => commands::verify(&input, bound, certificate.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
