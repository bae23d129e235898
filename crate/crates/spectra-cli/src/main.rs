use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use spectra_cli::error::CliError;
use spectra_cli::input::parse_object;
use spectra_cli::render::{classify_text, enumerate_text, spec_text};
use spectra_cli::suites::run_suite;

/// Prime spectra of finite lattices and commutative rings, classification
/// of finite and block-template spaces, and duality audits.
#[derive(Parser)]
#[command(name = "spectra", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a topology, preorder or template file into the space hierarchy
    Classify {
        /// JSON object description
        file: PathBuf,
    },
    /// Compute the prime spectrum of a lattice or ring file
    Spec {
        /// JSON object description
        file: PathBuf,
        /// Write the Hasse diagram of the specialization order as DOT
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Run a named audit suite (non-zero exit on any failure)
    Audit {
        /// One of: roundtrip-spaces, roundtrip-lattices, adjunction, theta,
        /// ideal-embedding, symbolic-oracle, diagram
        suite: String,
        #[arg(long)]
        max_points: Option<usize>,
        #[arg(long)]
        max_lattice: Option<usize>,
        /// Seed for randomized suites (required there)
        #[arg(long)]
        seed: Option<u64>,
        /// Trial count for randomized suites
        #[arg(long, default_value_t = 200)]
        trials: usize,
    },
    /// Count objects of a kind and their predicate frequencies
    Enumerate {
        /// One of: topologies, posets, lattices, distributive-lattices
        kind: String,
        n: usize,
    },
}

fn read(file: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(file).map_err(|e| CliError::Io(file.display().to_string(), e))
}

fn run() -> Result<bool, CliError> {
    match Cli::parse().command {
        Command::Classify { file } => {
            let obj = parse_object(&read(&file)?)?;
            print!("{}", classify_text(&obj)?);
            Ok(true)
        }
        Command::Spec { file, dot } => {
            let obj = parse_object(&read(&file)?)?;
            let (text, dot_text) = spec_text(&obj)?;
            print!("{text}");
            match dot {
                Some(path) => {
                    std::fs::write(&path, &dot_text)
                        .map_err(|e| CliError::Io(path.display().to_string(), e))?;
                    println!("dot written to {}", path.display());
                }
                None => print!("{dot_text}"),
            }
            Ok(true)
        }
        Command::Audit { suite, max_points, max_lattice, seed, trials } => {
            let outcome = run_suite(&suite, max_points, max_lattice, seed, trials)?;
            for line in &outcome.lines {
                println!("{line}");
            }
            println!("{}", outcome.summary());
            if let Some(witness) = &outcome.first_failure {
                println!("first counterexample: {witness}");
            }
            Ok(outcome.ok())
        }
        Command::Enumerate { kind, n } => {
            print!("{}", enumerate_text(&kind, n)?);
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
