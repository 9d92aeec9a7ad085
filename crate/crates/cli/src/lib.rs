//! Command-line front end for `rly-core`: loads named objects from TOML
//! files, runs verifiers and cohomology computations, and renders the
//! outcome as a plain report or as JSON.
//!
//! Exit codes: 0 when every check passes, 1 when a mathematical check fails,
//! 2 for unreadable or inconsistent input.

pub mod commands;
pub mod error;
pub mod input;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use rly_core::ComplexKind;

pub use commands::Outcome;
pub use error::{CliError, CliResult};
pub use input::Workspace;

#[derive(Debug, Parser)]
#[command(
    name = "rly",
    version,
    about = "Exact checks and cohomology for Lie-Yamaguti algebras with Reynolds operators"
)]
pub struct Cli {
    /// Print a machine-readable JSON report instead of the plain one.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the verifier matching the named object's kind.
    Verify {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        name: String,
    },
    /// Tabulate cochain dimensions, kernels, images and Betti numbers.
    Cohomology {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        algebra: String,
        /// Required for the ro and rly complexes.
        #[arg(long)]
        operator: Option<String>,
        #[arg(long)]
        rep: String,
        #[arg(long, default_value = "rly", value_parser = parse_complex)]
        complex: ComplexKind,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
    /// Print the second Betti number and one verified cocycle per class basis vector.
    ClassifyExtensions {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        operator: String,
        #[arg(long)]
        rep: String,
    },
    /// Check a truncated deformation order by order.
    DeformCheck {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// May be omitted when exactly one deformation is loaded.
        #[arg(long)]
        name: Option<String>,
        /// Defaults to the order the deformation is truncated at.
        #[arg(long)]
        order: Option<usize>,
    },
}

fn parse_complex(s: &str) -> Result<ComplexKind, String> {
    s.parse().map_err(|e: rly_core::Error| e.to_string())
}

/// Runs one command and returns its outcome.
pub fn execute(command: &Command) -> CliResult<Box<dyn Outcome>> {
    Ok(match command {
        Command::Verify { files, name } => Box::new(commands::verify(&Workspace::load(files)?, name)?),
        Command::Cohomology { files, algebra, operator, rep, complex, max_degree } => Box::new(commands::cohomology(
            &Workspace::load(files)?,
            algebra,
            operator.as_deref(),
            rep,
            *complex,
            *max_degree,
        )?),
        Command::ClassifyExtensions { files, algebra, operator, rep } => {
            Box::new(commands::classify_extensions(&Workspace::load(files)?, algebra, operator, rep)?)
        }
        Command::DeformCheck { files, name, order } => {
            Box::new(commands::deform_check(&Workspace::load(files)?, name.as_deref(), *order)?)
        }
    })
}

/// Runs the parsed command line, prints the report and returns the exit code.
pub fn run(cli: &Cli) -> i32 {
    match execute(&cli.command) {
        Ok(outcome) => {
            let mut out = std::io::stdout().lock();
            let written = if cli.json { writeln!(out, "{}", outcome.to_json()) } else { write!(out, "{outcome}") };
            if let Err(e) = written.and_then(|()| out.flush()) {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    eprintln!("error: cannot write the report: {e}");
                    return 2;
                }
            }
            if outcome.passed() {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
