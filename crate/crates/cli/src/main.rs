//! `lineopt`: line graphs, exact multiplicities, optimality certificates,
//! family generators and verification runs.
//!
//! Exit codes: 0 success, 1 a check or verification failed, 2 usage or
//! input error.

mod commands;
mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use lineopt_core::spectra::AlgebraicEigenvalue;

#[derive(Parser)]
#[command(name = "lineopt", version, about = "Eigenvalue multiplicities of line graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    /// Graph in graph6 format.
    #[arg(long)]
    g6: Option<String>,
    /// File holding `n <count>` followed by one `u v` edge per line.
    #[arg(long)]
    edges: Option<std::path::PathBuf>,
    /// Read graph6 or an edge list from standard input.
    #[arg(long)]
    stdin: bool,
}

#[derive(Args, Clone, Copy)]
#[group(multiple = false)]
pub struct OutputMode {
    /// JSON on standard output (default).
    #[arg(long)]
    json: bool,
    /// Human-readable table instead of JSON.
    #[arg(long)]
    table: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print L(G) and the edge-to-vertex map.
    Linegraph {
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        output: OutputMode,
    },
    /// Multiplicity of λ = 2cos(aπ/b) in L(G), with the bound 2c + p - 1.
    Mult {
        #[command(flatten)]
        source: GraphSource,
        /// λ as `a/b` in lowest terms with 1 ≤ a < b.
        #[arg(long)]
        lambda: String,
        #[command(flatten)]
        output: OutputMode,
    },
    /// Structural optimality certificate for (G, λ).
    Check {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        lambda: String,
        #[command(flatten)]
        output: OutputMode,
    },
    /// Generate a member of an optimal family.
    Gen(commands::GenArgs),
    /// Exhaustive verification over connected graphs up to --max-n vertices.
    Verify(commands::VerifyArgs),
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
}

pub fn parse_lambda(text: &str) -> Result<AlgebraicEigenvalue, CliError> {
    text.parse().map_err(|e| CliError::Usage(format!("--lambda {text}: {e}")))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Linegraph { source, output } => commands::linegraph(&source, output),
        Command::Mult { source, lambda, output } => commands::mult(&source, &lambda, output),
        Command::Check { source, lambda, output } => commands::check(&source, &lambda, output),
        Command::Gen(args) => commands::gen(&args),
        Command::Verify(args) => commands::verify(&args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
