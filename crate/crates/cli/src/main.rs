//! `regma`: exact systoles, cogirths, embedding certificates and the
//! six-involution sets from the command line.
//!
//! Machine-readable JSON goes to stdout (or `--out`), a one-line summary to
//! stderr. Exit codes: 0 success, 1 computational failure, 2 usage error.

mod check;
mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "regma",
    version,
    about = "Exact systoles of graphs and cogirths of regular matroids",
    args_conflicts_with_subcommands = true
)]
struct Cli {
    /// Re-verify a certificate written by an earlier run and exit.
    #[arg(long, value_name = "CERT")]
    check: Option<PathBuf>,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
pub enum Command {
    /// Systole of a graph, or its weighted systole with `--weights`.
    Systole {
        /// Graph file or `builtin:<name>`.
        graph: String,
        #[arg(long, value_name = "FILE")]
        weights: Option<PathBuf>,
        #[arg(long, value_name = "FILE")]
        certificate: Option<PathBuf>,
    },
    /// Cogirth of a binary matroid.
    Cogirth {
        /// Matroid file or construction expression.
        matroid: String,
        #[arg(long, value_name = "FILE")]
        certificate: Option<PathBuf>,
    },
    /// Smallest charge of a weighted representation at fixed multiplicities.
    CRep {
        matroid: String,
        #[arg(long, value_name = "FILE")]
        mult: PathBuf,
        #[arg(long, value_name = "FILE")]
        certificate: Option<PathBuf>,
    },
    /// Check the extremal tables against witnesses and optionally by sweep.
    VerifyTables {
        #[arg(long, default_value_t = 6)]
        max_b: usize,
        #[arg(long)]
        exhaustive: bool,
        /// Worker threads for the sweep (defaults to all cores).
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Connected cubic simple graphs on `n` vertices, one file per graph.
    GenCubic {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        min_girth: usize,
        #[arg(long)]
        three_connected: bool,
    },
    /// Six functionals with every element in at least four kernels.
    Involutions6 {
        matroid: String,
        #[arg(long, value_name = "FILE")]
        mult: Option<PathBuf>,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Search for a 2-cell embedding of Euler characteristic at least `chi`.
    Embed {
        graph: String,
        #[arg(long, allow_hyphen_values = true)]
        chi: Option<i64>,
        /// Search nonorientable surfaces too (orientable ones remain allowed).
        #[arg(long)]
        nonorientable: bool,
        /// Comma-separated vertex sequence of a cycle that must bound a face.
        #[arg(long, value_name = "V0,V1,...")]
        face: Option<String>,
        /// Largest Euler characteristic instead of a threshold.
        #[arg(long, conflicts_with_all = ["chi", "face"])]
        max: bool,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Build a matroid from an expression and print it in file format.
    MatroidBuild {
        expr: String,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Reduce a graph to a 3-edge-connected cubic graph.
    Reduce {
        graph: String,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match (cli.check, cli.command) {
        (Some(path), None) => check::run(&path),
        (None, Some(command)) => commands::run(command),
        _ => {
            eprintln!("error: give a subcommand or --check <CERT>; see --help");
            return ExitCode::from(2);
        }
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        // A closed pipe (`| head`) is not a failure.
        Err(e) if e.downcast_ref::<std::io::Error>().is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe) => {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            let usage = e.downcast_ref::<commands::UsageError>().is_some()
                || matches!(
                    e.downcast_ref::<regma::Error>(),
                    Some(regma::Error::Parse(_) | regma::Error::UnknownName(_))
                );
            ExitCode::from(if usage { 2 } else { 1 })
        }
    }
}
