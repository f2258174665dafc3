//! Command-line experiment runner.
//!
//! Exit codes: 0 on success, 1 on I/O or internal failures, 2 on an
//! invalid configuration or command line, 3 when `--fail-on-divergence`
//! is set and a trial diverged.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

mod commands;
mod config;
mod output;
mod predict;

pub use commands::{cmd_run, cmd_sweep, cmd_theory, RunOptions};
pub use config::{parse_tail_window, AlphaSetting, FileConfig, Overrides, ResolvedExperiment, DEFAULT_SEED};
pub use output::RunManifest;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),
    #[error("divergence: {0}")]
    Diverged(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("{0}")]
    Other(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Diverged(_) => 3,
            CliError::Io(_) | CliError::Other(_) => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "logcost", version, about = "Log-cost adaptive filter experiments: simulation and closed-form theory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Simulate each configured algorithm; write curves.csv and summary.json.
    Run(CommonArgs),
    /// Steady-state simulation and theory over the [sweep] grid; write sweep.csv.
    Sweep(CommonArgs),
    /// Closed-form predictions only; write theory.json.
    Theory(CommonArgs),
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Experiment file (TOML).
    config: PathBuf,
    /// Directory receiving the output files.
    #[arg(short, long, default_value = "out")]
    output: PathBuf,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    iterations: Option<usize>,
    /// Worker threads; defaults to one per core.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    workers: Option<u64>,
    /// Exit with status 3 if any trial diverges.
    #[arg(long)]
    fail_on_divergence: bool,
    /// Steady-state window: a fraction such as 0.1, or a count of final iterations.
    #[arg(long, value_parser = parse_tail_window)]
    tail_window: Option<crate::simkit::TailWindow>,
}

impl CommonArgs {
    fn options(&self) -> RunOptions {
        RunOptions {
            overrides: Overrides {
                seed: self.seed,
                trials: self.trials,
                iterations: self.iterations,
                tail_window: self.tail_window,
            },
            workers: self.workers.map(|w| w as usize),
            fail_on_divergence: self.fail_on_divergence,
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let (args, run): (&CommonArgs, fn(&std::path::Path, &std::path::Path, &RunOptions) -> Result<RunManifest, CliError>) =
        match &cli.command {
            Command::Run(a) => (a, cmd_run),
            Command::Sweep(a) => (a, cmd_sweep),
            Command::Theory(a) => (a, cmd_theory),
        };
    match run(&args.config, &args.output, &args.options()) {
        Ok(manifest) => {
            for path in &manifest.outputs {
                println!("{}", path.display());
            }
            0
        }
        Err(e) => {
            eprintln!("logcost: {e}");
            e.exit_code()
        }
    }
}
