//! `pathturan`: Turán numbers of linear forests from the command line.
//!
//! Exit codes: 0 success, 1 counterexample or mismatch, 2 usage error,
//! 3 oracle budget exhausted.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pathturan_core::PathForest;

#[derive(Parser, Debug)]
#[command(name = "pathturan", version, about = "Turán numbers of linear forests")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Worker threads for oracles and sweeps (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Graph6,
    Dot,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Closed-form value with regime and achieving terms.
    Value {
        #[command(flatten)]
        target: Target,
        /// Maximize over connected hosts only.
        #[arg(long)]
        connected: bool,
    },
    /// Extremal graphs for the achieving terms.
    Construct {
        #[command(flatten)]
        target: Target,
        /// Connected extremal graphs (single path only).
        #[arg(long)]
        connected: bool,
    },
    /// Whether graphs in a graph6 file contain the forest.
    Contains {
        /// graph6 file, one graph per line; `-` reads stdin.
        #[arg(long)]
        graph: PathBuf,
        /// Path orders, comma-separated.
        #[arg(long, value_parser = parse_forest)]
        paths: PathForest,
        /// Use the exhaustive reference checker (n ≤ 10).
        #[arg(long)]
        naive: bool,
    },
    /// Exact ex(n, F) by brute force.
    Oracle {
        #[command(flatten)]
        target: Target,
        /// `enumerate` for n ≤ 9, `bnb` (branch and bound) for n ≤ 12.
        #[arg(long, value_enum, default_value_t = OracleModeArg::Enumerate)]
        mode: OracleModeArg,
        /// Connected hosts only (enumeration mode).
        #[arg(long)]
        connected: bool,
        /// Wall-clock budget, e.g. `600s` or `10m`.
        #[arg(long, env = "PATHTURAN_BUDGET", default_value = "600s", value_parser = parse_duration)]
        budget: Duration,
        /// Override the mode's default size limit.
        #[arg(long)]
        max_order: Option<usize>,
        /// Branch and bound without the construction lower bound.
        #[arg(long)]
        unseeded: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Largest n swept (defaults: 300 for observations, 500 otherwise).
        #[arg(long)]
        n_max: Option<u64>,
    },
    /// Compare the conjectured value with constructions, theorems and oracles.
    Probe {
        /// Path orders, comma-separated.
        #[arg(long, value_parser = parse_forest)]
        paths: PathForest,
        /// First n probed.
        #[arg(long)]
        n_from: u64,
        /// Last n probed.
        #[arg(long)]
        n_to: u64,
        /// Run an oracle for n up to this value.
        #[arg(long, default_value_t = 9)]
        oracle_budget: usize,
        /// Wall-clock budget per oracle call.
        #[arg(long, env = "PATHTURAN_BUDGET", default_value = "600s", value_parser = parse_duration)]
        budget: Duration,
    },
    /// Compare the containment checker with the naive one on random graphs.
    Crosscheck {
        /// Random graphs per forest shape.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Largest host order.
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// RNG seed (ChaCha8).
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
}

#[derive(Args, Debug)]
pub struct Target {
    /// Path orders, comma-separated (e.g. `5,3`).
    #[arg(long, value_parser = parse_forest)]
    pub paths: PathForest,
    /// Number of vertices.
    #[arg(long)]
    pub n: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OracleModeArg {
    Enumerate,
    Bnb,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Observations,
    Corollaries,
    BkRemark,
    Consistency,
    All,
}

fn parse_forest(s: &str) -> Result<PathForest, String> {
    s.parse::<PathForest>().map_err(|e| e.to_string())
}

fn parse_duration(s: &str) -> Result<Duration, String> {
    if let Ok(secs) = s.trim().parse::<u64>() {
        return Ok(Duration::from_secs(secs));
    }
    humantime::parse_duration(s).map_err(|e| e.to_string())
}

/// Failures that end the run with a specific exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Budget(String),
}

/// What a successful run found.
#[derive(Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Counterexample,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(&cli) {
        Ok(Verdict::Pass) => ExitCode::SUCCESS,
        Ok(Verdict::Counterexample) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("budget exhausted: {msg}");
            ExitCode::from(3)
        }
    }
}
