mod commands;
mod input;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::output::OutputFormat;

#[derive(Parser, Debug)]
#[command(
    name = "nmseq",
    version,
    about = "Neighbourhood-matrix graph invariants, clique sequences and automorphism groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the neighbourhood matrix power sequence of each graph.
    Nm {
        #[command(flatten)]
        io: IoArgs,
        /// Neighbourhood-matrix builder.
        #[arg(long, default_value = "product")]
        builder: String,
    },
    /// Compute the structural descriptor sequence of each graph.
    Descriptor {
        #[command(flatten)]
        io: IoArgs,
        #[command(flatten)]
        tuning: Tuning,
        #[arg(long, default_value = "product")]
        builder: String,
    },
    /// Enumerate maximal cliques and the clique sequence of each graph.
    Cliques {
        #[command(flatten)]
        io: IoArgs,
        /// Clique enumeration strategy.
        #[arg(long, default_value = "nm-blocks")]
        algo: String,
        #[arg(long, default_value_t = nmseq::cliques::DEFAULT_CLIQUE_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
        clique_budget: u64,
        /// Compare every catalog with the exhaustive oracle (graphs up to 12 vertices).
        #[arg(long)]
        oracle: bool,
    },
    /// Compute the automorphism group of each graph.
    Aut {
        #[command(flatten)]
        io: IoArgs,
        #[command(flatten)]
        tuning: Tuning,
        /// Vertex grouping key.
        #[arg(long, value_enum, default_value_t = Key::Augmented)]
        key: Key,
        /// Also search automorphisms that swap isomorphic components.
        #[arg(long)]
        cross_component: bool,
        #[arg(long, default_value_t = nmseq::automorphism::DEFAULT_CANDIDATE_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
        candidate_budget: u64,
        #[arg(long, default_value_t = nmseq::cliques::DEFAULT_CLIQUE_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
        clique_budget: u64,
        /// Compare every group with the exhaustive oracle (graphs up to 8 vertices).
        #[arg(long)]
        oracle: bool,
    },
    /// Classify a collection into proven-distinct graphs and isomorphism classes.
    Classify {
        #[command(flatten)]
        io: IoArgs,
        #[command(flatten)]
        tuning: Tuning,
        /// Skip the clique-sequence stage.
        #[arg(long)]
        skip_cliques: bool,
        /// Exact isomorphism checker.
        #[arg(long, default_value = "refine")]
        checker: String,
        #[arg(long, default_value_t = nmseq::cliques::DEFAULT_CLIQUE_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
        clique_budget: u64,
        /// Omit wall-clock timings so output is byte-for-byte reproducible.
        #[arg(long)]
        no_timings: bool,
    },
    /// Cross-check cliques, automorphisms and isomorphism against the brute-force oracles.
    OracleCheck {
        #[command(flatten)]
        io: IoArgs,
        #[command(flatten)]
        tuning: Tuning,
    },
    /// List the registered strategies.
    Strategies,
}

#[derive(Args, Debug)]
struct IoArgs {
    /// Input file; `-` reads standard input.
    #[arg(long)]
    input: PathBuf,
    /// Input format; inferred from the file extension when omitted.
    #[arg(long, value_enum)]
    format: Option<input::InputFormat>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    output_format: OutputFormat,
    /// Write output here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Worker threads; 1 runs sequentially.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,
}

#[derive(Args, Debug)]
struct Tuning {
    /// Tolerance for comparing descriptor values.
    #[arg(long, default_value_t = nmseq::DEFAULT_EPS, value_parser = positive_f64)]
    eps: f64,
    /// Six comma-separated descriptor weights w1..w6.
    #[arg(long, value_delimiter = ',')]
    weights: Option<Vec<f64>>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Key {
    Augmented,
    Descriptor,
}

fn positive_f64(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err("must be a positive finite number".into())
    }
}

/// Failure classes, each with its own exit code.
#[derive(Debug)]
enum Failure {
    Input(String),
    Budget(String),
    Disagreement(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Budget(_) => 2,
            Failure::Disagreement(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Budget(m) | Failure::Disagreement(m) => m,
        }
    }
}

impl From<nmseq::Error> for Failure {
    fn from(e: nmseq::Error) -> Self {
        if e.is_resource() {
            Failure::Budget(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
