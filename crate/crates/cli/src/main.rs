//! `rwkl`: instance generation, reductions, verification suites and brute-force solving.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod gen;
mod io;
mod reduce;
mod solve;
mod verify;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dimacs,
    Dot,
}

/// Flags shared by every command.
#[derive(Debug, Clone, clap::Args)]
pub struct Common {
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Depth of generated trees, or the depth bound of a search.
    #[arg(long, global = true)]
    pub depth: Option<usize>,
    /// Search budget as a base-2 logarithm of candidates or search nodes.
    #[arg(long, global = true)]
    pub budget: Option<u32>,
    /// Horizon for constructions that run in stages or levels.
    #[arg(long, global = true)]
    pub horizon: Option<usize>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Output file; standard output when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Parser)]
#[command(name = "rwkl", version, about = "Finite-scale reductions between tree, formula and graph problems")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Generate a seeded instance.
    Gen(gen::GenArgs),
    /// Apply a reduction and write its image with a decode table.
    Reduce(reduce::ReduceArgs),
    /// Run a verification suite; exits 1 when a property fails.
    Verify(verify::VerifyArgs),
    /// List every solution of an instance up to the budget.
    Solve(solve::SolveArgs),
}

impl Common {
    /// Enumeration budget for tree searches.
    pub fn enum_log2(&self) -> u32 {
        self.budget.unwrap_or(rwkl_core::tree::DEFAULT_SEARCH_LOG2_BUDGET)
    }

    /// Node budget for coloring searches.
    pub fn search(&self) -> rwkl_core::graph::SearchBudget {
        let mut b = rwkl_core::graph::SearchBudget::default();
        if let Some(k) = self.budget {
            b.max_nodes = 1u64.checked_shl(k).unwrap_or(u64::MAX);
        }
        b
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<rwkl_core::Error>() {
        Some(e) => e.exit_code() as u8,
        None => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Gen(a) => gen::run(&cli.common, &a).map(|()| true),
        Cmd::Reduce(a) => reduce::run(&cli.common, &a).map(|()| true),
        Cmd::Verify(a) => verify::run(&cli.common, &a),
        Cmd::Solve(a) => solve::run(&cli.common, &a).map(|()| true),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
