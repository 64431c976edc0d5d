//! `rwkl solve`: every solution of an instance up to the budget.

use std::collections::BTreeMap;
use std::path::PathBuf;

use anyhow::Result;
use clap::{Args, ValueEnum};
use rwkl_core::graph::enumerate_colorings;
use rwkl_core::sat::oracle::enumerate_sat_homogeneous;
use rwkl_core::sat::SatBudget;
use rwkl_core::tree::enumerate_homogeneous;

use crate::io::{emit, pretty, read_formulas, read_graph, read_tree};
use crate::Common;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolveKind {
    /// Color sets homogeneous for a tree (JSON).
    Homogeneous,
    /// Proper colorings of a graph (DOT, JSON or adjacency list).
    Colorings,
    /// Homogeneous atom sets for a formula list (DIMACS or formula lines).
    SatHomogeneous,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(value_enum)]
    pub kind: SolveKind,
    /// Instance file, or `-` for standard input.
    pub input: PathBuf,
    /// Number of colors for `colorings`.
    #[arg(long, default_value_t = 3)]
    pub k: u32,
    /// Largest solution size; defaults to the horizon or atom count.
    #[arg(long)]
    pub bound: Option<usize>,
}

pub fn run(common: &Common, a: &SolveArgs) -> Result<()> {
    let text = match a.kind {
        SolveKind::Homogeneous => {
            let t = read_tree(&a.input)?;
            let d = common.depth.unwrap_or(t.horizon()).min(t.horizon());
            pretty(&enumerate_homogeneous(&t, d, a.bound.unwrap_or(d), common.enum_log2())?)
        }
        SolveKind::Colorings => {
            let g = read_graph(&a.input)?;
            pretty(&enumerate_colorings(&g, a.k, &BTreeMap::new(), common.search())?)
        }
        SolveKind::SatHomogeneous => {
            let fs = read_formulas(&a.input)?;
            let atoms = fs.iter().flat_map(|f| f.atoms()).max().map_or(0, |m| m + 1);
            let bound = a.bound.or(common.depth).unwrap_or(atoms);
            pretty(&enumerate_sat_homogeneous(&fs, fs.len(), bound, SatBudget::default())?)
        }
    };
    emit(common.out.as_ref(), &text)
}
