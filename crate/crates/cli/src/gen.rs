//! `rwkl gen`: seeded instance generation.

use std::collections::BTreeMap;

use anyhow::Result;
use clap::{Args, ValueEnum};
use rwkl_core::gen::{
    random_clauses, random_graph, random_oracle_adversaries, random_positive_tree, random_schedules, random_tree, rng,
};
use rwkl_core::reductions::tournament_from_tree;
use rwkl_core::sat::dimacs::write_dimacs;
use rwkl_core::tree::format_word;
use serde_json::json;

use crate::io::{emit, pretty, render_graph};
use crate::Common;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Tree,
    PositiveMeasureTree,
    Clauses,
    Graph,
    Tournament,
    Adversary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Pair-enumeration schedules for the priority construction.
    Priority,
    /// Oracle tables for the measure construction.
    Measure,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub kind: GenKind,
    /// Density exponent: the tree keeps at least `2^-c` of each level.
    #[arg(long, default_value_t = 3)]
    pub c: u32,
    /// Alphabet size of generated trees.
    #[arg(long, default_value_t = 2)]
    pub alphabet: u32,
    /// Number of clauses, graph vertices or adversaries.
    #[arg(long)]
    pub count: Option<usize>,
    /// Maximum number of events per adversary schedule.
    #[arg(long, default_value_t = 8)]
    pub events: usize,
    #[arg(long, value_enum, default_value_t = Family::Priority)]
    pub family: Family,
}

pub fn run(common: &Common, a: &GenArgs) -> Result<()> {
    let mut r = rng(common.seed);
    let text = match a.kind {
        GenKind::Tree => random_tree(&mut r, a.alphabet, common.depth.unwrap_or(4), 0.7).to_json() + "\n",
        GenKind::PositiveMeasureTree => {
            let t = random_positive_tree(&mut r, common.depth.unwrap_or(8), a.c)?;
            eprintln!("horizon density {} >= 1/2^{}", t.min_level_density()?, a.c);
            t.to_json() + "\n"
        }
        GenKind::Clauses => write_dimacs(&random_clauses(&mut r, a.count.unwrap_or(6), common.depth.unwrap_or(4))),
        GenKind::Graph => render_graph(&random_graph(&mut r, a.count.unwrap_or(6), 0.4), common.format)?,
        GenKind::Tournament => {
            let t = random_tree(&mut r, 2, common.depth.unwrap_or(6), 0.8);
            let tour = tournament_from_tree(&t)?;
            let n = tour.len();
            let beats: Vec<(usize, usize)> =
                (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter(|&(x, y)| x != y && tour.beats(x, y)).collect();
            pretty(&json!({ "vertices": n, "beats": beats, "source": t.to_doc() }))
        }
        GenKind::Adversary => match a.family {
            Family::Priority => {
                let mut advs = random_schedules(&mut r, a.count.unwrap_or(3), common.horizon.unwrap_or(20));
                for adv in &mut advs {
                    adv.events.truncate(a.events);
                }
                pretty(&advs)
            }
            Family::Measure => {
                let prefix = common.horizon.unwrap_or(8);
                let advs = random_oracle_adversaries(&mut r, a.count.unwrap_or(3), prefix);
                let docs: Vec<_> = advs
                    .iter()
                    .map(|adv| {
                        let table: BTreeMap<String, _> =
                            adv.table.iter().map(|(sigma, set)| (format_word(sigma, 2), set)).collect();
                        json!({ "e": adv.e, "prefix_len": adv.prefix_len, "table": table })
                    })
                    .collect();
                pretty(&docs)
            }
        },
    };
    emit(common.out.as_ref(), &text)
}
