//! `rwkl reduce`: apply a reduction and write its image with a decode table.

use std::path::PathBuf;

use anyhow::Result;
use clap::{Args, ValueEnum};
use rwkl_core::graph::graph_to_coloring_tree;
use rwkl_core::reductions::{
    chain_code_tree, fixed_color_tree, kary_to_binary, localize_tree, pack_redundant, tournament_from_tree,
    LengthLexEnum, OrderFunction,
};
use rwkl_core::sat::dimacs::{parse_dimacs, write_dimacs};
use rwkl_core::sat::{drop_extended_clauses, formulas_to_tree, tree_to_clauses, SatBudget};
use rwkl_core::tree::format_word;
use rwkl_core::widgets::compile;
use serde_json::{json, Value};

use crate::io::{decode_path, emit, graph_json, input_error, pretty, read_formulas, read_graph, read_text, read_tree};
use crate::{Common, Format};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReduceName {
    Localize,
    Kary2bin,
    Pack,
    Fixcolor,
    Chaincode,
    Tourney,
    Tree2cnf,
    Cnf2tree,
    Sat2graph,
    Graph2tree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderKind {
    /// `g(n) = floor(n/2)`.
    Half,
    /// `g(n) = n`.
    Identity,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    #[arg(value_enum)]
    pub name: ReduceName,
    /// Source instance, or `-` for standard input.
    pub input: PathBuf,
    /// Strictly increasing positions for `localize`; every other position when absent.
    #[arg(long, value_delimiter = ',')]
    pub positions: Option<Vec<usize>>,
    /// Order function for `pack`.
    #[arg(long, value_enum, default_value_t = OrderKind::Half)]
    pub g: OrderKind,
    /// Number of colors for `graph2tree`.
    #[arg(long, default_value_t = 3)]
    pub k: u32,
    /// Where to write the decode table; defaults to `<out>.decode.json`.
    #[arg(long)]
    pub decode: Option<PathBuf>,
}

/// The first `count` words in length-lexicographic order with their indices.
fn word_table(alphabet: u32, count: u64) -> Value {
    let e = LengthLexEnum::new(alphabet);
    let rows: Vec<Value> = (0..count).map(|i| json!([i, format_word(&e.word(i), alphabet)])).collect();
    Value::Array(rows)
}

fn image_and_table(common: &Common, a: &ReduceArgs) -> Result<(String, Value)> {
    let name = a.name.to_possible_value().expect("named").get_name().to_string();
    let tree_image = |t: &rwkl_core::FinTree| t.to_json() + "\n";
    let (image, table) = match a.name {
        ReduceName::Localize => {
            let t = read_tree(&a.input)?;
            let x = a.positions.clone().unwrap_or_else(|| (0..t.horizon()).step_by(2).collect());
            let loc = localize_tree(&t, &x)?;
            let table = json!({ "positions": loc.positions, "source_horizon": loc.source_horizon });
            (tree_image(&loc.tree), table)
        }
        ReduceName::Kary2bin => {
            let t = read_tree(&a.input)?;
            let enc = kary_to_binary(&t);
            let table = json!({
                "bits": enc.bits,
                "source_alphabet": enc.source_alphabet,
                "padded_alphabet": enc.padded_alphabet,
                "initial_positions": enc.initial_positions(),
            });
            (tree_image(&enc.tree), table)
        }
        ReduceName::Pack => {
            let t = read_tree(&a.input)?;
            let len = 1 << (t.horizon() + 2);
            let g = match a.g {
                OrderKind::Half => OrderFunction::floor_half(len),
                OrderKind::Identity => OrderFunction::identity(len),
            };
            let p = pack_redundant(&t, &g)?;
            let h = p.tree.horizon();
            let table = json!({ "g": (0..=h).map(|n| g.get(n)).collect::<Vec<_>>(), "u": p.seq.u });
            (tree_image(&p.tree), table)
        }
        ReduceName::Fixcolor => {
            let s = read_tree(&a.input)?;
            let t = fixed_color_tree(&s)?;
            let table = json!({ "homogeneous_color": 0, "words": word_table(s.alphabet(), t.horizon() as u64) });
            (tree_image(&t), table)
        }
        ReduceName::Chaincode => {
            let t = read_tree(&a.input)?;
            let code = chain_code_tree(&t)?;
            let table = json!({ "bound": code.bound, "words": word_table(t.alphabet(), LengthLexEnum::new(t.alphabet()).offset(t.horizon() + 1)) });
            (tree_image(&code.tree), table)
        }
        ReduceName::Tourney => {
            let t = read_tree(&a.input)?;
            let r = tournament_from_tree(&t)?;
            let n = r.len();
            let beats: Vec<(usize, usize)> =
                (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter(|&(x, y)| x != y && r.beats(x, y)).collect();
            let table = json!({ "source": t.to_doc(), "homogeneous_color_of_bounded_case": 1 });
            (pretty(&json!({ "vertices": n, "beats": beats })), table)
        }
        ReduceName::Tree2cnf => {
            let t = read_tree(&a.input)?;
            let clauses = tree_to_clauses(&t)?;
            let vars: Vec<Value> = (0..t.horizon()).map(|i| json!({ "variable": i + 1, "position": i })).collect();
            let table = json!({ "atoms": vars, "true_color": 1, "false_color": 0 });
            (write_dimacs(&clauses), table)
        }
        ReduceName::Cnf2tree => {
            let fs = read_formulas(&a.input)?;
            let horizon = common.horizon.unwrap_or(fs.len());
            let t = formulas_to_tree(&fs, horizon, SatBudget::default())?;
            let atoms: Vec<Value> = (0..horizon).map(|i| json!({ "position": i, "variable": i + 1 })).collect();
            let table = json!({ "atoms": atoms, "true_color": 1, "false_color": 0 });
            (tree_image(&t), table)
        }
        ReduceName::Sat2graph => {
            let doc = parse_dimacs(&read_text(&a.input)?)?;
            let clauses = drop_extended_clauses(&doc.clauses);
            if clauses.iter().any(|c| c.literals.is_empty()) {
                return Err(input_error("the clause set contains the empty clause".into()));
            }
            let cg = compile(&clauses, doc.num_vars)?;
            let image = match common.format {
                Some(Format::Json) => pretty(&graph_json(&cg.graph)),
                Some(Format::Dimacs) => return Err(input_error("graphs have no DIMACS form".into())),
                Some(Format::Dot) | None => cg.to_dot(),
            };
            let table: Value = serde_json::from_str(&cg.decode_table_json())?;
            (image, json!({ "truth_vertices": [0, 1, 2], "vertices": table }))
        }
        ReduceName::Graph2tree => {
            let g = read_graph(&a.input)?;
            let order: Vec<usize> = g.vertices().collect();
            let t = graph_to_coloring_tree(&g, a.k, &order)?;
            (tree_image(&t), json!({ "order": order, "colors": a.k }))
        }
    };
    Ok((image, json!({ "reduction": name, "table": table })))
}

pub fn run(common: &Common, a: &ReduceArgs) -> Result<()> {
    let (image, table) = image_and_table(common, a)?;
    let decode = a.decode.clone().or_else(|| common.out.as_deref().map(decode_path));
    match decode {
        Some(path) => {
            emit(common.out.as_ref(), &image)?;
            emit(Some(&path), &pretty(&table))
        }
        None => emit(None, &pretty(&json!({ "image": image, "decode": table }))),
    }
}
