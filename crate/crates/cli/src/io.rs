//! Reading instances and writing artifacts.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use rwkl_core::graph::io::{parse_adjacency, parse_dot, write_dot};
use rwkl_core::graph::Graph;
use rwkl_core::sat::dimacs::parse_dimacs;
use rwkl_core::sat::{parse_formulas, Clause, PropFormula};
use rwkl_core::FinTree;
use serde::Serialize;
use serde_json::json;

use crate::Format;

/// Contents of `path`, or of standard input for `-`.
pub fn read_text(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading standard input")?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| input_error(format!("reading {}: {e}", path.display())))
}

/// An I/O or parse failure reported with the input-error exit code.
pub fn input_error(msg: String) -> anyhow::Error {
    rwkl_core::Error::InvalidInput(msg).into()
}

pub fn read_tree(path: &Path) -> Result<FinTree> {
    Ok(FinTree::from_json(&read_text(path)?)?)
}

/// Formulas from DIMACS text or from the one-formula-per-line syntax.
pub fn read_formulas(path: &Path) -> Result<Vec<PropFormula>> {
    let text = read_text(path)?;
    let dimacs = text.lines().map(str::trim).any(|l| l.starts_with("p cnf"));
    if dimacs {
        Ok(parse_dimacs(&text)?.clauses.iter().map(Clause::to_formula).collect())
    } else {
        Ok(parse_formulas(&text)?)
    }
}

#[derive(Serialize, serde::Deserialize)]
struct GraphDoc {
    vertices: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

/// A graph from DOT, JSON `{vertices, edges}` or adjacency-list text.
pub fn read_graph(path: &Path) -> Result<Graph> {
    let text = read_text(path)?;
    let head = text.trim_start();
    if head.starts_with('{') {
        let doc: GraphDoc = serde_json::from_str(&text).map_err(|e| input_error(format!("graph document: {e}")))?;
        return Ok(Graph::from_edges(doc.vertices, doc.edges)?);
    }
    if head.starts_with("graph") || head.starts_with("strict") {
        return Ok(parse_dot(&text)?);
    }
    Ok(parse_adjacency(&text)?)
}

pub fn graph_json(g: &Graph) -> serde_json::Value {
    json!({ "vertices": g.vertices().collect::<Vec<_>>(), "edges": g.edges() })
}

/// A graph in the requested format; DOT unless JSON is asked for.
pub fn render_graph(g: &Graph, format: Option<Format>) -> Result<String> {
    match format {
        Some(Format::Json) => Ok(pretty(&graph_json(g))),
        Some(Format::Dimacs) => Err(input_error("graphs have no DIMACS form".into())),
        Some(Format::Dot) | None => Ok(write_dot(g, None)),
    }
}

pub fn pretty(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("documents serialize");
    s.push('\n');
    s
}

/// Writes `text` to `out`, or to standard output.
pub fn emit(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Path of the decode table written next to `out`.
pub fn decode_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".decode.json");
    PathBuf::from(name)
}
