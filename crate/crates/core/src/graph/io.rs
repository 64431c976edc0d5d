//! Graph text formats: DOT and a 0-based adjacency list.
//!
//! The adjacency list has one line `v: w1 w2 …` per vertex, listing every
//! neighbor. The DOT reader accepts the subset the writer emits: `graph`
//! blocks with vertex statements `v;` or `v [attrs];` and edge chains
//! `u -- v -- w;`.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Renders `g` in DOT, with optional per-vertex labels.
pub fn write_dot(g: &Graph, labels: Option<&BTreeMap<usize, String>>) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        match labels.and_then(|l| l.get(&v)) {
            Some(label) => writeln!(out, "  {v} [label=\"{}\"];", label.replace('"', "\\\"")).expect("write"),
            None => writeln!(out, "  {v};").expect("write"),
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").expect("write");
    }
    out.push_str("}\n");
    out
}

/// Parses the DOT subset described in the module documentation.
pub fn parse_dot(text: &str) -> Result<Graph> {
    let mut g = Graph::new();
    for (i, raw) in text.lines().enumerate() {
        let err = |msg: String| Error::Parse { line: i + 1, msg };
        let line = raw.split("//").next().unwrap_or("").trim();
        if line.is_empty() || line.starts_with("graph") || line.starts_with("strict") || line == "}" || line == "{" {
            continue;
        }
        let stmt = line.trim_end_matches(';').trim();
        let stmt = stmt.split('[').next().unwrap_or("").trim();
        let ids = stmt
            .split("--")
            .map(|t| t.trim().parse::<usize>().map_err(|_| err(format!("bad vertex id {:?}", t.trim()))))
            .collect::<Result<Vec<_>>>()?;
        if ids.len() == 1 {
            g.add_vertex(ids[0]);
        }
        for w in ids.windows(2) {
            g.add_edge(w[0], w[1]).map_err(|e| err(e.to_string()))?;
        }
    }
    Ok(g)
}

/// Renders `g` as an adjacency list.
pub fn write_adjacency(g: &Graph) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        let ns: Vec<String> = g.neighbors(v).map(|w| w.to_string()).collect();
        if ns.is_empty() {
            writeln!(out, "{v}:").expect("write");
        } else {
            writeln!(out, "{v}: {}", ns.join(" ")).expect("write");
        }
    }
    out
}

/// Parses an adjacency list; edges may be listed from either or both ends.
pub fn parse_adjacency(text: &str) -> Result<Graph> {
    let mut g = Graph::new();
    for (i, raw) in text.lines().enumerate() {
        let err = |msg: String| Error::Parse { line: i + 1, msg };
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (head, tail) = line.split_once(':').ok_or_else(|| err("missing ':'".into()))?;
        let v: usize = head.trim().parse().map_err(|_| err(format!("bad vertex {head:?}")))?;
        g.add_vertex(v);
        for tok in tail.split_whitespace() {
            let w: usize = tok.parse().map_err(|_| err(format!("bad neighbor {tok:?}")))?;
            g.add_edge(v, w).map_err(|e| err(e.to_string()))?;
        }
    }
    Ok(g)
}
