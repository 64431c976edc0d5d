//! Simple undirected graphs, colorings, parity and homogeneous vertex sets.

pub mod coloring;
pub mod io;
pub mod localize;
pub mod parity;
pub mod tree;

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{invalid, Result};

pub use coloring::{enumerate_colorings, find_coloring, is_proper_coloring, Coloring, SearchBudget};
pub use localize::{bounded_tail, decode_localized_graph, localize_graph, GraphLocalization};
pub use parity::{enumerate_odd_pairs, is_k_homogeneous, odd_cycle_exists, odd_path, odd_path_exists, OddPair, Verdict};
pub use tree::{clique_augment, decode_coloring_tree, graph_to_coloring_tree, HomWitness};

/// A simple undirected graph on natural-number vertices.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    adj: BTreeMap<usize, BTreeSet<usize>>,
}

impl Graph {
    /// The empty graph.
    pub fn new() -> Self {
        Graph::default()
    }

    /// Builds a graph from vertices and edges, rejecting self-loops.
    pub fn from_edges(vertices: impl IntoIterator<Item = usize>, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::new();
        for v in vertices {
            g.add_vertex(v);
        }
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds an isolated vertex (no effect if present).
    pub fn add_vertex(&mut self, v: usize) {
        self.adj.entry(v).or_default();
    }

    /// Adds an undirected edge and both endpoints.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(invalid(format!("self-loop at vertex {u}")));
        }
        self.adj.entry(u).or_default().insert(v);
        self.adj.entry(v).or_default().insert(u);
        Ok(())
    }

    /// Removes an edge if present; returns whether it was there.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        let had = self.adj.get_mut(&u).is_some_and(|s| s.remove(&v));
        if let Some(s) = self.adj.get_mut(&v) {
            s.remove(&u);
        }
        had
    }

    /// True iff `(u, v)` is an edge.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(&u).is_some_and(|s| s.contains(&v))
    }

    /// True iff `v` is a vertex.
    pub fn has_vertex(&self, v: usize) -> bool {
        self.adj.contains_key(&v)
    }

    /// Vertices in increasing order.
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.adj.keys().copied()
    }

    /// Neighbors of `v` in increasing order (empty for unknown vertices).
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj.get(&v).into_iter().flat_map(|s| s.iter().copied())
    }

    /// Degree of `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.adj.get(&v).map_or(0, |s| s.len())
    }

    /// Edges `(u, v)` with `u < v`, lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj.iter().flat_map(|(&u, s)| s.range(u + 1..).map(move |&v| (u, v))).collect()
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.adj.values().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Largest vertex id, if any.
    pub fn max_vertex(&self) -> Option<usize> {
        self.adj.keys().next_back().copied()
    }

    /// The subgraph induced by `keep`.
    pub fn induced(&self, keep: &BTreeSet<usize>) -> Graph {
        let adj = self
            .adj
            .iter()
            .filter(|(v, _)| keep.contains(v))
            .map(|(&v, s)| (v, s.iter().copied().filter(|w| keep.contains(w)).collect()))
            .collect();
        Graph { adj }
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<BTreeSet<usize>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for v in self.vertices() {
            if seen.contains(&v) {
                continue;
            }
            let mut comp = BTreeSet::from([v]);
            let mut stack = vec![v];
            while let Some(u) = stack.pop() {
                for w in self.neighbors(u) {
                    if comp.insert(w) {
                        stack.push(w);
                    }
                }
            }
            seen.extend(comp.iter().copied());
            out.push(comp);
        }
        out
    }
}
