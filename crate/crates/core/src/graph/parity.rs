//! Bipartiteness, odd paths and the homogeneity verdict for vertex sets.
//!
//! For two colors, a set `H` is homogeneous exactly when the graph has no odd
//! cycle and no two vertices of `H` are joined by an odd-length path. Odd
//! paths are found by breadth-first search in the bipartite double cover,
//! whose vertices are `(v, parity)`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{invalid, Error, Result};
use crate::graph::coloring::{find_coloring, Coloring, SearchBudget};
use crate::graph::Graph;

/// Proper 2-coloring by breadth-first search, or `None` if some component has an odd cycle.
pub fn two_coloring(g: &Graph) -> Option<Coloring> {
    let mut col = Coloring::new();
    for s in g.vertices() {
        if col.contains_key(&s) {
            continue;
        }
        col.insert(s, 0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                match col.get(&w) {
                    None => {
                        col.insert(w, 1 - col[&u]);
                        queue.push_back(w);
                    }
                    Some(&c) if c == col[&u] => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(col)
}

/// True iff some cycle has odd length.
pub fn odd_cycle_exists(g: &Graph) -> bool {
    two_coloring(g).is_none()
}

/// A shortest odd-length walk from `x` to `y`, as its vertex sequence.
///
/// In a graph without odd cycles every such walk is a simple path.
pub fn odd_path(g: &Graph, x: usize, y: usize) -> Option<Vec<usize>> {
    if !g.has_vertex(x) || !g.has_vertex(y) {
        return None;
    }
    let mut parent: BTreeMap<(usize, u8), (usize, u8)> = BTreeMap::new();
    let mut seen = BTreeSet::from([(x, 0u8)]);
    let mut queue = VecDeque::from([(x, 0u8)]);
    while let Some((u, p)) = queue.pop_front() {
        if (u, p) == (y, 1) {
            let mut path = vec![y];
            let mut cur = (y, 1u8);
            while let Some(&prev) = parent.get(&cur) {
                path.push(prev.0);
                cur = prev;
            }
            path.reverse();
            return Some(path);
        }
        for w in g.neighbors(u) {
            let next = (w, 1 - p);
            if seen.insert(next) {
                parent.insert(next, (u, p));
                queue.push_back(next);
            }
        }
    }
    None
}

/// True iff `x` and `y` are joined by a walk of odd length.
pub fn odd_path_exists(g: &Graph, x: usize, y: usize) -> bool {
    odd_path(g, x, y).is_some()
}

/// A pair `x < y` of `X` joined by an odd path, with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddPair {
    pub x: usize,
    pub y: usize,
    pub path: Vec<usize>,
}

/// Every pair `x < y` from `X` joined by an odd path, lexicographically.
pub fn enumerate_odd_pairs(g: &Graph, x: &BTreeSet<usize>) -> Vec<OddPair> {
    let xs: Vec<usize> = x.iter().copied().collect();
    let mut out = Vec::new();
    for (i, &a) in xs.iter().enumerate() {
        for &b in &xs[i + 1..] {
            if let Some(path) = odd_path(g, a, b) {
                out.push(OddPair { x: a, y: b, path });
            }
        }
    }
    out
}

/// Outcome of a homogeneity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// Some proper coloring gives every vertex of `H` color 0.
    Homogeneous,
    /// No such coloring exists.
    NotHomogeneous,
    /// The search ran out of budget before deciding.
    Unknown { budget: u64 },
}

impl Verdict {
    /// True only for a decided positive answer.
    pub fn is_homogeneous(&self) -> bool {
        matches!(self, Verdict::Homogeneous)
    }
}

/// Decides whether `H` is `k`-homogeneous for `G`.
///
/// Every finite subgraph of a finite graph is an induced subgraph of the whole
/// graph, so it suffices to find one proper `k`-coloring of `G` that is 0 on
/// `H`. For `k = 2` this is exact through the odd-path characterization; for
/// `k ≥ 3` it is a budgeted exhaustive search.
pub fn is_k_homogeneous(g: &Graph, h: &BTreeSet<usize>, k: u32, budget: SearchBudget) -> Result<Verdict> {
    if let Some(v) = h.iter().find(|v| !g.has_vertex(**v)) {
        return Err(invalid(format!("vertex {v} of H is not in the graph")));
    }
    match k {
        0 => Ok(if g.vertex_count() == 0 { Verdict::Homogeneous } else { Verdict::NotHomogeneous }),
        1 => Ok(if g.edge_count() == 0 { Verdict::Homogeneous } else { Verdict::NotHomogeneous }),
        2 => {
            let Some(col) = two_coloring(g) else {
                return Ok(Verdict::NotHomogeneous);
            };
            for comp in g.components() {
                let sides: BTreeSet<u32> = comp.iter().filter(|v| h.contains(v)).map(|v| col[v]).collect();
                if sides.len() > 1 {
                    return Ok(Verdict::NotHomogeneous);
                }
            }
            Ok(Verdict::Homogeneous)
        }
        _ => {
            let pins: Coloring = h.iter().map(|&v| (v, 0)).collect();
            match find_coloring(g, k, &pins, budget) {
                Ok(Some(_)) => Ok(Verdict::Homogeneous),
                Ok(None) => Ok(Verdict::NotHomogeneous),
                Err(Error::Budget { limit, .. }) => Ok(Verdict::Unknown { budget: limit }),
                Err(e) => Err(e),
            }
        }
    }
}
