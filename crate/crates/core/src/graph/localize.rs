//! Localizing 2-homogeneous sets of a bipartite graph into a prescribed set `X`.
//!
//! Every pair of `X` joined by an odd path in `G` is replaced by a fresh path
//! `x – a_n – b_n – y` of length 3 in a new graph `G'` on `X` and the fresh
//! vertices. A homogeneous set for `G'` touches `X` through paths of one
//! parity, and the larger parity class is homogeneous for `G`.

use std::collections::BTreeSet;

use crate::error::{invalid, Error, Result};
use crate::graph::coloring::SearchBudget;
use crate::graph::parity::{enumerate_odd_pairs, is_k_homogeneous, odd_cycle_exists, two_coloring, OddPair};
use crate::graph::Graph;

/// The graph `G'` with the pairs and fresh vertices that built it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphLocalization {
    pub graph: Graph,
    pub x: BTreeSet<usize>,
    pub pairs: Vec<OddPair>,
    /// `(a_n, b_n)` for the `n`-th pair.
    pub fresh: Vec<(usize, usize)>,
}

fn check_input(g: &Graph, x: &BTreeSet<usize>) -> Result<()> {
    if odd_cycle_exists(g) {
        return Err(invalid("graph contains an odd cycle"));
    }
    if let Some(v) = x.iter().find(|v| !g.has_vertex(**v)) {
        return Err(invalid(format!("vertex {v} of X is not in the graph")));
    }
    Ok(())
}

/// Builds `G'`; fresh vertices start just above the largest vertex of `G`.
pub fn localize_graph(g: &Graph, x: &BTreeSet<usize>) -> Result<GraphLocalization> {
    check_input(g, x)?;
    let pairs = enumerate_odd_pairs(g, x);
    let base = g.max_vertex().map_or(0, |m| m + 1);
    let mut out = Graph::new();
    for &v in x {
        out.add_vertex(v);
    }
    let mut fresh = Vec::new();
    for (n, p) in pairs.iter().enumerate() {
        let (a, b) = (base + 2 * n, base + 2 * n + 1);
        out.add_edge(p.x, a)?;
        out.add_edge(a, b)?;
        out.add_edge(b, p.y)?;
        fresh.push((a, b));
    }
    Ok(GraphLocalization { graph: out, x: x.clone(), pairs, fresh })
}

/// `{x ∈ X : x > m}` where `m` is the largest endpoint of an odd pair in `X`.
pub fn bounded_tail(g: &Graph, x: &BTreeSet<usize>) -> Result<BTreeSet<usize>> {
    check_input(g, x)?;
    let m = enumerate_odd_pairs(g, x).iter().map(|p| p.y).max();
    Ok(x.iter().copied().filter(|&v| m.map_or(true, |m| v > m)).collect())
}

/// Maps a homogeneous set `H₀` for `G'` to a homogeneous subset of `X` for `G`.
///
/// Each `x ∈ X` in a component of `G'` meeting `H₀` is classified by the
/// parity of its distance to `H₀`; the larger class is returned, with ties
/// going to the even class.
pub fn decode_localized_graph(g: &Graph, loc: &GraphLocalization, h0: &BTreeSet<usize>) -> Result<BTreeSet<usize>> {
    if !is_k_homogeneous(&loc.graph, h0, 2, SearchBudget::default())?.is_homogeneous() {
        return Err(Error::NotHomogeneous("vertex set for the localized graph".into()));
    }
    let col = two_coloring(&loc.graph).expect("localized graph is bipartite");
    let mut even = BTreeSet::new();
    let mut odd = BTreeSet::new();
    for comp in loc.graph.components() {
        let Some(h) = comp.iter().find(|v| h0.contains(v)) else {
            continue;
        };
        for v in comp.iter().filter(|v| loc.x.contains(v)) {
            if col[v] == col[h] {
                even.insert(*v);
            } else {
                odd.insert(*v);
            }
        }
    }
    let h = if odd.len() > even.len() { odd } else { even };
    if !is_k_homogeneous(g, &h, 2, SearchBudget::default())?.is_homogeneous() {
        return Err(Error::NotHomogeneous("decoded set for the source graph".into()));
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_odd_pair() {
        let g = Graph::from_edges([], [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let x: BTreeSet<usize> = [0, 3].into();
        let loc = localize_graph(&g, &x).unwrap();
        assert_eq!(loc.graph.edges(), vec![(0, 5), (3, 6), (5, 6)]);
        assert!(!odd_cycle_exists(&loc.graph));
        let h = decode_localized_graph(&g, &loc, &[0, 6].into()).unwrap();
        assert_eq!(h, [0].into());
    }

    #[test]
    fn no_odd_pairs_keeps_all_of_x() {
        let g = Graph::from_edges([], [(0, 1), (1, 2)]).unwrap();
        let x: BTreeSet<usize> = [0, 2].into();
        assert_eq!(bounded_tail(&g, &x).unwrap(), x);
        let loc = localize_graph(&g, &x).unwrap();
        assert_eq!(loc.graph.edge_count(), 0);
        assert_eq!(decode_localized_graph(&g, &loc, &[2].into()).unwrap(), [2].into());
    }

    #[test]
    fn rejects_odd_cycles() {
        let g = Graph::from_edges([], [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(localize_graph(&g, &[0].into()).is_err());
    }
}
