//! The tree of partial colorings of a graph, and clique augmentation.

use std::collections::BTreeSet;

use crate::error::{invalid, Error, Result};
use crate::graph::coloring::{is_proper_coloring, Coloring};
use crate::graph::Graph;
use crate::tree::{tree_homogeneous_to_depth, word_homogeneous, ColorSet, FinTree};

/// Builds the tree whose level-`n` nodes are the proper `k`-colorings of `order[..n]`.
///
/// The tree has `Σ_n (colorings of the first n vertices)` nodes, so callers
/// keep `order` short for edge-sparse graphs.
pub fn graph_to_coloring_tree(g: &Graph, k: u32, order: &[usize]) -> Result<FinTree> {
    if k == 0 {
        return Err(invalid("need at least one color"));
    }
    let distinct: BTreeSet<usize> = order.iter().copied().collect();
    if distinct.len() != order.len() {
        return Err(invalid("vertex order repeats a vertex"));
    }
    if let Some(v) = order.iter().find(|v| !g.has_vertex(**v)) {
        return Err(invalid(format!("vertex {v} is not in the graph")));
    }
    Ok(FinTree::from_predicate(k, order.len(), |sigma| {
        let Some((&last, rest)) = sigma.split_last() else {
            return true;
        };
        let v = order[rest.len()];
        rest.iter().enumerate().all(|(i, &c)| c != last || !g.has_edge(order[i], v))
    }))
}

/// A homogeneous vertex set with a coloring that certifies it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomWitness {
    pub vertices: BTreeSet<usize>,
    /// A proper coloring of `order` that is 0 on `vertices`.
    pub coloring: Coloring,
}

/// Maps a homogeneous set of the coloring tree to vertices, swapping colors `0` and `c`.
///
/// The witness coloring colors the vertices of `order`; when `order` lists
/// every vertex of `G` it is a proper coloring of the whole graph.
pub fn decode_coloring_tree(g: &Graph, order: &[usize], t: &FinTree, h0: &ColorSet) -> Result<HomWitness> {
    if !tree_homogeneous_to_depth(t, h0, t.horizon()) {
        return Err(Error::NotHomogeneous(format!("{h0} for the coloring tree")));
    }
    let sigma = t.level(t.horizon()).iter().find(|w| word_homogeneous(h0, w)).expect("homogeneous at horizon");
    let c = h0.color;
    let swap = |a: u32| if a == c { 0 } else if a == 0 { c } else { a };
    let coloring: Coloring = order.iter().zip(sigma).map(|(&v, &a)| (v, swap(a))).collect();
    let vertices: BTreeSet<usize> = h0.positions.iter().filter(|&&i| i < order.len()).map(|&i| order[i]).collect();
    let sub = g.induced(&order.iter().copied().collect());
    debug_assert!(is_proper_coloring(&sub, &coloring, t.alphabet()));
    debug_assert!(vertices.iter().all(|v| coloring[v] == 0));
    Ok(HomWitness { vertices, coloring })
}

/// Adds `k - 3` fresh vertices forming a clique joined to every vertex of `G`.
///
/// Returns the augmented graph and the fresh vertices.
pub fn clique_augment(g: &Graph, k: u32) -> Result<(Graph, Vec<usize>)> {
    if k < 3 {
        return Err(invalid("clique augmentation needs k ≥ 3"));
    }
    let base = g.max_vertex().map_or(0, |m| m + 1);
    let fresh: Vec<usize> = (base..base + (k - 3) as usize).collect();
    let mut out = g.clone();
    let old: Vec<usize> = g.vertices().collect();
    for (i, &c) in fresh.iter().enumerate() {
        out.add_vertex(c);
        for &d in &fresh[..i] {
            out.add_edge(c, d)?;
        }
        for &v in &old {
            out.add_edge(c, v)?;
        }
    }
    Ok((out, fresh))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::coloring::SearchBudget;
    use crate::graph::parity::is_k_homogeneous;

    fn triangle() -> Graph {
        Graph::from_edges([], [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn triangle_tree_has_six_leaves() {
        let t = graph_to_coloring_tree(&triangle(), 3, &[0, 1, 2]).unwrap();
        assert_eq!(t.level(3).len(), 6);
        let edgeless = Graph::from_edges(0..3, []).unwrap();
        assert_eq!(graph_to_coloring_tree(&edgeless, 2, &[0, 1, 2]).unwrap(), FinTree::full(2, 3));
    }

    #[test]
    fn decode_swaps_colors() {
        let g = triangle();
        let t = graph_to_coloring_tree(&g, 3, &[0, 1, 2]).unwrap();
        let w = decode_coloring_tree(&g, &[0, 1, 2], &t, &ColorSet::new([1], 2)).unwrap();
        assert_eq!(w.vertices, [1].into());
        assert_eq!(w.coloring[&1], 0);
        assert!(is_proper_coloring(&g, &w.coloring, 3));
        assert!(decode_coloring_tree(&g, &[0, 1, 2], &t, &ColorSet::new([0, 1], 0)).is_err());
    }

    #[test]
    fn clique_augmentation() {
        let (same, fresh) = clique_augment(&triangle(), 3).unwrap();
        assert_eq!((same, fresh.len()), (triangle(), 0));
        let (k4, fresh) = clique_augment(&triangle(), 4).unwrap();
        assert_eq!(fresh, vec![3]);
        assert_eq!(k4.edge_count(), 6);
        let b = SearchBudget::default();
        assert!(is_k_homogeneous(&k4, &[0].into(), 4, b).unwrap().is_homogeneous());
        assert!(is_k_homogeneous(&triangle(), &[0].into(), 3, b).unwrap().is_homogeneous());
    }
}
