use std::collections::BTreeSet;

use proptest::prelude::*;
use rwkl_core::gen;
use rwkl_core::graph::io::{parse_adjacency, parse_dot, write_adjacency, write_dot};
use rwkl_core::graph::{
    clique_augment, decode_localized_graph, enumerate_colorings, find_coloring, is_k_homogeneous, is_proper_coloring,
    localize_graph, odd_cycle_exists, odd_path, Coloring, Graph, SearchBudget,
};

/// Every map from the vertices of `g` to `0..k`, as a list of colors in vertex order.
fn all_maps(n: usize, k: u32) -> impl Iterator<Item = Vec<u32>> {
    (0..(k as u64).pow(n as u32)).map(move |mut v| {
        (0..n)
            .map(|_| {
                let c = (v % k as u64) as u32;
                v /= k as u64;
                c
            })
            .collect()
    })
}

/// `H` is `k`-homogeneous iff every finite induced subgraph has a proper `k`-coloring constant 0 on `H`.
/// For a finite graph the whole graph is the largest such subgraph.
fn homogeneous_by_definition(g: &Graph, h: &BTreeSet<usize>, k: u32) -> bool {
    let vs: Vec<usize> = g.vertices().collect();
    all_maps(vs.len(), k).any(|cols| {
        let nu: Coloring = vs.iter().copied().zip(cols).collect();
        h.iter().all(|v| nu[v] == 0) && g.edges().iter().all(|(a, b)| nu[a] != nu[b])
    })
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (any::<u64>(), 1..=max_n, 0.1f64..0.7).prop_map(|(seed, n, p)| gen::random_graph(&mut gen::rng(seed), n, p))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn two_homogeneity_matches_the_definition(g in graph_strategy(7), mask in any::<u8>()) {
        let h: BTreeSet<usize> = g.vertices().filter(|v| mask & (1 << v) != 0).collect();
        let got = is_k_homogeneous(&g, &h, 2, SearchBudget::default()).unwrap().is_homogeneous();
        prop_assert_eq!(got, homogeneous_by_definition(&g, &h, 2));
    }

    #[test]
    fn three_homogeneity_matches_the_definition(g in graph_strategy(6), mask in any::<u8>()) {
        let h: BTreeSet<usize> = g.vertices().filter(|v| mask & (1 << v) != 0).collect();
        let got = is_k_homogeneous(&g, &h, 3, SearchBudget::default()).unwrap().is_homogeneous();
        prop_assert_eq!(got, homogeneous_by_definition(&g, &h, 3));
    }

    #[test]
    fn coloring_enumeration_counts_match(g in graph_strategy(6), k in 2u32..=3) {
        let vs: Vec<usize> = g.vertices().collect();
        let brute = all_maps(vs.len(), k)
            .filter(|cols| {
                let nu: Coloring = vs.iter().copied().zip(cols.iter().copied()).collect();
                is_proper_coloring(&g, &nu, k)
            })
            .count();
        let got = enumerate_colorings(&g, k, &Coloring::new(), SearchBudget::default()).unwrap();
        prop_assert_eq!(got.len(), brute);
        prop_assert!(got.iter().all(|nu| is_proper_coloring(&g, nu, k)));
        prop_assert_eq!(find_coloring(&g, k, &Coloring::new(), SearchBudget::default()).unwrap().is_some(), brute > 0);
    }

    #[test]
    fn odd_paths_are_odd_walks(g in graph_strategy(8), a in 0usize..8, b in 0usize..8) {
        if let Some(p) = odd_path(&g, a, b) {
            prop_assert_eq!(p.len() % 2, 0);
            prop_assert_eq!((p[0], *p.last().unwrap()), (a, b));
            prop_assert!(p.windows(2).all(|e| g.has_edge(e[0], e[1])));
        }
    }

    #[test]
    fn text_formats_round_trip(g in graph_strategy(9)) {
        prop_assert_eq!(parse_adjacency(&write_adjacency(&g)).unwrap(), g.clone());
        prop_assert_eq!(parse_dot(&write_dot(&g, None)).unwrap(), g);
    }

    #[test]
    fn graph_localization_decodes_to_homogeneous_subsets(seed in any::<u64>(), n in 2usize..=8, xmask in any::<u8>()) {
        let mut r = gen::rng(seed);
        let g = gen::random_graph(&mut r, n, 0.3);
        prop_assume!(!odd_cycle_exists(&g));
        let x: BTreeSet<usize> = (0..n).filter(|v| xmask & (1 << v) != 0).collect();
        let loc = localize_graph(&g, &x).unwrap();
        prop_assert!(!odd_cycle_exists(&loc.graph));
        let vs: Vec<usize> = loc.graph.vertices().collect();
        prop_assume!(vs.len() <= 12);
        for m in 0u32..(1 << vs.len()) {
            let h0: BTreeSet<usize> = (0..vs.len()).filter(|i| m & (1 << i) != 0).map(|i| vs[i]).collect();
            if !is_k_homogeneous(&loc.graph, &h0, 2, SearchBudget::default()).unwrap().is_homogeneous() {
                continue;
            }
            let h = decode_localized_graph(&g, &loc, &h0).unwrap();
            prop_assert!(h.is_subset(&x));
            prop_assert!(homogeneous_by_definition(&g, &h, 2));
        }
    }
}

#[test]
fn two_homogeneity_agrees_on_every_graph_up_to_five_vertices() {
    for n in 0..=5usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for m in 0u32..(1 << pairs.len()) {
            let g = Graph::from_edges(0..n, (0..pairs.len()).filter(|i| m & (1 << i) != 0).map(|i| pairs[i])).unwrap();
            for hm in 0u32..(1 << n) {
                let h: BTreeSet<usize> = (0..n).filter(|v| hm & (1 << v) != 0).collect();
                let got = is_k_homogeneous(&g, &h, 2, SearchBudget::default()).unwrap().is_homogeneous();
                assert_eq!(got, homogeneous_by_definition(&g, &h, 2), "edges {:?} H {h:?}", g.edges());
            }
        }
    }
}

#[test]
fn clique_augmentation_raises_the_color_count() {
    let c5 = Graph::from_edges([], [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
    let (g, fresh) = clique_augment(&c5, 4).unwrap();
    assert_eq!(fresh, vec![5]);
    assert!(find_coloring(&g, 3, &Coloring::new(), SearchBudget::default()).unwrap().is_none());
    assert!(find_coloring(&g, 4, &Coloring::new(), SearchBudget::default()).unwrap().is_some());
}
