use std::collections::BTreeSet;

use proptest::prelude::*;
use rwkl_core::gen;
use rwkl_core::graph::{is_k_homogeneous, is_proper_coloring, SearchBudget};
use rwkl_core::sat::dimacs::{parse_dimacs, write_dimacs};
use rwkl_core::sat::{
    decode_sat_hom, drop_extended_clauses, is_two_branching, satisfiable, tree_to_clauses, Assignment, Clause, Literal,
    PropFormula, SatBudget,
};
use rwkl_core::widgets::{check_widget_lemmas, compile, decode_homogeneous, find_normalized_coloring, DecodeBudget};
use rwkl_core::FinTree;

fn clause_holds(c: &Clause, bits: u32) -> bool {
    c.literals.iter().any(|l| ((bits >> l.atom) & 1 == 1) == l.positive)
}

/// Every assignment of atoms `0..n`, as bit masks, satisfying all clauses.
fn models(clauses: &[Clause], n: usize) -> Vec<u32> {
    (0u32..(1 << n)).filter(|&b| clauses.iter().all(|c| clause_holds(c, b))).collect()
}

fn assignment(bits: u32, n: usize) -> Assignment {
    (0..n).map(|i| (i, (bits >> i) & 1 == 1)).collect()
}

/// All 2-branching clauses of length `1..=n`.
fn all_clauses(n: usize) -> Vec<Clause> {
    let mut out = Vec::new();
    for len in 1..=n {
        for signs in 0u32..(1 << len) {
            out.push(Clause::new((0..len).map(|i| Literal { atom: i, positive: (signs >> i) & 1 == 0 })));
        }
    }
    out
}

fn homogeneous(t: &FinTree, positions: &BTreeSet<usize>, color: u32) -> bool {
    (0..=t.horizon()).all(|l| t.level(l).iter().any(|w| positions.iter().all(|&i| i >= w.len() || w[i] == color)))
}

#[test]
fn compiled_graph_is_colorable_exactly_when_the_clauses_are_satisfiable() {
    let n = 4;
    let pool = all_clauses(n);
    let mut sets: Vec<Vec<Clause>> = vec![vec![]];
    for a in 0..pool.len() {
        sets.push(vec![pool[a].clone()]);
        for b in a + 1..pool.len() {
            sets.push(vec![pool[a].clone(), pool[b].clone()]);
            for c in b + 1..pool.len() {
                sets.push(vec![pool[a].clone(), pool[b].clone(), pool[c].clone()]);
            }
        }
    }
    let mut checked = 0;
    for cs in sets {
        if cs.iter().any(|p| cs.iter().any(|c| p.is_proper_prefix_of(c))) {
            continue;
        }
        let g = compile(&cs, n).unwrap();
        let sat = models(&cs, n);
        let colorable = find_normalized_coloring(&g, SearchBudget::default()).unwrap().is_some();
        assert_eq!(colorable, !sat.is_empty(), "clauses {cs:?}");
        for &bits in &sat {
            let nu = g.canonical_coloring(&assignment(bits, n)).unwrap();
            assert!(is_proper_coloring(&g.graph, &nu, 3));
        }
        checked += 1;
    }
    assert_eq!(checked, 2860);
}

#[test]
fn color_classes_decode_to_homogeneous_atom_sets() {
    let mut r = gen::rng(17);
    for _ in 0..40 {
        let cs = gen::random_clauses(&mut r, 4, 5);
        let g = compile(&cs, 5).unwrap();
        for bits in models(&cs, 5) {
            let nu = g.canonical_coloring(&assignment(bits, 5)).unwrap();
            for c in 0..3u32 {
                let class: BTreeSet<usize> = g.graph.vertices().filter(|v| nu[v] == c).collect();
                let h0 = decode_homogeneous(&g, &class, DecodeBudget::default()).unwrap();
                let pinned: Vec<Clause> = h0
                    .atoms
                    .iter()
                    .map(|&a| Clause::new([Literal { atom: a, positive: h0.value }]))
                    .chain(cs.iter().cloned())
                    .collect();
                assert!(!models(&pinned, 5).is_empty(), "{cs:?} class {c} decodes to {h0}");
            }
        }
    }
}

#[test]
fn trees_survive_the_trip_through_graphs() {
    for d in 1..=3 {
        for t in gen::all_pruned_trees(d).unwrap() {
            let cs = drop_extended_clauses(&tree_to_clauses(&t).unwrap());
            let g = compile(&cs, d).unwrap();
            let lits: Vec<usize> = (3..3 + 2 * d).collect();
            for m in 0u32..(1 << lits.len()) {
                let h: BTreeSet<usize> = (0..lits.len()).filter(|i| m & (1 << i) != 0).map(|i| lits[i]).collect();
                if !is_k_homogeneous(&g.graph, &h, 3, SearchBudget::default()).unwrap().is_homogeneous() {
                    continue;
                }
                let set = decode_sat_hom(&decode_homogeneous(&g, &h, DecodeBudget::default()).unwrap());
                assert!(homogeneous(&t, &set.positions, set.color), "{} with {h:?}", t.to_json());
            }
        }
    }
}

#[test]
fn gadget_lemmas_hold_for_short_clauses() {
    let report = check_widget_lemmas(4, SearchBudget::default()).unwrap();
    assert!(report.passed(), "{report}");
}

fn clause_strategy() -> impl Strategy<Value = Vec<Clause>> {
    (any::<u64>(), 1usize..8, 1usize..6).prop_map(|(seed, count, len)| gen::random_clauses(&mut gen::rng(seed), count, len))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn satisfiability_matches_truth_tables(cs in clause_strategy()) {
        let fs: Vec<PropFormula> = cs.iter().map(Clause::to_formula).collect();
        let got = satisfiable(&fs, &Assignment::new(), SatBudget::default()).unwrap();
        prop_assert_eq!(got.is_some(), !models(&cs, 6).is_empty());
        if let Some(a) = got {
            let bits = (0..6).filter(|i| a.get(i).copied().unwrap_or(false)).fold(0u32, |acc, i| acc | (1 << i));
            prop_assert!(cs.iter().all(|c| clause_holds(c, bits)));
        }
    }

    #[test]
    fn dimacs_round_trips(cs in clause_strategy()) {
        let doc = parse_dimacs(&write_dimacs(&cs)).unwrap();
        prop_assert_eq!(doc.two_branching, Some(is_two_branching(&cs)));
        prop_assert_eq!(doc.clauses, cs);
    }

    #[test]
    fn generated_clause_lists_compile(cs in clause_strategy()) {
        let g = compile(&cs, 0).unwrap();
        prop_assert!(g.check_step_bound().is_ok());
        let colorable = find_normalized_coloring(&g, SearchBudget::default()).unwrap().is_some();
        prop_assert_eq!(colorable, !models(&cs, 6).is_empty());
    }
}
