use std::collections::{BTreeMap, BTreeSet, VecDeque};

use proptest::prelude::*;
use rwkl_core::adversarial::{
    avoidance_tree, bad_set, defeats, greedy_homogeneous, measure_build, priority_build, verify_defeated, SubsetCode,
};
use rwkl_core::gen;
use rwkl_core::graph::Graph;
use rwkl_core::tree::enumerate_homogeneous;
use rwkl_core::{Dyadic, FinTree};

/// `count / 2^n` of horizon nodes that are 0 on every position of `f`.
fn density_with_zeros(t: &FinTree, f: &BTreeSet<usize>) -> (usize, usize) {
    let n = t.horizon();
    (t.level(n).iter().filter(|w| f.iter().all(|&i| w[i] == 0)).count(), n)
}

fn at_least_pow2(count: usize, n: usize, k: u32) -> bool {
    // count / 2^n >= 2^-k  iff  count * 2^k >= 2^n
    (count as u128) << k >= 1u128 << n
}

/// Side of every vertex in a 2-coloring found by breadth-first search, or `None` on an odd cycle.
fn sides(g: &Graph) -> Option<BTreeMap<usize, (usize, u8)>> {
    let mut out: BTreeMap<usize, (usize, u8)> = BTreeMap::new();
    for s in g.vertices() {
        if out.contains_key(&s) {
            continue;
        }
        out.insert(s, (s, 0));
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            let (root, p) = out[&u];
            for w in g.neighbors(u) {
                match out.get(&w) {
                    Some(&(_, pw)) if pw == p => return None,
                    Some(_) => {}
                    None => {
                        out.insert(w, (root, 1 - p));
                        q.push_back(w);
                    }
                }
            }
        }
    }
    Some(out)
}

#[test]
fn bad_sets_stay_below_two_c() {
    let mut r = gen::rng(3);
    for c in 3..=5u32 {
        for _ in 0..40 {
            let t = gen::random_positive_tree(&mut r, 10, c).unwrap();
            let (count, n) = density_with_zeros(&t, &BTreeSet::new());
            assert!(at_least_pow2(count, n, c));
            let bad = bad_set(&t, c, &BTreeSet::new()).unwrap();
            let expected: BTreeSet<usize> =
                (0..n).filter(|&i| !at_least_pow2(density_with_zeros(&t, &[i].into()).0, n, 2 * c)).collect();
            assert_eq!(bad, expected);
            assert!(bad.len() < 2 * c as usize, "c={c} bad={bad:?}");
        }
    }
}

#[test]
fn greedy_sets_keep_their_density_bounds() {
    let mut r = gen::rng(4);
    for c in 3..=4u32 {
        for _ in 0..10 {
            let t = gen::random_positive_tree(&mut r, 12, c).unwrap();
            let res = greedy_homogeneous(&t, c, 3).unwrap();
            assert!(res.certified());
            let mut h = BTreeSet::new();
            for step in &res.steps {
                h.insert(step.chosen);
                let (count, n) = density_with_zeros(&t, &h);
                assert!(at_least_pow2(count, n, c << (step.step + 1)));
                assert_eq!(step.density, Dyadic::from_count(count as u128, n as u32));
            }
        }
    }
}

#[test]
fn avoidance_trees_are_dense_and_defeat_their_predictions() {
    let mut r = gen::rng(5);
    for _ in 0..20 {
        let preds = gen::random_predictions(&mut r, 4, 10);
        let t = avoidance_tree(&preds, 10).unwrap();
        for s in 0..=10 {
            assert!(2 * t.level(s).len() >= 1 << s, "level {s}");
        }
        for h in enumerate_homogeneous(&t, 10, 10, 20).unwrap() {
            assert!(preds.iter().all(|p| defeats(&h, p)), "{h} against {preds:?}");
        }
    }
}

#[test]
fn priority_graphs_are_forests() {
    let mut r = gen::rng(6);
    for _ in 0..30 {
        let advs = gen::random_schedules(&mut r, 4, 40);
        let run = priority_build(&advs, 40).unwrap();
        assert!(run.bipartite_after.iter().all(|&b| b));
        assert!(sides(&run.graph).is_some());
        let comps = run.graph.components().len();
        assert_eq!(run.graph.edge_count() + comps, run.graph.vertex_count());
        for a in &run.log {
            assert!(a.u > a.stage && a.v > a.stage);
            let adv = advs.iter().find(|s| s.e == a.e).unwrap();
            assert!(verify_defeated(&run.graph, adv));
        }
    }
}

#[test]
fn measure_runs_replay_and_defeat_when_type_two_acts() {
    let mut r = gen::rng(7);
    let mut type_two = 0;
    for _ in 0..10 {
        let advs = gen::random_oracle_adversaries(&mut r, 3, 10);
        let run = measure_build(&advs, 12).unwrap();
        assert!(run.replays());
        assert!(run.bipartite_after.iter().all(|&b| b));
        for req in &run.requirements {
            if req.type_two.is_some() {
                type_two += 1;
                assert!(req.defeated.gt_ratio(2, 5));
            }
        }
    }
    assert!(type_two > 0);
}

proptest! {
    #[test]
    fn subset_codes_are_a_bijection(k in 1usize..6, n in 0u64..5000) {
        let code = SubsetCode::new(k).unwrap();
        let set = code.decode(n).unwrap();
        prop_assert_eq!(set.len(), k);
        prop_assert_eq!(code.encode(&set).unwrap(), n);
    }

    #[test]
    fn priority_runs_are_deterministic(seed in any::<u64>()) {
        let advs = gen::random_schedules(&mut gen::rng(seed), 3, 30);
        prop_assert_eq!(priority_build(&advs, 30).unwrap(), priority_build(&advs, 30).unwrap());
    }
}
