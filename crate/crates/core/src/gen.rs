//! Seeded instance generators and exhaustive tree enumerators.
//!
//! Every generator takes an explicit ChaCha8 stream so that a seed fixes the
//! output on every platform.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::adversarial::{AdversarySchedule, OracleAdversary, PairEvent, Prediction};
use crate::dyadic::Dyadic;
use crate::error::{invalid, Result};
use crate::graph::Graph;
use crate::sat::{Clause, Literal};
use crate::tree::{FinTree, Word};

/// The generator stream for a seed.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn prefix_closure(alphabet: u32, horizon: usize, paths: impl IntoIterator<Item = Word>) -> FinTree {
    let mut nodes: BTreeSet<Word> = BTreeSet::new();
    for p in paths {
        for n in 0..=p.len() {
            nodes.insert(p[..n].to_vec());
        }
    }
    FinTree::from_nodes(alphabet, horizon, nodes).expect("prefix closures are trees")
}

fn random_word(r: &mut ChaCha8Rng, alphabet: u32, len: usize) -> Word {
    (0..len).map(|_| r.gen_range(0..alphabet)).collect()
}

/// A tree where each child of a kept node is kept with probability `keep`; the root is always kept.
pub fn random_tree(r: &mut ChaCha8Rng, alphabet: u32, depth: usize, keep: f64) -> FinTree {
    let mut nodes: Vec<Word> = vec![vec![]];
    let mut frontier: Vec<Word> = vec![vec![]];
    for _ in 0..depth {
        let mut next = Vec::new();
        for w in &frontier {
            for a in 0..alphabet {
                if r.gen_bool(keep) {
                    let mut c = w.clone();
                    c.push(a);
                    next.push(c);
                }
            }
        }
        nodes.extend(next.iter().cloned());
        frontier = next;
    }
    FinTree::from_nodes(alphabet, depth, nodes).expect("children of kept nodes form a tree")
}

/// A pruned tree: the prefix closure of between 1 and `max_paths` random paths.
pub fn random_pruned_tree(r: &mut ChaCha8Rng, alphabet: u32, depth: usize, max_paths: usize) -> FinTree {
    let count = r.gen_range(1..=max_paths.max(1));
    let paths: Vec<Word> = (0..count).map(|_| random_word(r, alphabet, depth)).collect();
    prefix_closure(alphabet, depth, paths)
}

/// A pruned binary tree with horizon density at least `2^{-c}`.
///
/// Fewer than `c` random positions are pinned to 1, then random subtrees are
/// removed while the density stays at or above the bound.
pub fn random_positive_tree(r: &mut ChaCha8Rng, depth: usize, c: u32) -> Result<FinTree> {
    if depth > 20 || c == 0 {
        return Err(invalid(format!("depth {depth} or density exponent {c} out of range")));
    }
    let pins: usize = r.gen_range(0..c as usize).min(depth);
    let mut positions: Vec<usize> = (0..depth).collect();
    positions.shuffle(r);
    let pinned: BTreeSet<usize> = positions.into_iter().take(pins).collect();
    let mut paths: BTreeSet<u64> =
        (0u64..(1u64 << depth)).filter(|v| pinned.iter().all(|&i| (v >> (depth - 1 - i)) & 1 == 1)).collect();
    let floor = Dyadic::pow2_neg(c);
    for _ in 0..r.gen_range(0..=2 * depth) {
        let len = r.gen_range(1..=depth);
        let prefix = r.gen_range(0u64..(1u64 << len));
        let shift = depth - len;
        let kept: BTreeSet<u64> = paths.iter().copied().filter(|v| v >> shift != prefix).collect();
        if !kept.is_empty() && Dyadic::from_count(kept.len() as u128, depth as u32) >= floor {
            paths = kept;
        }
    }
    let words = paths.into_iter().map(|v| (0..depth).map(|i| ((v >> (depth - 1 - i)) & 1) as u32).collect());
    Ok(prefix_closure(2, depth, words))
}

fn subtrees(depth: usize) -> Vec<Vec<Word>> {
    if depth == 0 {
        return vec![vec![vec![]]];
    }
    let below = subtrees(depth - 1);
    let mut options: Vec<Option<&Vec<Word>>> = vec![None];
    options.extend(below.iter().map(Some));
    let mut out = Vec::new();
    for left in &options {
        for right in &options {
            let mut nodes = vec![vec![]];
            for (a, side) in [(0u32, left), (1u32, right)] {
                if let Some(sub) = side {
                    nodes.extend(sub.iter().map(|w| std::iter::once(a).chain(w.iter().copied()).collect::<Word>()));
                }
            }
            out.push(nodes);
        }
    }
    out
}

/// Every nonempty binary tree of horizon `depth` (1, 4, 25, 676 trees for depths 0 to 3).
pub fn all_trees(depth: usize) -> Result<Vec<FinTree>> {
    if depth > 4 {
        return Err(invalid(format!("enumerating all trees of depth {depth} is infeasible")));
    }
    Ok(subtrees(depth).into_iter().map(|n| FinTree::from_nodes(2, depth, n).expect("built as a tree")).collect())
}

/// Every nonempty pruned binary tree of horizon `depth` (`2^{2^depth} - 1` trees).
pub fn all_pruned_trees(depth: usize) -> Result<Vec<FinTree>> {
    if depth > 4 {
        return Err(invalid(format!("enumerating all pruned trees of depth {depth} is infeasible")));
    }
    let leaves = 1usize << depth;
    Ok((1u64..(1u64 << leaves))
        .map(|mask| {
            let paths = (0..leaves)
                .filter(|i| mask & (1 << i) != 0)
                .map(|v| (0..depth).map(|i| ((v >> (depth - 1 - i)) & 1) as u32).collect());
            prefix_closure(2, depth, paths)
        })
        .collect())
}

/// `count` random 2-branching clauses with lengths in `1..=max_len`, without proper-prefix pairs.
pub fn random_clauses(r: &mut ChaCha8Rng, count: usize, max_len: usize) -> Vec<Clause> {
    let mut out: Vec<Clause> = Vec::new();
    for _ in 0..count * 4 {
        if out.len() == count {
            break;
        }
        let len = r.gen_range(1..=max_len.max(1));
        let c = Clause::new((0..len).map(|i| Literal { atom: i, positive: r.gen_bool(0.5) }));
        if !out.iter().any(|o| o == &c || o.is_proper_prefix_of(&c) || c.is_proper_prefix_of(o)) {
            out.push(c);
        }
    }
    out
}

/// A graph on `0..n` with each edge present with probability `p`.
pub fn random_graph(r: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new();
    for v in 0..n {
        g.add_vertex(v);
    }
    for u in 0..n {
        for v in u + 1..n {
            if r.gen_bool(p) {
                g.add_edge(u, v).expect("u < v");
            }
        }
    }
    g
}

/// Schedules for `count` adversaries with indices `0..count` over `stages` stages.
///
/// Each adversary enumerates pairs from a few columns, with most pairs
/// eligible (`e < x < y < stage`) when they appear.
pub fn random_schedules(r: &mut ChaCha8Rng, count: usize, stages: usize) -> Vec<AdversarySchedule> {
    (0..count)
        .map(|e| {
            let mut events = Vec::new();
            let columns = r.gen_range(1..=3);
            for _ in 0..columns {
                if stages < e + 4 {
                    break;
                }
                let x = r.gen_range(e + 1..stages.saturating_sub(2).max(e + 2));
                for _ in 0..r.gen_range(1..=3) {
                    let y = r.gen_range(x + 1..=x + 6);
                    let stage = r.gen_range(y + 1..=y + 5);
                    events.push(PairEvent { stage, x, y });
                }
            }
            events.sort();
            AdversarySchedule { e, events }
        })
        .collect()
}

/// Oracle tables for `count` adversaries with indices `0..count` and resolution `prefix_len`.
///
/// Each adversary draws a small vertex pool and, walking down the binary
/// tree, adds pool vertices to random prefixes; deeper prefixes inherit
/// everything above them, so the tables are monotone.
pub fn random_oracle_adversaries(r: &mut ChaCha8Rng, count: usize, prefix_len: usize) -> Vec<OracleAdversary> {
    (0..count)
        .map(|e| {
            let pool: Vec<usize> = (0..r.gen_range(3..=6)).map(|_| r.gen_range(0..4 * prefix_len.max(2))).collect();
            let mut table: BTreeMap<Word, BTreeSet<usize>> = BTreeMap::new();
            let mut frontier: Vec<(Word, BTreeSet<usize>)> = vec![(vec![], BTreeSet::new())];
            for len in 0..=prefix_len {
                let mut next = Vec::new();
                for (w, mut set) in frontier {
                    if r.gen_bool(0.35) {
                        set.insert(*pool.choose(r).expect("pool is nonempty"));
                        table.insert(w.clone(), set.clone());
                    }
                    if len < prefix_len && w.len() < 8 {
                        for b in 0..2 {
                            let mut c = w.clone();
                            c.push(b);
                            next.push((c, set.clone()));
                        }
                    }
                }
                frontier = next;
            }
            OracleAdversary { e, prefix_len, table }
        })
        .collect()
}

/// Up to `count` predictions with distinct indices whose sets lie below `horizon`.
pub fn random_predictions(r: &mut ChaCha8Rng, count: usize, horizon: usize) -> Vec<Prediction> {
    let mut out = Vec::new();
    for index in 0..count {
        let size = index + 3;
        if size > horizon {
            break;
        }
        if r.gen_bool(0.25) {
            continue;
        }
        let mut positions: Vec<usize> = (0..horizon).collect();
        positions.shuffle(r);
        let set: BTreeSet<usize> = positions.into_iter().take(size).collect();
        let least = set.iter().next_back().expect("nonempty") + 1;
        let stage = r.gen_range(least..=horizon);
        out.push(Prediction { index, set, stage });
    }
    out
}
