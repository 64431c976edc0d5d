//! Tournaments from binary trees and homogeneous sets from transitive subtournaments.
//!
//! With `σ_s` the leftmost node of `T^s`, `R(x, s)` holds for `x < s` exactly
//! when `σ_s(x) = 1`. A transitive subtournament then splits into the two
//! cases of a limit argument, which is evaluated here at a finite horizon.

use crate::error::{invalid, Error, Result};
use crate::tree::{tree_homogeneous_to_depth, ColorSet, FinTree};

/// A tournament on `[0, n)`, stored as its full relation matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tournament {
    beats: Vec<Vec<bool>>,
}

impl Tournament {
    /// Builds a tournament from `edge(x, y)` for `x < y`, meaning `R(x, y)`.
    pub fn from_fn(n: usize, mut edge: impl FnMut(usize, usize) -> bool) -> Self {
        let mut beats = vec![vec![false; n]; n];
        for y in 0..n {
            for x in 0..y {
                if edge(x, y) {
                    beats[x][y] = true;
                } else {
                    beats[y][x] = true;
                }
            }
        }
        Tournament { beats }
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.beats.len()
    }

    /// True iff there are no vertices.
    pub fn is_empty(&self) -> bool {
        self.beats.is_empty()
    }

    /// `R(x, y)`.
    pub fn beats(&self, x: usize, y: usize) -> bool {
        self.beats[x][y]
    }

    /// Irreflexive and total on distinct pairs, with exactly one direction each.
    pub fn is_valid(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| !self.beats[x][x] && (0..n).all(|y| x == y || self.beats[x][y] != self.beats[y][x]))
    }

    /// True iff `R(u_i, u_j)` for all `i < j`.
    pub fn is_transitive_order(&self, u: &[usize]) -> bool {
        (0..u.len()).all(|i| (i + 1..u.len()).all(|j| self.beats(u[i], u[j])))
    }
}

/// The tournament on `[0, horizon]` read off the leftmost node of each level.
pub fn tournament_from_tree(t: &FinTree) -> Result<Tournament> {
    if t.alphabet() != 2 {
        return Err(invalid("tournaments are built from binary trees"));
    }
    if !t.has_node_per_level() {
        return Err(invalid("tree needs a node at every level"));
    }
    let leftmost: Vec<&Vec<u32>> = (0..=t.horizon()).map(|s| t.level(s).iter().next().expect("nonempty")).collect();
    Ok(Tournament::from_fn(t.horizon() + 1, |x, s| leftmost[s][x] == 1))
}

/// Exhaustive search for a transitive subtournament of exactly `size` vertices.
///
/// The result is listed in its transitive order: `R(u_i, u_j)` for `i < j`.
pub fn transitive_subtournament(r: &Tournament, size: usize) -> Option<Vec<usize>> {
    fn go(r: &Tournament, cands: &[usize], need: usize, acc: &mut Vec<usize>) -> bool {
        if need == 0 {
            return true;
        }
        for &v in cands {
            let rest: Vec<usize> = cands.iter().copied().filter(|&w| w != v && r.beats(v, w)).collect();
            if rest.len() + 1 < need {
                continue;
            }
            acc.push(v);
            if go(r, &rest, need - 1, acc) {
                return true;
            }
            acc.pop();
        }
        false
    }
    let all: Vec<usize> = (0..r.len()).collect();
    let mut acc = Vec::new();
    go(r, &all, size, &mut acc).then_some(acc)
}

/// Greedy transitive subtournament of size at least `⌊log₂ n⌋ + 1`.
///
/// Repeatedly takes a vertex of maximum out-degree among the remaining
/// candidates and keeps only the vertices it beats.
pub fn greedy_transitive(r: &Tournament) -> Vec<usize> {
    let mut cands: Vec<usize> = (0..r.len()).collect();
    let mut out = Vec::new();
    while !cands.is_empty() {
        let v = *cands
            .iter()
            .max_by_key(|&&v| (cands.iter().filter(|&&w| r.beats(v, w)).count(), std::cmp::Reverse(v)))
            .expect("nonempty");
        out.push(v);
        cands.retain(|&w| r.beats(v, w));
    }
    out
}

/// Which of the two limit cases produced a homogeneous set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TournamentCase {
    /// Endpoints of non-homogeneous chains, thinned to an `R`-decreasing set, color 0.
    Unbounded(ColorSet),
    /// The part of `U` beyond every such endpoint, color 1.
    Bounded(ColorSet),
}

impl TournamentCase {
    /// The homogeneous set of either case.
    pub fn set(&self) -> &ColorSet {
        match self {
            TournamentCase::Unbounded(h) | TournamentCase::Bounded(h) => h,
        }
    }
}

/// Evaluates the case split on a transitive subtournament `U` at depth `d`.
///
/// An element `u` ends a chain that is not color-1 homogeneous exactly when
/// its `R`-predecessors in `U` together with `u` are not, since homogeneity is
/// inherited by subsets. Both candidate sets are checked against `T` up to
/// `d`; the one with more positions below `d` wins, and if neither has any
/// such position the horizon is too small to tell the cases apart.
pub fn homog_from_transitive(t: &FinTree, r: &Tournament, u: &[usize], d: usize) -> Result<TournamentCase> {
    if !r.is_transitive_order(u) {
        return Err(invalid("vertex sequence is not in transitive order"));
    }
    if d > t.horizon() {
        return Err(invalid(format!("depth {d} exceeds horizon {}", t.horizon())));
    }
    let ends: Vec<usize> = (0..u.len())
        .filter(|&i| !tree_homogeneous_to_depth(t, &ColorSet::new(u[..=i].iter().copied(), 1), d))
        .map(|i| u[i])
        .collect();
    let cutoff = ends.iter().max().copied();
    let bounded = ColorSet::new(u.iter().copied().filter(|&v| cutoff.map_or(true, |m| v > m)), 1);
    let mut thinned: Vec<usize> = Vec::new();
    let mut sorted = ends.clone();
    sorted.sort_unstable();
    for x in sorted {
        if thinned.iter().all(|&y| r.beats(x, y)) {
            thinned.push(x);
        }
    }
    let unbounded = ColorSet::new(thinned, 0);
    let informative = |h: &ColorSet| h.positions.iter().filter(|&&p| p < d).count();
    let mut cands = Vec::new();
    if tree_homogeneous_to_depth(t, &bounded, d) {
        cands.push(TournamentCase::Bounded(bounded));
    }
    if tree_homogeneous_to_depth(t, &unbounded, d) {
        cands.push(TournamentCase::Unbounded(unbounded));
    }
    let best = cands.into_iter().max_by_key(|c| informative(c.set()));
    match best {
        Some(c) if informative(c.set()) > 0 => Ok(c),
        _ => Err(Error::Undetermined {
            horizon: d,
            reason: "neither case yields a position below the horizon".into(),
        }),
    }
}

/// For each column `x`, the last stage `s` at which `R(x, s)` differs from `R(x, s-1)`.
pub fn stability_report(r: &Tournament) -> Vec<Option<usize>> {
    (0..r.len())
        .map(|x| (x + 2..r.len()).filter(|&s| r.beats(x, s) != r.beats(x, s - 1)).last())
        .collect()
}
