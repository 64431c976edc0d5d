//! Bad positions of a positive-density tree and the greedy homogeneous set.
//!
//! For a binary tree `T`, `|T^{s+1}| ≤ 2|T^s|`, so level densities never
//! increase and the minimum level density is the density at the horizon.
//! Both operations below therefore read densities off the horizon level.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::dyadic::Dyadic;
use crate::error::{invalid, precondition, Result};
use crate::tree::{ColorSet, FinTree};

fn check_binary(t: &FinTree) -> Result<()> {
    if t.alphabet() != 2 {
        return Err(invalid(format!("density needs alphabet 2, got {}", t.alphabet())));
    }
    Ok(())
}

/// Density at the horizon of `T ∩ Γ⁰_F`.
pub fn restricted_density(t: &FinTree, f: &BTreeSet<usize>) -> Result<Dyadic> {
    check_binary(t)?;
    let n = t.horizon();
    let count = t.level(n).iter().filter(|w| f.iter().all(|&i| i >= n || w[i] == 0)).count();
    Ok(Dyadic::from_count(count as u128, n as u32))
}

/// `{n < horizon : μ(T ∩ Γ⁰_F ∩ Γ⁰_n) < 2^{-2c}}`, with `μ` read at the horizon.
pub fn bad_set(t: &FinTree, c: u32, f: &BTreeSet<usize>) -> Result<BTreeSet<usize>> {
    check_binary(t)?;
    let threshold = log2_threshold(2 * c)?;
    let mut out = BTreeSet::new();
    for n in 0..t.horizon() {
        let mut fn_ = f.clone();
        fn_.insert(n);
        if restricted_density(t, &fn_)? < threshold {
            out.insert(n);
        }
    }
    Ok(out)
}

fn log2_threshold(k: u32) -> Result<Dyadic> {
    if k > Dyadic::MAX_LOG2_DENOMINATOR {
        return Err(invalid(format!("threshold 2^-{k} is below the supported precision")));
    }
    Ok(Dyadic::pow2_neg(k))
}

/// One step of [`greedy_homogeneous`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreedyStep {
    /// Step index `s`.
    pub step: usize,
    /// `h_s`.
    pub chosen: usize,
    /// `Bad(·, T ∩ Γ⁰_{H_s}, c·2^s)`.
    pub bad: BTreeSet<usize>,
    /// `μ(T ∩ Γ⁰_{H_{s+1}})`.
    pub density: Dyadic,
    /// The required lower bound `2^{-c·2^{s+1}}`.
    pub bound: Dyadic,
}

/// Result of [`greedy_homogeneous`], with its density certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreedyResult {
    /// `H` with color 0.
    pub set: ColorSet,
    pub steps: Vec<GreedyStep>,
    /// False when the horizon ran out before all requested steps.
    pub complete: bool,
}

impl GreedyResult {
    /// True iff every recorded step meets its bound.
    pub fn certified(&self) -> bool {
        self.steps.iter().all(|s| s.density >= s.bound)
    }
}

/// Picks `h_s` as the least position above `max(H_s ∪ {0})` that is not bad for `T ∩ Γ⁰_{H_s}` with parameter `c·2^s`.
pub fn greedy_homogeneous(t: &FinTree, c: u32, steps: usize) -> Result<GreedyResult> {
    check_binary(t)?;
    if c < 3 {
        return Err(invalid(format!("the bad-set bound needs c ≥ 3, got {c}")));
    }
    if restricted_density(t, &BTreeSet::new())? < log2_threshold(c)? {
        return Err(precondition(format!("tree density is below 2^-{c}")));
    }
    let mut h: BTreeSet<usize> = BTreeSet::new();
    let mut out = Vec::new();
    for s in 0..steps {
        let cs = c.checked_shl(s as u32).filter(|&v| 2 * v <= Dyadic::MAX_LOG2_DENOMINATOR);
        let Some(cs) = cs else {
            return Ok(GreedyResult { set: ColorSet::new(h, 0), steps: out, complete: false });
        };
        let bad = bad_set(t, cs, &h)?;
        let floor = h.iter().next_back().copied().unwrap_or(0);
        let Some(chosen) = (floor + 1..t.horizon()).find(|n| !bad.contains(n)) else {
            return Ok(GreedyResult { set: ColorSet::new(h, 0), steps: out, complete: false });
        };
        h.insert(chosen);
        let density = restricted_density(t, &h)?;
        out.push(GreedyStep { step: s, chosen, bad, density, bound: log2_threshold(2 * cs)? });
    }
    Ok(GreedyResult { set: ColorSet::new(h, 0), steps: out, complete: true })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pinned_ones(depth: usize, pins: &[usize]) -> FinTree {
        FinTree::from_predicate(2, depth, |w| pins.iter().all(|&i| i >= w.len() || w[i] == 1))
    }

    #[test]
    fn pinned_positions_are_bad() {
        let t = pinned_ones(6, &[0, 1, 2]);
        assert_eq!(bad_set(&t, 3, &BTreeSet::new()).unwrap(), [0, 1, 2].into_iter().collect());
        assert!(bad_set(&FinTree::full(2, 6), 3, &BTreeSet::new()).unwrap().is_empty());
    }

    #[test]
    fn greedy_on_the_full_tree_takes_least_positions() {
        let r = greedy_homogeneous(&FinTree::full(2, 8), 3, 3).unwrap();
        assert_eq!(r.set.positions, [1, 2, 3].into_iter().collect());
        assert!(r.complete && r.certified());
    }

    #[test]
    fn greedy_skips_bad_positions() {
        let t = pinned_ones(8, &[0, 1, 2]);
        let r = greedy_homogeneous(&t, 3, 2).unwrap();
        assert_eq!(r.steps[0].chosen, 3);
        assert_eq!(r.steps[0].density, Dyadic::new(1, 4));
        assert!(r.certified());
    }

    #[test]
    fn choosing_a_bad_position_breaks_the_invariant() {
        let t = pinned_ones(8, &[0, 1, 2]);
        let h: BTreeSet<usize> = [1].into_iter().collect();
        assert!(restricted_density(&t, &h).unwrap() < Dyadic::pow2_neg(6));
    }

    #[test]
    fn runs_out_of_horizon_gracefully() {
        let r = greedy_homogeneous(&FinTree::full(2, 3), 3, 5).unwrap();
        assert!(!r.complete);
        assert_eq!(r.set.positions, [1, 2].into_iter().collect());
    }
}
