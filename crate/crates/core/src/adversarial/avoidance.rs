//! Trees that avoid a list of predicted homogeneous sets, and the subset codes they use.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::tree::{ColorSet, FinTree};

fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return None;
        }
    }
    Some(acc as u64)
}

/// The colexicographic bijection between `ℕ` and the `k`-element subsets of `ℕ`.
///
/// A set `{c_0 < … < c_{k-1}}` has code `Σ_i C(c_i, i+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetCode {
    pub k: usize,
}

impl SubsetCode {
    pub fn new(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(invalid("subset codes need k ≥ 1"));
        }
        Ok(SubsetCode { k })
    }

    /// The code of a `k`-element set.
    pub fn encode(&self, set: &BTreeSet<usize>) -> Result<u64> {
        if set.len() != self.k {
            return Err(invalid(format!("expected {} elements, got {}", self.k, set.len())));
        }
        set.iter().enumerate().try_fold(0u64, |acc, (i, &c)| {
            binomial(c as u64, i as u64 + 1)
                .and_then(|b| acc.checked_add(b))
                .ok_or_else(|| invalid("subset code overflows 64 bits"))
        })
    }

    /// The set with code `n`.
    pub fn decode(&self, mut n: u64) -> Result<BTreeSet<usize>> {
        let mut out = BTreeSet::new();
        for i in (1..=self.k as u64).rev() {
            let mut c = i - 1;
            while binomial(c + 1, i).ok_or_else(|| invalid("subset code overflows 64 bits"))? <= n {
                c += 1;
            }
            n -= binomial(c, i).expect("checked above");
            out.insert(c as usize);
        }
        Ok(out)
    }
}

/// A converged prediction: `P` has `index + 3` elements and is active from `stage` on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prediction {
    pub index: usize,
    pub set: BTreeSet<usize>,
    pub stage: usize,
}

impl Prediction {
    /// A prediction active from the first stage past its largest element.
    pub fn new(index: usize, set: BTreeSet<usize>) -> Self {
        let stage = set.iter().next_back().map_or(0, |m| m + 1);
        Prediction { index, set, stage }
    }

    /// The prediction given by a code for `b_{index+3}`.
    pub fn from_code(index: usize, code: u64) -> Result<Self> {
        Ok(Prediction::new(index, SubsetCode::new(index + 3)?.decode(code)?))
    }

    /// First string length at which the prediction constrains strings.
    pub fn active_from(&self) -> usize {
        self.stage.max(self.index + 1)
    }
}

/// The tree of `σ` such that no active prediction's set is constant on `σ`.
///
/// A prediction with index `i` rules out a fraction `2^{-i-2}` of the
/// strings at each level once active, so the density stays at least 1/2.
pub fn avoidance_tree(predictions: &[Prediction], horizon: usize) -> Result<FinTree> {
    let mut by_index: BTreeMap<usize, &Prediction> = BTreeMap::new();
    for p in predictions {
        if p.set.len() != p.index + 3 {
            return Err(invalid(format!("prediction {} has {} elements, expected {}", p.index, p.set.len(), p.index + 3)));
        }
        if p.set.iter().next_back().is_some_and(|&m| m >= p.stage) {
            return Err(invalid(format!("prediction {} is active at stage {} before its elements are defined", p.index, p.stage)));
        }
        if by_index.insert(p.index, p).is_some() {
            return Err(invalid(format!("prediction index {} appears twice", p.index)));
        }
    }
    Ok(FinTree::from_predicate(2, horizon, |sigma| {
        by_index.values().all(|p| {
            if sigma.len() < p.active_from() {
                return true;
            }
            let mut vals = p.set.iter().map(|&i| sigma[i]);
            let first = vals.next().expect("predictions are nonempty");
            vals.any(|v| v != first)
        })
    }))
}

/// True iff the `index + 3` least elements of `h` differ from the prediction's set.
///
/// Sets too small to have that many elements trivially differ.
pub fn defeats(h: &ColorSet, p: &Prediction) -> bool {
    let least: BTreeSet<usize> = h.positions.iter().take(p.index + 3).copied().collect();
    least.len() < p.index + 3 || least != p.set
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyadic::Dyadic;

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn colex_order_for_pairs() {
        let code = SubsetCode::new(2).unwrap();
        assert_eq!(code.decode(0).unwrap(), set(&[0, 1]));
        assert_eq!(code.decode(1).unwrap(), set(&[0, 2]));
        assert_eq!(code.decode(2).unwrap(), set(&[1, 2]));
        for n in 0..200 {
            assert_eq!(code.encode(&code.decode(n).unwrap()).unwrap(), n);
        }
        let one = SubsetCode::new(1).unwrap();
        assert_eq!(one.decode(7).unwrap(), set(&[7]));
    }

    #[test]
    fn no_predictions_gives_the_full_tree() {
        assert_eq!(avoidance_tree(&[], 5).unwrap(), FinTree::full(2, 5));
    }

    #[test]
    fn one_prediction_removes_constant_strings() {
        let t = avoidance_tree(&[Prediction::new(0, set(&[0, 1, 2]))], 6).unwrap();
        assert!(!t.contains(&[0, 0, 0]) && !t.contains(&[1, 1, 1]));
        assert!(t.contains(&[0, 1, 0]));
        for s in 0..=6 {
            assert!(t.level_density(s) >= Dyadic::new(3, 2));
        }
    }

    #[test]
    fn rejects_wrong_sizes_and_early_stages() {
        assert!(avoidance_tree(&[Prediction::new(0, set(&[0, 1]))], 4).is_err());
        let early = Prediction { index: 0, set: set(&[0, 1, 5]), stage: 3 };
        assert!(avoidance_tree(&[early], 6).is_err());
    }
}
