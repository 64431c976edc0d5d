//! Exhaustive satisfiability and homogeneity oracles.
//!
//! The search assigns atoms in increasing order, false before true, and
//! backtracks as soon as some formula is false under three-valued
//! evaluation. It is exhaustive, so its answers are exact.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::sat::{Assignment, PropFormula, SatHomSet};

/// Cap on the number of free atoms an exhaustive search may branch on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SatBudget {
    pub max_atoms: usize,
}

impl Default for SatBudget {
    fn default() -> Self {
        SatBudget { max_atoms: 24 }
    }
}

fn search(fs: &[PropFormula], atoms: &[usize], asg: &mut Assignment) -> bool {
    let mut undecided = false;
    for f in fs {
        match f.eval_kleene(&|a| asg.get(&a).copied()) {
            Some(false) => return false,
            None => undecided = true,
            Some(true) => {}
        }
    }
    if !undecided {
        return true;
    }
    let Some((&a, rest)) = atoms.split_first() else {
        return false;
    };
    for v in [false, true] {
        asg.insert(a, v);
        if search(fs, rest, asg) {
            return true;
        }
    }
    asg.remove(&a);
    false
}

/// A satisfying assignment of `fs` extending `pins`, or `None`.
///
/// Atoms left undecided by the search are set to false in the result.
pub fn satisfiable(fs: &[PropFormula], pins: &Assignment, budget: SatBudget) -> Result<Option<Assignment>> {
    let all: BTreeSet<usize> = fs.iter().flat_map(|f| f.atoms()).collect();
    let free: Vec<usize> = all.iter().copied().filter(|a| !pins.contains_key(a)).collect();
    if free.len() > budget.max_atoms {
        return Err(Error::Budget {
            what: "satisfiability search atoms",
            needed: free.len() as u64,
            limit: budget.max_atoms as u64,
        });
    }
    let mut asg = pins.clone();
    if !search(fs, &free, &mut asg) {
        return Ok(None);
    }
    for a in all {
        asg.entry(a).or_insert(false);
    }
    Ok(Some(asg))
}

/// True iff the first `n` formulas are simultaneously satisfiable.
///
/// Satisfiability is inherited by subsets, so this decides every finite
/// subset of the first `n` formulas at once.
pub fn finitely_satisfiable(fs: &[PropFormula], n: usize, budget: SatBudget) -> Result<bool> {
    Ok(satisfiable(&fs[..n.min(fs.len())], &Assignment::new(), budget)?.is_some())
}

/// True iff the first `n` formulas are satisfiable with every atom of `H` set to its value.
pub fn sat_homogeneous(fs: &[PropFormula], h: &SatHomSet, n: usize, budget: SatBudget) -> Result<bool> {
    let pins: Assignment = h.atoms.iter().map(|&a| (a, h.value)).collect();
    Ok(satisfiable(&fs[..n.min(fs.len())], &pins, budget)?.is_some())
}

/// Brute-force oracle: every `SatHomSet` with atoms in `[0, bound)` homogeneous for the first `n` formulas.
pub fn enumerate_sat_homogeneous(fs: &[PropFormula], n: usize, bound: usize, budget: SatBudget) -> Result<Vec<SatHomSet>> {
    if bound > 20 {
        return Err(Error::Budget { what: "homogeneous atom-set enumeration", needed: bound as u64, limit: 20 });
    }
    let mut out = Vec::new();
    for m in 0u32..(1 << bound) {
        for value in [false, true] {
            let h = SatHomSet::new((0..bound).filter(|i| m & (1 << i) != 0), value);
            if sat_homogeneous(fs, &h, n, budget)? {
                out.push(h);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sat::{Clause, Literal};

    fn clauses(cs: &[Clause]) -> Vec<PropFormula> {
        cs.iter().map(Clause::to_formula).collect()
    }

    #[test]
    fn contradiction_is_unsatisfiable() {
        let fs = clauses(&[Clause::new([Literal::pos(0)]), Clause::new([Literal::neg(0)])]);
        assert!(!finitely_satisfiable(&fs, 2, SatBudget::default()).unwrap());
        assert!(finitely_satisfiable(&fs, 1, SatBudget::default()).unwrap());
        assert!(finitely_satisfiable(&[], 5, SatBudget::default()).unwrap());
    }

    #[test]
    fn pinning_against_a_clause() {
        let fs = clauses(&[Clause::new([Literal::neg(0)])]);
        assert!(!sat_homogeneous(&fs, &SatHomSet::new([0], true), 1, SatBudget::default()).unwrap());
        assert!(sat_homogeneous(&fs, &SatHomSet::new([0], false), 1, SatBudget::default()).unwrap());
        assert!(sat_homogeneous(&fs, &SatHomSet::new([], true), 1, SatBudget::default()).unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        let fs: Vec<PropFormula> = vec![PropFormula::Or((0..30).map(PropFormula::Atom).collect())];
        assert!(matches!(satisfiable(&fs, &Assignment::new(), SatBudget::default()), Err(Error::Budget { .. })));
    }

    #[test]
    fn returned_assignment_satisfies() {
        let fs = clauses(&[
            Clause::new([Literal::pos(0), Literal::pos(1)]),
            Clause::new([Literal::neg(0)]),
        ]);
        let a = satisfiable(&fs, &Assignment::new(), SatBudget::default()).unwrap().unwrap();
        assert!(fs.iter().all(|f| f.eval_kleene(&|x| a.get(&x).copied()) == Some(true)));
    }
}
