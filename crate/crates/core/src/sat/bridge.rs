//! Trees to 2-branching clause sets and formula lists to trees.

use crate::error::{invalid, precondition, Result};
use crate::sat::oracle::{finitely_satisfiable, SatBudget};
use crate::sat::{Clause, Literal, PropFormula, SatHomSet};
use crate::tree::{ColorSet, FinTree, Word};

/// One clause `θ_σ` per word `σ ∉ T` with `|σ| ≤ horizon`, in length-lexicographic order.
///
/// The `i`-th literal of `θ_σ` is `a_i` when `σ(i) = 0` and `¬a_i` when
/// `σ(i) = 1`, so `θ_σ` is falsified exactly by the assignments extending `σ`.
pub fn tree_to_clauses(t: &FinTree) -> Result<Vec<Clause>> {
    if t.alphabet() != 2 {
        return Err(invalid("clause sets are built from binary trees"));
    }
    if t.horizon() > 20 {
        return Err(invalid(format!("horizon {} is too large to list every missing word", t.horizon())));
    }
    let mut out = Vec::new();
    for n in 0..=t.horizon() {
        for v in 0u32..(1 << n) {
            let sigma: Word = (0..n).map(|i| (v >> (n - 1 - i)) & 1).collect();
            if !t.contains(&sigma) {
                out.push(clause_of(&sigma));
            }
        }
    }
    Ok(out)
}

/// `θ_σ`.
pub fn clause_of(sigma: &[u32]) -> Clause {
    Clause::new(sigma.iter().enumerate().map(|(i, &b)| if b == 0 { Literal::pos(i) } else { Literal::neg(i) }))
}

/// `{i : a_i ∈ H₀}` with color 1 for true and 0 for false.
pub fn decode_sat_hom(h0: &SatHomSet) -> ColorSet {
    ColorSet::new(h0.atoms.iter().copied(), u32::from(h0.value))
}

/// Least `n ≤ up_to` such that the first `n` formulas are unsatisfiable.
pub fn least_unsatisfiable_prefix(fs: &[PropFormula], up_to: usize, budget: SatBudget) -> Result<Option<usize>> {
    for n in 0..=up_to.min(fs.len()) {
        if !finitely_satisfiable(fs, n, budget)? {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// The tree of words `σ` under which no `φ_i` with `i < |σ|` evaluates to false.
///
/// A formula that mentions an atom at or beyond `|σ|` is undefined on `σ`
/// and so never excludes it.
pub fn formulas_to_tree(fs: &[PropFormula], horizon: usize, budget: SatBudget) -> Result<FinTree> {
    if let Some(n) = least_unsatisfiable_prefix(fs, horizon, budget)? {
        return Err(precondition(format!("the first {n} formulas are unsatisfiable")));
    }
    Ok(FinTree::from_predicate(2, horizon, |sigma| {
        fs.iter().take(sigma.len()).all(|f| f.eval_prefix(sigma) != Some(false))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sat::parse_formulas;
    use crate::tree::parse_word;

    fn bin(nodes: &[&str], d: usize) -> FinTree {
        FinTree::from_nodes(2, d, nodes.iter().map(|s| parse_word(s, 2).unwrap())).unwrap()
    }

    #[test]
    fn full_tree_has_no_clauses() {
        assert!(tree_to_clauses(&FinTree::full(2, 2)).unwrap().is_empty());
    }

    #[test]
    fn left_subtree_clauses() {
        let cs = tree_to_clauses(&bin(&["", "0", "00", "01"], 2)).unwrap();
        let expected = vec![
            Clause::new([Literal::neg(0)]),
            Clause::new([Literal::neg(0), Literal::pos(1)]),
            Clause::new([Literal::neg(0), Literal::neg(1)]),
        ];
        assert_eq!(cs, expected);
        assert!(crate::sat::is_two_branching(&cs));
    }

    #[test]
    fn empty_tree_gives_empty_clause() {
        assert_eq!(tree_to_clauses(&FinTree::empty(2, 1)).unwrap()[0], Clause::new([]));
    }

    #[test]
    fn formula_trees() {
        let b = SatBudget::default();
        let t = formulas_to_tree(&parse_formulas("a0").unwrap(), 3, b).unwrap();
        assert_eq!(t, FinTree::full(2, 3).gamma_restrict(&[0].into(), 1));
        let t = formulas_to_tree(&parse_formulas("(or a0 a1)\n(not a0)").unwrap(), 2, b).unwrap();
        assert_eq!(t, bin(&["", "0", "1", "01"], 2));
        assert_eq!(formulas_to_tree(&[], 3, b).unwrap(), FinTree::full(2, 3));
        let bad = parse_formulas("a0\na1\n(not a0)").unwrap();
        assert_eq!(least_unsatisfiable_prefix(&bad, 5, b).unwrap(), Some(3));
        assert!(formulas_to_tree(&bad, 5, b).is_err());
    }
}
