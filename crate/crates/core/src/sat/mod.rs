//! Translations between binary trees and lists of propositional formulas.
//!
//! Atom `a_i` stands for position `i`; an assignment corresponds to the
//! binary word with `σ(i) = 1` exactly when `a_i` is true.

pub mod bridge;
pub mod dimacs;
pub mod formula;
pub mod oracle;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

pub use bridge::{decode_sat_hom, formulas_to_tree, least_unsatisfiable_prefix, tree_to_clauses};
pub use formula::{parse_formulas, write_formulas, PropFormula};
pub use oracle::{finitely_satisfiable, sat_homogeneous, satisfiable, SatBudget};

/// `a_i` or `¬a_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Literal {
    pub atom: usize,
    pub positive: bool,
}

impl Literal {
    /// The positive literal `a_i`.
    pub fn pos(atom: usize) -> Self {
        Literal { atom, positive: true }
    }

    /// The negative literal `¬a_i`.
    pub fn neg(atom: usize) -> Self {
        Literal { atom, positive: false }
    }

    /// Truth value under a total assignment of its atom.
    pub fn eval(&self, value: bool) -> bool {
        value == self.positive
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "a{}", self.atom)
        } else {
            write!(f, "¬a{}", self.atom)
        }
    }
}

/// A disjunction of literals; the empty clause is false.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Clause {
    pub literals: Vec<Literal>,
}

impl Clause {
    /// Builds a clause from literals in order.
    pub fn new(literals: impl IntoIterator<Item = Literal>) -> Self {
        Clause { literals: literals.into_iter().collect() }
    }

    /// True iff the `i`-th literal is built from `a_i` for every `i`.
    pub fn is_two_branching(&self) -> bool {
        self.literals.iter().enumerate().all(|(i, l)| l.atom == i)
    }

    /// True iff `self` is a proper prefix of `other`.
    pub fn is_proper_prefix_of(&self, other: &Clause) -> bool {
        self.literals.len() < other.literals.len() && other.literals[..self.literals.len()] == self.literals[..]
    }

    /// The clause as a formula.
    pub fn to_formula(&self) -> PropFormula {
        PropFormula::Or(self.literals.iter().map(|l| PropFormula::literal(*l)).collect())
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.literals.is_empty() {
            return write!(f, "⊥");
        }
        let parts: Vec<String> = self.literals.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(" ∨ "))
    }
}

/// True iff every clause is 2-branching.
pub fn is_two_branching(clauses: &[Clause]) -> bool {
    clauses.iter().all(Clause::is_two_branching)
}

/// Removes every clause that has a proper prefix in the list, keeping order.
pub fn drop_extended_clauses(clauses: &[Clause]) -> Vec<Clause> {
    let mut out: Vec<Clause> = Vec::new();
    for c in clauses {
        if !clauses.iter().any(|p| p.is_proper_prefix_of(c)) && !out.contains(c) {
            out.push(c.clone());
        }
    }
    out
}

/// A finite truth assignment.
pub type Assignment = BTreeMap<usize, bool>;

/// A set of atoms paired with one truth value.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SatHomSet {
    pub atoms: BTreeSet<usize>,
    pub value: bool,
}

impl SatHomSet {
    /// Builds a set from any collection of atoms.
    pub fn new(atoms: impl IntoIterator<Item = usize>, value: bool) -> Self {
        SatHomSet { atoms: atoms.into_iter().collect(), value }
    }
}

impl fmt::Display for SatHomSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.atoms.iter().map(|a| format!("a{a}")).collect();
        write!(f, "{{{}}} = {}", parts.join(","), self.value)
    }
}
