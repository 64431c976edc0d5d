//! Propositional formulas, partial evaluation and a prefix-notation text format.
//!
//! The text format writes one formula per line as an S-expression over atoms
//! `a0, a1, …` and the connectives `not`, `and`, `or`, `implies`; `(or)` is
//! false and `(and)` is true. Blank lines and lines starting with `#` are skipped.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sat::Literal;

/// A propositional formula over indexed atoms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PropFormula {
    Atom(usize),
    Not(Box<PropFormula>),
    And(Vec<PropFormula>),
    Or(Vec<PropFormula>),
    Implies(Box<PropFormula>, Box<PropFormula>),
}

impl PropFormula {
    /// The formula of a literal.
    pub fn literal(l: Literal) -> Self {
        if l.positive {
            PropFormula::Atom(l.atom)
        } else {
            PropFormula::Not(Box::new(PropFormula::Atom(l.atom)))
        }
    }

    /// Every atom index occurring in the formula.
    pub fn atoms(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<usize>) {
        match self {
            PropFormula::Atom(a) => {
                out.insert(*a);
            }
            PropFormula::Not(f) => f.collect_atoms(out),
            PropFormula::And(fs) | PropFormula::Or(fs) => fs.iter().for_each(|f| f.collect_atoms(out)),
            PropFormula::Implies(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    /// Three-valued (Kleene) evaluation: `None` when the partial assignment does not decide it.
    pub fn eval_kleene(&self, value: &impl Fn(usize) -> Option<bool>) -> Option<bool> {
        match self {
            PropFormula::Atom(a) => value(*a),
            PropFormula::Not(f) => f.eval_kleene(value).map(|b| !b),
            PropFormula::And(fs) => {
                let mut all = Some(true);
                for f in fs {
                    match f.eval_kleene(value) {
                        Some(false) => return Some(false),
                        None => all = None,
                        Some(true) => {}
                    }
                }
                all
            }
            PropFormula::Or(fs) => {
                let mut any = Some(false);
                for f in fs {
                    match f.eval_kleene(value) {
                        Some(true) => return Some(true),
                        None => any = None,
                        Some(false) => {}
                    }
                }
                any
            }
            PropFormula::Implies(a, b) => match (a.eval_kleene(value), b.eval_kleene(value)) {
                (Some(false), _) | (_, Some(true)) => Some(true),
                (Some(true), Some(false)) => Some(false),
                _ => None,
            },
        }
    }

    /// Value under the assignment coded by `σ`, where `a_i` is true iff `σ(i) = 1`.
    ///
    /// A formula that mentions any atom `a_m` with `m ≥ |σ|` is undefined
    /// (`None`), even when the atoms below `|σ|` would already decide it.
    pub fn eval_prefix(&self, sigma: &[u32]) -> Option<bool> {
        if self.atoms().iter().any(|&a| a >= sigma.len()) {
            return None;
        }
        self.eval_kleene(&|a| Some(sigma[a] == 1))
    }
}

impl fmt::Display for PropFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PropFormula::Atom(a) => write!(f, "a{a}"),
            PropFormula::Not(g) => write!(f, "(not {g})"),
            PropFormula::And(gs) | PropFormula::Or(gs) => {
                write!(f, "({}", if matches!(self, PropFormula::And(_)) { "and" } else { "or" })?;
                for g in gs {
                    write!(f, " {g}")?;
                }
                write!(f, ")")
            }
            PropFormula::Implies(a, b) => write!(f, "(implies {a} {b})"),
        }
    }
}

struct Parser<'a> {
    tokens: Vec<&'a str>,
    pos: usize,
    line: usize,
}

fn tokenize(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in s.char_indices() {
        if c == '(' || c == ')' || c.is_whitespace() {
            if let Some(st) = start.take() {
                out.push(&s[st..i]);
            }
            if !c.is_whitespace() {
                out.push(&s[i..i + 1]);
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(st) = start {
        out.push(&s[st..]);
    }
    out
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { line: self.line, msg: msg.into() }
    }

    fn next(&mut self) -> Result<&'a str> {
        let t = self.tokens.get(self.pos).copied().ok_or_else(|| self.err("unexpected end of formula"))?;
        self.pos += 1;
        Ok(t)
    }

    fn formula(&mut self) -> Result<PropFormula> {
        let t = self.next()?;
        if t == ")" {
            return Err(self.err("unexpected ')'"));
        }
        if t != "(" {
            return t
                .strip_prefix('a')
                .and_then(|n| n.parse::<usize>().ok())
                .map(PropFormula::Atom)
                .ok_or_else(|| self.err(format!("bad atom {t:?}")));
        }
        let head = self.next()?;
        let mut args = Vec::new();
        while self.tokens.get(self.pos) != Some(&")") {
            args.push(self.formula()?);
        }
        self.pos += 1;
        match (head, args.len()) {
            ("not", 1) => Ok(PropFormula::Not(Box::new(args.remove(0)))),
            ("and", _) => Ok(PropFormula::And(args)),
            ("or", _) => Ok(PropFormula::Or(args)),
            ("implies", 2) => {
                let b = args.pop().expect("two args");
                let a = args.pop().expect("two args");
                Ok(PropFormula::Implies(Box::new(a), Box::new(b)))
            }
            _ => Err(self.err(format!("bad connective {head:?} with {} arguments", args.len()))),
        }
    }
}

/// Parses one formula per line.
pub fn parse_formulas(text: &str) -> Result<Vec<PropFormula>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut p = Parser { tokens: tokenize(line), pos: 0, line: i + 1 };
        let f = p.formula()?;
        if p.pos != p.tokens.len() {
            return Err(p.err("trailing input after formula"));
        }
        out.push(f);
    }
    Ok(out)
}

/// Writes one formula per line, parseable by [`parse_formulas`].
pub fn write_formulas(fs: &[PropFormula]) -> String {
    fs.iter().map(|f| format!("{f}\n")).collect()
}
