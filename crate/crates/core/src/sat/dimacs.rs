//! DIMACS CNF reading and writing.
//!
//! Atom `a_i` is variable `i + 1`. The writer adds a comment line recording
//! whether the clause set is 2-branching; the reader reports it back when present.

use crate::error::{Error, Result};
use crate::sat::{is_two_branching, Clause, Literal};

/// A parsed DIMACS document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimacsDoc {
    pub num_vars: usize,
    pub clauses: Vec<Clause>,
    /// Value of the `c two-branching:` comment, if the file has one.
    pub two_branching: Option<bool>,
}

/// Renders clauses as DIMACS CNF text.
pub fn write_dimacs(clauses: &[Clause]) -> String {
    let num_vars = clauses.iter().flat_map(|c| c.literals.iter().map(|l| l.atom + 1)).max().unwrap_or(0);
    let mut out = String::new();
    out.push_str(&format!("c two-branching: {}\n", if is_two_branching(clauses) { "yes" } else { "no" }));
    out.push_str(&format!("p cnf {num_vars} {}\n", clauses.len()));
    for c in clauses {
        for l in &c.literals {
            let v = (l.atom + 1) as i64;
            out.push_str(&format!("{} ", if l.positive { v } else { -v }));
        }
        out.push_str("0\n");
    }
    out
}

/// Parses DIMACS CNF text; clauses may span lines.
pub fn parse_dimacs(text: &str) -> Result<DimacsDoc> {
    let mut header: Option<(usize, usize)> = None;
    let mut two_branching = None;
    let mut clauses = Vec::new();
    let mut current = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let err = |msg: String| Error::Parse { line: i + 1, msg };
        if line.is_empty() || line.starts_with('%') {
            continue;
        }
        if let Some(c) = line.strip_prefix('c') {
            match c.trim() {
                "two-branching: yes" => two_branching = Some(true),
                "two-branching: no" => two_branching = Some(false),
                _ => {}
            }
            continue;
        }
        if line.starts_with('p') {
            let parts: Vec<&str> = line.split_whitespace().collect();
            if header.is_some() || parts.len() != 4 || parts[1] != "cnf" {
                return Err(err(format!("bad problem line {line:?}")));
            }
            let v = parts[2].parse().map_err(|_| err("bad variable count".into()))?;
            let c = parts[3].parse().map_err(|_| err("bad clause count".into()))?;
            header = Some((v, c));
            continue;
        }
        let (num_vars, _) = header.ok_or_else(|| err("clause before problem line".into()))?;
        for tok in line.split_whitespace() {
            let x: i64 = tok.parse().map_err(|_| err(format!("bad literal {tok:?}")))?;
            if x == 0 {
                clauses.push(Clause::new(std::mem::take(&mut current)));
                continue;
            }
            let atom = x.unsigned_abs() as usize;
            if atom > num_vars {
                return Err(err(format!("variable {atom} exceeds declared count {num_vars}")));
            }
            current.push(Literal { atom: atom - 1, positive: x > 0 });
        }
    }
    let (num_vars, count) = header.ok_or(Error::Parse { line: 0, msg: "missing problem line".into() })?;
    if !current.is_empty() {
        return Err(Error::Parse { line: text.lines().count(), msg: "unterminated clause".into() });
    }
    if clauses.len() != count {
        return Err(Error::Parse {
            line: text.lines().count(),
            msg: format!("declared {count} clauses, found {}", clauses.len()),
        });
    }
    Ok(DimacsDoc { num_vars, clauses, two_branching })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_with_metadata() {
        let cs = vec![
            Clause::new([Literal::neg(0)]),
            Clause::new([Literal::neg(0), Literal::pos(1)]),
            Clause::new([]),
        ];
        let text = write_dimacs(&cs);
        assert!(text.starts_with("c two-branching: yes\np cnf 2 3\n-1 0\n-1 2 0\n0\n"));
        let doc = parse_dimacs(&text).unwrap();
        assert_eq!(doc.clauses, cs);
        assert_eq!(doc.two_branching, Some(true));
    }

    #[test]
    fn multi_line_clauses_and_errors() {
        let doc = parse_dimacs("p cnf 3 1\n1 -2\n3 0\n").unwrap();
        assert_eq!(doc.clauses[0].literals.len(), 3);
        assert_eq!(doc.two_branching, None);
        assert!(parse_dimacs("1 0\n").is_err());
        assert!(parse_dimacs("p cnf 1 1\n2 0\n").is_err());
        assert!(parse_dimacs("p cnf 1 2\n1 0\n").is_err());
        assert!(parse_dimacs("p cnf 1 1\n1\n").is_err());
    }
}
