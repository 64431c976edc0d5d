//! Exhaustive verification of the gadget lemmas.
//!
//! Every clause is checked over all six assignments of the colors 0, 1, 2 to
//! the gadget's `(x,y,z)` and over every coloring of the listed interface
//! vertices. Universal clauses enumerate all proper colorings; existential
//! clauses ask the solver for one extension. A failing clause carries the
//! coloring that refutes it.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Result;
use crate::graph::{enumerate_colorings, find_coloring, Coloring, SearchBudget};
use crate::widgets::gadgets::{build_d, build_r, build_u, terminal_vertex, DGadget, Gadget};
use crate::widgets::table::{literal_entry, resolve, step_entries, Conclusion, Entry};

/// Outcome of one lemma clause.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseCheck {
    /// Lemma and clause, such as `U(ii)`.
    pub name: String,
    /// Gadget the clause was checked on.
    pub gadget: String,
    /// Number of colorings or pin patterns examined.
    pub cases: u64,
    /// A coloring refuting the clause, or the pins that could not be extended.
    pub counterexample: Option<Coloring>,
}

impl ClauseCheck {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Outcome of deleting one edge from a gadget and re-running its lemmas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MutationCheck {
    pub gadget: String,
    pub removed: (usize, usize),
    /// The first clause that failed on the mutated gadget.
    pub detected_by: Option<String>,
}

/// All clause checks and mutation checks.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LemmaReport {
    pub checks: Vec<ClauseCheck>,
    pub mutations: Vec<MutationCheck>,
}

impl LemmaReport {
    /// True iff every clause holds and every mutation is caught.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(ClauseCheck::passed) && self.mutations.iter().all(|m| m.detected_by.is_some())
    }

    /// Checks grouped by clause name: `(name, cases, failures)`.
    pub fn summary(&self) -> Vec<(String, u64, usize)> {
        let mut by: BTreeMap<String, (u64, usize)> = BTreeMap::new();
        for c in &self.checks {
            let e = by.entry(c.name.clone()).or_default();
            e.0 += c.cases;
            e.1 += usize::from(!c.passed());
        }
        by.into_iter().map(|(n, (cases, fails))| (n, cases, fails)).collect()
    }
}

impl fmt::Display for LemmaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, cases, fails) in self.summary() {
            let status = if fails == 0 { "pass" } else { "FAIL" };
            writeln!(f, "{status} {name}: {cases} cases, {fails} failing gadget runs")?;
        }
        for c in self.checks.iter().filter(|c| !c.passed()) {
            writeln!(f, "  counterexample for {} on {}: {:?}", c.name, c.gadget, c.counterexample)?;
        }
        for m in &self.mutations {
            match &m.detected_by {
                Some(by) => writeln!(f, "pass mutation {} minus {:?}: caught by {by}", m.gadget, m.removed)?,
                None => writeln!(f, "FAIL mutation {} minus {:?}: not caught", m.gadget, m.removed)?,
            }
        }
        Ok(())
    }
}

fn pins(g: &Gadget, named: &[(&str, u32)]) -> Coloring {
    named.iter().map(|&(n, c)| (g.id(n), c)).collect()
}

const PERMS: [[u32; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

struct Checker<'a> {
    gadget: &'a Gadget,
    label: String,
    budget: SearchBudget,
    out: Vec<ClauseCheck>,
}

impl<'a> Checker<'a> {
    fn new(gadget: &'a Gadget, label: impl Into<String>, budget: SearchBudget) -> Self {
        Checker { gadget, label: label.into(), budget, out: Vec::new() }
    }

    fn record(&mut self, name: &str, cases: u64, counterexample: Option<Coloring>) {
        self.out.push(ClauseCheck { name: name.to_string(), gadget: self.label.clone(), cases, counterexample });
    }

    fn pins(&self, named: &[(&str, u32)]) -> Coloring {
        pins(self.gadget, named)
    }

    fn all(&self, pins: &Coloring) -> Result<Vec<Coloring>> {
        enumerate_colorings(&self.gadget.graph, 3, pins, self.budget)
    }

    fn find(&self, pins: &Coloring) -> Result<Option<Coloring>> {
        find_coloring(&self.gadget.graph, 3, pins, self.budget)
    }

    /// Checks that `holds` is true on every coloring extending `pins`.
    fn forall(&mut self, name: &str, pins: &Coloring, holds: impl Fn(&dyn Fn(&str) -> u32) -> bool) -> Result<()> {
        let cols = self.all(pins)?;
        let bad = cols.iter().find(|nu| !holds(&|n: &str| nu[&self.gadget.id(n)])).cloned();
        self.record(name, cols.len() as u64, bad);
        Ok(())
    }

    /// Checks that every pin pattern in `patterns` extends.
    fn exists_each(&mut self, name: &str, patterns: &[Coloring]) -> Result<()> {
        let mut bad = None;
        for p in patterns {
            if self.find(p)?.is_none() {
                bad = Some(p.clone());
                break;
            }
        }
        self.record(name, patterns.len() as u64, bad);
        Ok(())
    }

    /// Checks that on colorings extending `pins`, the color of `w` determines the color of `target`.
    fn determines(&mut self, name: &str, pins: &Coloring, w: &str, target: &str) -> Result<()> {
        let cols = self.all(pins)?;
        let (wi, ti) = (self.gadget.id(w), self.gadget.id(target));
        let mut seen: BTreeMap<u32, (u32, &Coloring)> = BTreeMap::new();
        let mut bad = None;
        for nu in &cols {
            match seen.get(&nu[&wi]) {
                Some(&(t, _)) if t != nu[&ti] => {
                    bad = Some(nu.clone());
                    break;
                }
                Some(_) => {}
                None => {
                    seen.insert(nu[&wi], (nu[&ti], nu));
                }
            }
        }
        self.record(name, cols.len() as u64, bad);
        Ok(())
    }
}

/// The clauses about `R_{x↦y,y↦z}(a,u)`; the gadget must name `x, y, z, a, u, v`.
pub fn check_r(g: &Gadget, label: &str, budget: SearchBudget) -> Result<Vec<ClauseCheck>> {
    let mut ck = Checker::new(g, label, budget);
    for [x, y, z] in PERMS {
        let base = ck.pins(&[("x", x), ("y", y), ("z", z)]);
        ck.forall("R(i)", &base, |c| (c("a") != x || c("u") == y) && (c("a") != y || c("u") == z))?;
        let patterns: Vec<Coloring> = [x, y].iter().map(|&a| ck.pins(&[("x", x), ("y", y), ("z", z), ("a", a)])).collect();
        ck.exists_each("R(ii)", &patterns)?;
        ck.determines("R(iii) u", &base, "u", "a")?;
        ck.determines("R(iii) v", &base, "v", "a")?;
    }
    Ok(ck.out)
}

/// The clauses about `U_{x,y,z}(ℓ,b,u)` and its decoding; the gadget must name `x, y, z, l, b, u, lbar, r, v, d`.
pub fn check_u(g: &Gadget, label: &str, budget: SearchBudget) -> Result<Vec<ClauseCheck>> {
    let mut ck = Checker::new(g, label, budget);
    for [x, y, z] in PERMS {
        let base = ck.pins(&[("x", x), ("y", y), ("z", z)]);
        let gd = ck.gadget;
        let interface = |l: u32, b: u32| pins(gd, &[("x", x), ("y", y), ("z", z), ("l", l), ("b", b)]);
        let all_interface: Vec<Coloring> = [x, y].iter().flat_map(|&l| (0..3).map(move |b| (l, b))).map(|(l, b)| interface(l, b)).collect();
        ck.exists_each("U(i)", &all_interface)?;
        ck.forall("U(ii)", &interface(x, y), |c| c("u") == x)?;
        let with_u = |l: u32, b: u32, u: u32| pins(gd, &[("x", x), ("y", y), ("z", z), ("l", l), ("b", b), ("u", u)]);
        let iii: Vec<Coloring> = [x, z].iter().map(|&b| with_u(x, b, z)).collect();
        ck.exists_each("U(iii)", &iii)?;
        let iv: Vec<Coloring> = (0..3).map(|b| with_u(y, b, y)).collect();
        ck.exists_each("U(iv)", &iv)?;
        for w in ["lbar", "u", "r", "v"] {
            ck.determines(&format!("U-decode {w}"), &base, w, "l")?;
        }
        ck.forall("U-decode d", &base, |c| {
            (c("d") != x || c("l") == y) && (c("d") != y || c("l") == x) && (c("d") != z || c("b") != z)
        })?;
    }
    Ok(ck.out)
}

/// The entry of every non-truth vertex of a clause widget.
pub fn d_table(d: &DGadget) -> BTreeMap<usize, Entry> {
    let mut table: BTreeMap<usize, Entry> = d.literals.iter().map(|&l| (l, literal_entry(l))).collect();
    for s in &d.steps {
        for (v, _, e) in step_entries(s) {
            table.insert(v, e);
        }
    }
    table
}

/// The clauses about `D(ℓ₀,…,ℓ_{n-1})` and its decode table.
pub fn check_d(d: &DGadget, label: &str, budget: SearchBudget) -> Result<Vec<ClauseCheck>> {
    let g = &d.gadget;
    let mut ck = Checker::new(g, label, budget);
    let n = d.literals.len();
    for perm in PERMS {
        let mut with_one = Vec::new();
        let mut all_zero = None;
        for mask in 0u32..(1 << n) {
            let mut p: Coloring = (0..3).map(|t| (t, perm[t])).collect();
            for (i, &l) in d.literals.iter().enumerate() {
                p.insert(l, perm[((mask >> i) & 1) as usize]);
            }
            if mask == 0 {
                all_zero = Some(p);
            } else {
                with_one.push(p);
            }
        }
        ck.exists_each("D(i)", &with_one)?;
        let zero = all_zero.expect("mask 0 is enumerated");
        let refutation = ck.find(&zero)?;
        ck.record("D(ii)", 1, refutation);
    }
    let table = d_table(d);
    let truth: Coloring = (0..3).map(|t| (t, t as u32)).collect();
    let covered = g.graph.vertices().filter(|v| *v >= 3).all(|v| table.contains_key(&v));
    ck.record("D-decode coverage", table.len() as u64, if covered { None } else { Some(truth.clone()) });
    let mut cases = 0;
    let mut bad = None;
    let mut resolved_cases = 0;
    let mut resolved_bad = None;
    let depth_of: BTreeMap<usize, usize> = d.literals.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let mut owner: BTreeMap<usize, usize> = BTreeMap::new();
    for s in &d.steps {
        for (v, _) in s.aux_vertices() {
            owner.insert(v, s.depth);
        }
    }
    for (&w, entry) in &table {
        for c in 0..3u32 {
            cases += 1;
            let mut pins = truth.clone();
            pins.insert(w, c);
            let violations: Vec<(usize, u32)> = match entry[c as usize] {
                Conclusion::Impossible => vec![(w, c)],
                Conclusion::Literal { vertex, color } => (0..3).filter(|&o| o != color).map(|o| (vertex, o)).collect(),
                Conclusion::NotColor { vertex, color } => vec![(vertex, color)],
            };
            for (v, o) in violations {
                let mut p = pins.clone();
                if p.get(&v).is_some_and(|&pc| pc != o) {
                    continue;
                }
                p.insert(v, o);
                if let Some(nu) = ck.find(&p)? {
                    bad.get_or_insert(nu);
                }
            }
            if entry[c as usize] == Conclusion::Impossible {
                continue;
            }
            resolved_cases += 1;
            match resolve(entry[c as usize], |v| table.get(&v).copied()) {
                None => {
                    resolved_bad.get_or_insert(pins);
                }
                Some((lv, color)) => {
                    let i = owner.get(&w).copied().unwrap_or_else(|| depth_of[&w]);
                    let j = depth_of[&lv];
                    let near = j == i || j + 1 == i;
                    for o in (0..3).filter(|&o| o != color) {
                        let mut p = pins.clone();
                        if p.get(&lv).is_some_and(|&pc| pc != o) {
                            continue;
                        }
                        p.insert(lv, o);
                        if let Some(nu) = ck.find(&p)? {
                            resolved_bad.get_or_insert(nu);
                        }
                    }
                    if !near {
                        resolved_bad.get_or_insert(pins);
                    }
                }
            }
        }
    }
    ck.record("D-decode table", cases, bad);
    ck.record("D-decode resolved", resolved_cases, resolved_bad);
    Ok(ck.out)
}

/// Runs every lemma clause on the standard gadgets, clause widgets up to `max_literals`, and the mutations.
pub fn check_widget_lemmas(max_literals: usize, budget: SearchBudget) -> Result<LemmaReport> {
    let r = build_r(0, 1, 2, 3, 4, 5)?;
    let u = build_u(0, 1, 2, 3, 4, 9, 5)?;
    let mut report = LemmaReport::default();
    report.checks.extend(check_r(&r, "R", budget)?);
    report.checks.extend(check_u(&u, "U", budget)?);
    for n in 1..=max_literals {
        let d = build_d(n)?;
        report.checks.extend(check_d(&d, &format!("D{n}"), budget)?);
    }
    report.mutations = mutation_checks(budget)?;
    Ok(report)
}

/// Deletes one edge from each gadget and reports which clause catches it.
pub fn mutation_checks(budget: SearchBudget) -> Result<Vec<MutationCheck>> {
    let first_failure = |checks: Vec<ClauseCheck>| checks.into_iter().find(|c| !c.passed()).map(|c| c.name);
    let mut out = Vec::new();
    let mut r = build_r(0, 1, 2, 3, 4, 5)?;
    let removed = (r.id("y"), r.id("v"));
    r.graph.remove_edge(removed.0, removed.1);
    out.push(MutationCheck { gadget: "R".into(), removed, detected_by: first_failure(check_r(&r, "R minus (y,v)", budget)?) });
    let mut u = build_u(0, 1, 2, 3, 4, 9, 5)?;
    let removed = (u.id("b"), u.id("d"));
    u.graph.remove_edge(removed.0, removed.1);
    out.push(MutationCheck { gadget: "U".into(), removed, detected_by: first_failure(check_u(&u, "U minus (b,d)", budget)?) });
    let mut d = build_d(3)?;
    let last = d.steps.last().expect("three literals have two steps").inner.u;
    let removed = (last, terminal_vertex(3) as usize);
    d.gadget.graph.remove_edge(removed.0, removed.1);
    out.push(MutationCheck { gadget: "D3".into(), removed, detected_by: first_failure(check_d(&d, "D3 minus terminal", budget)?) });
    Ok(out)
}
