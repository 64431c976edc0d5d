//! From a 2-branching clause list to a graph whose 3-colorings code assignments.
//!
//! Clauses are added one at a time. A clause reuses the spine steps of the
//! longest common prefix it shares with earlier clauses and gets fresh
//! vertices for the rest, so the steps form a trie keyed by literal prefixes.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{invalid, precondition, Error, Result};
use crate::graph::{find_coloring, is_k_homogeneous, is_proper_coloring, Coloring, Graph, SearchBudget, Verdict};
use crate::graph::io::write_dot;
use crate::sat::{sat_homogeneous, Assignment, Clause, Literal, PropFormula, SatBudget, SatHomSet};
use crate::widgets::gadgets::{add_step, edge, terminal_vertex, triangle, SpineStep, VertexRole};
use crate::widgets::table::{literal_entry, resolve, step_entries, Conclusion, Entry};

/// The vertex coding literal `a_atom` or `¬a_atom`.
pub fn literal_vertex(l: Literal) -> usize {
    3 + 2 * l.atom + usize::from(!l.positive)
}

/// A clause as it was placed in the graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlacedClause {
    pub clause: Clause,
    /// Indices into [`CompiledGraph::steps`] for positions `1..n`.
    pub steps: Vec<usize>,
    /// `u_{n-1}`, joined to the terminal truth vertex.
    pub last: usize,
}

/// The compiled graph with its decode table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompiledGraph {
    pub graph: Graph,
    /// Number of literal pairs `a_i, ¬a_i` in the base layout.
    pub atoms: usize,
    pub roles: BTreeMap<usize, VertexRole>,
    /// Conclusions for every vertex other than the truth vertices.
    pub table: BTreeMap<usize, Entry>,
    /// Spine steps in creation order.
    pub steps: Vec<SpineStep>,
    pub clauses: Vec<PlacedClause>,
}

/// Builds the graph for `clauses` with literal pairs for atoms `0..max(atoms, longest clause)`.
///
/// The input must be 2-branching and no clause may be a proper prefix of
/// another; use [`crate::sat::drop_extended_clauses`] first if needed.
pub fn compile(clauses: &[Clause], atoms: usize) -> Result<CompiledGraph> {
    for (k, c) in clauses.iter().enumerate() {
        if c.literals.is_empty() {
            return Err(precondition(format!("clause {k} is empty and has no widget")));
        }
        if !c.is_two_branching() {
            return Err(invalid(format!("clause {k} ({c}) is not 2-branching")));
        }
        if let Some(p) = clauses.iter().find(|p| p.is_proper_prefix_of(c)) {
            return Err(invalid(format!("clause {p} is a proper prefix of clause {k} ({c})")));
        }
    }
    let atoms = clauses.iter().map(|c| c.literals.len()).max().unwrap_or(0).max(atoms);
    let mut graph = Graph::new();
    let mut roles = BTreeMap::new();
    let mut table = BTreeMap::new();
    triangle(&mut graph, 0, 1, 2);
    for c in 0..3 {
        roles.insert(c, VertexRole::Truth(c as u32));
    }
    for atom in 0..atoms {
        let (p, n) = (literal_vertex(Literal::pos(atom)), literal_vertex(Literal::neg(atom)));
        triangle(&mut graph, 2, p, n);
        for (v, positive) in [(p, true), (n, false)] {
            roles.insert(v, VertexRole::Literal { atom, positive });
            table.insert(v, literal_entry(v));
        }
    }
    let mut next = 3 + 2 * atoms;
    let mut steps: Vec<SpineStep> = Vec::new();
    let mut trie: BTreeMap<Vec<Literal>, usize> = BTreeMap::new();
    let mut placed = Vec::new();
    for clause in clauses {
        let lits = &clause.literals;
        let mut b = literal_vertex(lits[0]);
        let mut used = Vec::new();
        for i in 1..lits.len() {
            let key = lits[..=i].to_vec();
            let idx = match trie.get(&key) {
                Some(&idx) => idx,
                None => {
                    let step = add_step(&mut graph, &mut next, i, literal_vertex(lits[i]), b);
                    let idx = steps.len();
                    for (v, tag, entry) in step_entries(&step) {
                        roles.insert(v, VertexRole::Aux { step: idx, depth: i, tag });
                        table.insert(v, entry);
                    }
                    steps.push(step);
                    trie.insert(key, idx);
                    idx
                }
            };
            b = steps[idx].inner.u;
            used.push(idx);
        }
        edge(&mut graph, b, terminal_vertex(lits.len()) as usize);
        placed.push(PlacedClause { clause: clause.clone(), steps: used, last: b });
    }
    let cg = CompiledGraph { graph, atoms, roles, table, steps, clauses: placed };
    cg.check_step_bound()?;
    Ok(cg)
}

impl CompiledGraph {
    /// Checks that position `j` carries at most `2^{j+1}` spine steps.
    ///
    /// A 2-branching clause has `a_i` or `¬a_i` at position `i`, so there
    /// are at most `2^{j+1}` distinct prefixes of length `j+1`.
    pub fn check_step_bound(&self) -> Result<()> {
        let mut per_depth: BTreeMap<usize, u64> = BTreeMap::new();
        for s in &self.steps {
            *per_depth.entry(s.depth).or_default() += 1;
        }
        for (&j, &count) in &per_depth {
            let bound = 1u64.checked_shl(j as u32 + 1).unwrap_or(u64::MAX);
            if count > bound {
                return Err(Error::Budget { what: "spine steps at one clause position", needed: count, limit: bound });
            }
        }
        Ok(())
    }

    /// The clauses as formulas, in placement order.
    pub fn formulas(&self) -> Vec<PropFormula> {
        self.clauses.iter().map(|p| p.clause.to_formula()).collect()
    }

    /// Labels by role for DOT export.
    pub fn labels(&self) -> BTreeMap<usize, String> {
        self.roles.iter().map(|(&v, r)| (v, r.to_string())).collect()
    }

    /// DOT rendering with role annotations.
    pub fn to_dot(&self) -> String {
        write_dot(&self.graph, Some(&self.labels()))
    }

    /// The decode table as a JSON document keyed by vertex id.
    pub fn decode_table_json(&self) -> String {
        #[derive(Serialize)]
        struct Row<'a> {
            role: &'a VertexRole,
            by_color: &'a Entry,
        }
        let rows: BTreeMap<String, Row<'_>> =
            self.table.iter().map(|(v, e)| (v.to_string(), Row { role: &self.roles[v], by_color: e })).collect();
        serde_json::to_string_pretty(&rows).expect("decode table serializes")
    }

    /// The coloring built from `t` step by step along the spines.
    ///
    /// Literal vertices take the truth value of their literal, with
    /// undefined atoms treated as true. Each spine step is then colored from
    /// the colors of `ℓ_i` and `u_{i-1}` alone, so shared steps agree across
    /// clauses. The result is proper exactly when every clause has a true
    /// literal under this reading of `t`.
    pub fn canonical_coloring(&self, t: &Assignment) -> Result<Coloring> {
        let mut nu: Coloring = (0..3).map(|c| (c, c as u32)).collect();
        for atom in 0..self.atoms {
            let value = t.get(&atom).copied().unwrap_or(true);
            nu.insert(literal_vertex(Literal::pos(atom)), u32::from(value));
            nu.insert(literal_vertex(Literal::neg(atom)), u32::from(!value));
        }
        for s in &self.steps {
            color_step(s, &mut nu);
        }
        if !is_proper_coloring(&self.graph, &nu, 3) {
            let bad = self.clauses.iter().position(|p| nu[&p.last] == terminal_vertex(p.clause.literals.len()));
            return Err(precondition(match bad {
                Some(k) => format!("the assignment falsifies clause {k}"),
                None => "the assignment does not give a proper coloring".to_string(),
            }));
        }
        Ok(nu)
    }
}

fn color_step(s: &SpineStep, nu: &mut Coloring) {
    use crate::widgets::gadgets::{r_triple, u_triple};
    let [x, y, z] = u_triple(s.depth);
    let true_lit = nu[&s.literal] == 1;
    if let (Some((lp, v)), Some([rx, ry, rz])) = (s.outer, r_triple(s.depth)) {
        let (lc, vc) = if nu[&s.literal] == rx { (ry, rz) } else { (rz, rx) };
        nu.insert(lp, lc);
        nu.insert(v, vc);
    }
    let b = nu[&s.b];
    let w = s.inner;
    let (lbar, r, d, u) = match (true_lit, b) {
        (false, b) if b == y => (y, y, z, x),
        (false, _) => (y, y, y, z),
        (true, b) if b == x => (x, z, z, y),
        (true, _) => (x, z, x, y),
    };
    let v = if true_lit { x } else { z };
    nu.extend([(w.lbar, lbar), (w.r, r), (w.v, v), (w.d, d), (w.u, u)]);
}

/// The raw conclusion for vertex `w` having color `color`.
pub fn decode_vertex(g: &CompiledGraph, w: usize, color: u32) -> Result<Conclusion> {
    if color > 2 {
        return Err(invalid(format!("color {color} out of range")));
    }
    let entry = g.table.get(&w).ok_or_else(|| invalid(format!("vertex {w} has no decode entry")))?;
    Ok(entry[color as usize])
}

/// Budgets for [`decode_homogeneous`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DecodeBudget {
    pub coloring: SearchBudget,
    pub sat: SatBudget,
}

/// Turns a homogeneous vertex set of the compiled graph into a homogeneous atom set for the clauses.
///
/// The set is first checked with the coloring solver and extended by a
/// truth vertex `c` if it has none. Every other vertex then yields a pair
/// (literal vertex, color) by the decode table; negative literals are
/// flipped onto their atom, and the truth value carried by more atoms wins,
/// with ties going to true. The result is checked with the satisfiability
/// oracle.
pub fn decode_homogeneous(g: &CompiledGraph, h: &BTreeSet<usize>, budget: DecodeBudget) -> Result<SatHomSet> {
    if let Some(v) = h.iter().find(|v| !g.graph.has_vertex(**v)) {
        return Err(invalid(format!("vertex {v} is not in the graph")));
    }
    if h.is_empty() {
        return Ok(SatHomSet::new([], true));
    }
    let truth: Vec<usize> = h.iter().copied().filter(|&v| v < 3).collect();
    let c = match truth.as_slice() {
        [c] => {
            require_homogeneous(g, h, budget.coloring)?;
            *c
        }
        [] => {
            let mut found = None;
            for c in 0..3 {
                let mut hc = h.clone();
                hc.insert(c);
                if homogeneous(g, &hc, budget.coloring)? {
                    found = Some(c);
                    break;
                }
            }
            found.ok_or_else(|| Error::NotHomogeneous(format!("{} vertices for the compiled graph", h.len())))?
        }
        _ => return Err(Error::NotHomogeneous("two truth vertices are adjacent".to_string())),
    };
    let mut by_value: [BTreeSet<usize>; 2] = [BTreeSet::new(), BTreeSet::new()];
    for &w in h.iter().filter(|&&w| w != c) {
        let concl = decode_vertex(g, w, c as u32)?;
        let (lv, color) = resolve(concl, |v| g.table.get(&v).copied())
            .ok_or_else(|| precondition(format!("vertex {w} with color {c} decodes to {concl:?}")))?;
        let VertexRole::Literal { atom, positive } = g.roles[&lv] else {
            unreachable!("conclusions name literal vertices")
        };
        let value = (color == 1) == positive;
        by_value[usize::from(value)].insert(atom);
    }
    let value = by_value[1].len() >= by_value[0].len();
    let out = SatHomSet { atoms: by_value[usize::from(value)].clone(), value };
    let fs = g.formulas();
    if !sat_homogeneous(&fs, &out, fs.len(), budget.sat)? {
        return Err(Error::NotHomogeneous(format!("decoded set {out} for the clauses")));
    }
    Ok(out)
}

fn homogeneous(g: &CompiledGraph, h: &BTreeSet<usize>, budget: SearchBudget) -> Result<bool> {
    match is_k_homogeneous(&g.graph, h, 3, budget)? {
        Verdict::Homogeneous => Ok(true),
        Verdict::NotHomogeneous => Ok(false),
        Verdict::Unknown { budget } => {
            Err(Error::Budget { what: "homogeneity check of the compiled graph", needed: budget + 1, limit: budget })
        }
    }
}

fn require_homogeneous(g: &CompiledGraph, h: &BTreeSet<usize>, budget: SearchBudget) -> Result<()> {
    if homogeneous(g, h, budget)? {
        Ok(())
    } else {
        Err(Error::NotHomogeneous(format!("{} vertices for the compiled graph", h.len())))
    }
}

/// Some proper 3-coloring of the compiled graph fixing the truth vertices, if there is one.
pub fn find_normalized_coloring(g: &CompiledGraph, budget: SearchBudget) -> Result<Option<Coloring>> {
    let pins: Coloring = (0..3).map(|c| (c, c as u32)).collect();
    find_coloring(&g.graph, 3, &pins, budget)
}
