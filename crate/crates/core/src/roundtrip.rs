//! Round trips through every reduction: brute-force the image, decode, verify the source.
//!
//! Each `check_*` function builds the image of one source instance, lists
//! image solutions with a brute-force search, decodes every one of them and
//! checks the decoded object against the source with the plain definition.
//! Where the image is too large to list, a seeded sample of solutions is
//! drawn instead and the tally says so.

use std::collections::BTreeSet;
use std::fmt;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::gen;
use crate::graph::{
    decode_coloring_tree, graph_to_coloring_tree, is_k_homogeneous, is_proper_coloring, Graph, SearchBudget,
};
use crate::reductions::{
    chain_code_tree, decode_chain_code, decode_fixed_color, decode_kary, decode_localized, decode_packed,
    fixed_color_tree, kary_refine_step, kary_to_binary, localize_tree, pack_redundant, OrderFunction,
};
use crate::reductions::packed::is_packed;
use crate::sat::oracle::enumerate_sat_homogeneous;
use crate::sat::{
    decode_sat_hom, drop_extended_clauses, formulas_to_tree, sat_homogeneous, tree_to_clauses, Clause, PropFormula,
    SatBudget, SatHomSet,
};
use crate::tree::{
    enumerate_func_homogeneous, enumerate_homogeneous, tree_homogeneous_to_depth, ColorSet, FinTree, PartialHom, Word,
};
use crate::widgets::{compile, decode_homogeneous, find_normalized_coloring, DecodeBudget};

/// Search budget for the brute-force enumerations, as a base-2 logarithm.
const ENUM_BUDGET_LOG2: u32 = 20;
/// Counterexample messages kept per tally.
const MAX_EXAMPLES: usize = 5;

/// Counts from round trips of one reduction.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    /// Source instances processed.
    pub instances: u64,
    /// Instances whose image was rejected by a precondition (for example an unsatisfiable formula list).
    pub skipped: u64,
    /// Image solutions decoded.
    pub solutions: u64,
    /// Image solutions obtained by sampling rather than full enumeration.
    pub sampled: u64,
    pub failures: u64,
    pub examples: Vec<String>,
}

impl Tally {
    fn fail(&mut self, msg: impl Into<String>) {
        self.failures += 1;
        if self.examples.len() < MAX_EXAMPLES {
            self.examples.push(msg.into());
        }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.solutions += 1;
        if !ok {
            self.fail(msg());
        }
    }

    fn decoded<T>(&mut self, r: Result<T>, verify: impl FnOnce(&T) -> bool, what: impl Fn() -> String) {
        match r {
            Ok(v) => {
                let ok = verify(&v);
                self.check(ok, || format!("{}: decoded object fails the source check", what()));
            }
            Err(e) => {
                self.solutions += 1;
                self.fail(format!("{}: {e}", what()));
            }
        }
    }

    /// Adds the counts of `other`.
    pub fn merge(&mut self, other: Tally) {
        self.instances += other.instances;
        self.skipped += other.skipped;
        self.solutions += other.solutions;
        self.sampled += other.sampled;
        self.failures += other.failures;
        for e in other.examples {
            if self.examples.len() < MAX_EXAMPLES {
                self.examples.push(e);
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for Tally {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} instances ({} skipped), {} solutions ({} sampled), {} failures",
            self.instances, self.skipped, self.solutions, self.sampled, self.failures
        )
    }
}

fn all_color_sets(positions: &[usize], colors: u32) -> impl Iterator<Item = ColorSet> + '_ {
    (0u64..(1u64 << positions.len())).flat_map(move |m| {
        let set: Vec<usize> = (0..positions.len()).filter(|i| m & (1 << i) != 0).map(|i| positions[i]).collect();
        (0..colors).map(move |c| ColorSet::new(set.clone(), c))
    })
}

/// Localization along `x`.
pub fn check_localize(t: &FinTree, x: &[usize]) -> Result<Tally> {
    let mut tally = Tally { instances: 1, ..Tally::default() };
    let loc = localize_tree(t, x)?;
    let d = loc.tree.horizon();
    for h0 in enumerate_homogeneous(&loc.tree, d, d, ENUM_BUDGET_LOG2)? {
        tally.decoded(
            decode_localized(&loc, &h0),
            |h| tree_homogeneous_to_depth(t, h, t.horizon()) && h.positions.iter().all(|p| x.contains(p)),
            || format!("localize {x:?} of {} with {h0}", t.to_json()),
        );
    }
    Ok(tally)
}

/// Binary expansion of a tree over any alphabet, with every round of refinement.
pub fn check_kary(t: &FinTree) -> Result<Tally> {
    let mut tally = Tally { instances: 1, ..Tally::default() };
    let enc = kary_to_binary(t);
    let b = enc.bits;
    let mut stack: Vec<(FinTree, Vec<usize>, Vec<u32>)> = vec![(enc.tree.clone(), enc.initial_positions(), vec![])];
    while let Some((s, x, colors)) = stack.pop() {
        let level = colors.len();
        for h in all_color_sets(&x, 2) {
            if !tree_homogeneous_to_depth(&s, &h, s.horizon()) {
                continue;
            }
            let mut next_colors = colors.clone();
            next_colors.push(h.color);
            if level + 1 == b {
                tally.decoded(
                    decode_kary(&enc, &h, &next_colors),
                    |src| tree_homogeneous_to_depth(t, src, t.horizon()),
                    || format!("kary2bin of {} with {h} and colors {next_colors:?}", t.to_json()),
                );
            } else {
                let (next, nx) = kary_refine_step(&s, &h, level, b)?;
                stack.push((next, nx, next_colors));
            }
        }
    }
    Ok(tally)
}

/// A random partial function homogeneous and everywhere-packed for the packed tree.
fn sample_packed(r: &mut ChaCha8Rng, tree: &FinTree, g: &OrderFunction) -> Option<PartialHom> {
    let n = tree.horizon();
    let nodes: Vec<&Word> = tree.level(n).iter().collect();
    if nodes.is_empty() {
        return None;
    }
    let w = nodes[r.gen_range(0..nodes.len())];
    let mut dom: BTreeSet<usize> = (0..n).filter(|_| r.gen_bool(0.3)).collect();
    for m in 0..=n.min(g.len().saturating_sub(1)) {
        let need = g.get(m).expect("tabulated");
        let mut below = dom.range(..m).count();
        let mut p = m;
        while below < need && p > 0 {
            p -= 1;
            if dom.insert(p) {
                below += 1;
            }
        }
    }
    Some(PartialHom::restriction(w, dom))
}

/// Redundant packing for `g`; lists every packed solution when the packed horizon is at most `list_up_to`.
pub fn check_pack(t: &FinTree, g: &OrderFunction, list_up_to: usize, r: &mut ChaCha8Rng, samples: usize) -> Result<Tally> {
    let mut tally = Tally { instances: 1, ..Tally::default() };
    let p = pack_redundant(t, g)?;
    let n = p.tree.horizon();
    let d = t.horizon();
    let verify = |f: &Word| t.contains(f) && f.len() + 1 >= d;
    if n <= list_up_to {
        for h in enumerate_func_homogeneous(&p.tree, n, ENUM_BUDGET_LOG2)? {
            if is_packed(&h, g, n) {
                tally.decoded(decode_packed(&p, &h), verify, || format!("pack of {} with {h:?}", t.to_json()));
            }
        }
    } else {
        for _ in 0..samples {
            let Some(h) = sample_packed(r, &p.tree, g) else { break };
            tally.sampled += 1;
            tally.decoded(decode_packed(&p, &h), verify, || format!("pack of {} with {h:?}", t.to_json()));
        }
    }
    Ok(tally)
}

/// The fixed-color reduction; image solutions are the color-0 homogeneous sets.
pub fn check_fixcolor(s: &FinTree) -> Result<Tally> {
    let mut tally = Tally { instances: 1, ..Tally::default() };
    let t = fixed_color_tree(s)?;
    let d = t.horizon();
    for h in enumerate_homogeneous(&t, d, d, ENUM_BUDGET_LOG2)?.into_iter().filter(|h| h.color == 0) {
        tally.decoded(decode_fixed_color(&t, &h), |w| s.contains(w), || format!("fixcolor of {} with {h}", s.to_json()));
    }
    Ok(tally)
}

/// Chain coding; image solutions are all homogeneous partial functions.
pub fn check_chaincode(t: &FinTree) -> Result<Tally> {
    let mut tally = Tally { instances: 1, ..Tally::default() };
    let code = chain_code_tree(t)?;
    let d = code.tree.horizon();
    for h in enumerate_func_homogeneous(&code.tree, d, ENUM_BUDGET_LOG2)? {
        tally.decoded(decode_chain_code(&code, t, &h), |w| t.contains(w), || format!("chaincode of {} with {h:?}", t.to_json()));
    }
    Ok(tally)
}

/// Trees to clause sets; image solutions are homogeneous atom sets.
pub fn check_tree2cnf(t: &FinTree) -> Result<Tally> {
    let mut tally = Tally { instances: 1, ..Tally::default() };
    let fs: Vec<PropFormula> = tree_to_clauses(t)?.iter().map(Clause::to_formula).collect();
    let d = t.horizon();
    for h0 in enumerate_sat_homogeneous(&fs, fs.len(), d, SatBudget::default())? {
        let h = decode_sat_hom(&h0);
        let ok = tree_homogeneous_to_depth(t, &h, d);
        tally.check(ok, || format!("tree2cnf of {} with {h0}", t.to_json()));
    }
    Ok(tally)
}

/// Formula lists to trees; a homogeneous set of the tree must be homogeneous for the formulas it decides.
///
/// At horizon `D` the tree only sees formulas `φ_i` with `i < D`, and of
/// those only the ones whose atoms all lie below `D` are decided. The check
/// runs the satisfiability oracle on that leading run of formulas.
pub fn check_cnf2tree(fs: &[PropFormula], horizon: usize) -> Result<Tally> {
    let mut tally = Tally { instances: 1, ..Tally::default() };
    let t = match formulas_to_tree(fs, horizon, SatBudget::default()) {
        Ok(t) => t,
        Err(Error::Precondition(_)) => {
            tally.skipped = 1;
            return Ok(tally);
        }
        Err(e) => return Err(e),
    };
    let decided = fs.iter().take(horizon).take_while(|f| f.atoms().iter().all(|&a| a < horizon)).count();
    for h in enumerate_homogeneous(&t, horizon, horizon, ENUM_BUDGET_LOG2)? {
        let h0 = SatHomSet::new(h.positions.iter().copied(), h.color == 1);
        let ok = sat_homogeneous(fs, &h0, decided, SatBudget::default())?;
        tally.check(ok, || format!("cnf2tree at horizon {horizon} with {h}"));
    }
    Ok(tally)
}

/// Graphs to coloring trees with `k` colors over all vertices in increasing order.
pub fn check_graph2tree(g: &Graph, k: u32) -> Result<Tally> {
    let mut tally = Tally { instances: 1, ..Tally::default() };
    let order: Vec<usize> = g.vertices().collect();
    let t = graph_to_coloring_tree(g, k, &order)?;
    let n = order.len();
    for h0 in enumerate_homogeneous(&t, n, n, ENUM_BUDGET_LOG2)? {
        let expected: BTreeSet<usize> = h0.positions.iter().map(|&i| order[i]).collect();
        tally.decoded(
            decode_coloring_tree(g, &order, &t, &h0),
            |w| {
                w.vertices == expected
                    && is_proper_coloring(g, &w.coloring, k)
                    && w.vertices.iter().all(|v| w.coloring[v] == 0)
                    && is_k_homogeneous(g, &w.vertices, k, SearchBudget::default()).is_ok_and(|v| v.is_homogeneous())
            },
            || format!("graph2tree k={k} of {:?} with {h0}", g.edges()),
        );
    }
    Ok(tally)
}

/// Tree to clauses to graph and back.
///
/// Candidate vertex sets are subsets of the literal vertices: all of them
/// when there are at most `list_up_to` literal vertices, otherwise `samples`
/// random subsets plus the color classes of one proper coloring. Only
/// candidates that are 3-homogeneous count as image solutions.
pub fn check_sat2graph(t: &FinTree, list_up_to: usize, r: &mut ChaCha8Rng, samples: usize) -> Result<Tally> {
    let mut tally = Tally { instances: 1, ..Tally::default() };
    let d = t.horizon();
    let clauses = drop_extended_clauses(&tree_to_clauses(t)?);
    if clauses.iter().any(|c| c.literals.is_empty()) {
        tally.skipped = 1;
        return Ok(tally);
    }
    let cg = compile(&clauses, d)?;
    let lits: Vec<usize> = (0..2 * d).map(|i| 3 + i).collect();
    let mut candidates: Vec<BTreeSet<usize>> = Vec::new();
    if lits.len() <= list_up_to {
        for m in 0u64..(1 << lits.len()) {
            candidates.push((0..lits.len()).filter(|i| m & (1 << i) != 0).map(|i| lits[i]).collect());
        }
    } else {
        for _ in 0..samples {
            candidates.push(lits.iter().copied().filter(|_| r.gen_bool(0.25)).collect());
        }
        if let Some(nu) = find_normalized_coloring(&cg, SearchBudget::default())? {
            for c in 0..3u32 {
                let mut class: BTreeSet<usize> = lits.iter().copied().filter(|v| nu[v] == c).collect();
                class.insert(c as usize);
                candidates.push(class);
            }
        }
        tally.sampled += candidates.len() as u64;
    }
    for h in candidates {
        if !is_k_homogeneous(&cg.graph, &h, 3, SearchBudget::default())?.is_homogeneous() {
            if lits.len() > list_up_to {
                tally.sampled -= 1;
            }
            continue;
        }
        tally.decoded(
            decode_homogeneous(&cg, &h, DecodeBudget::default()).map(|h0| decode_sat_hom(&h0)),
            |src| tree_homogeneous_to_depth(t, src, d),
            || format!("sat2graph of {} with {h:?}", t.to_json()),
        );
    }
    Ok(tally)
}

/// The reductions covered by the suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Reduction {
    Localize,
    Kary2,
    Kary4,
    PackHalf,
    PackIdentity,
    FixColor,
    ChainCode,
    Tree2Cnf,
    Cnf2Tree,
    Graph2Tree,
    Sat2Graph,
}

impl Reduction {
    pub const ALL: [Reduction; 11] = [
        Reduction::Localize,
        Reduction::Kary2,
        Reduction::Kary4,
        Reduction::PackHalf,
        Reduction::PackIdentity,
        Reduction::FixColor,
        Reduction::ChainCode,
        Reduction::Tree2Cnf,
        Reduction::Cnf2Tree,
        Reduction::Graph2Tree,
        Reduction::Sat2Graph,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Reduction::Localize => "localize",
            Reduction::Kary2 => "kary2bin-k2",
            Reduction::Kary4 => "kary2bin-k4",
            Reduction::PackHalf => "pack-floor-half",
            Reduction::PackIdentity => "pack-identity",
            Reduction::FixColor => "fixcolor",
            Reduction::ChainCode => "chaincode",
            Reduction::Tree2Cnf => "tree2cnf",
            Reduction::Cnf2Tree => "cnf2tree",
            Reduction::Graph2Tree => "graph2tree",
            Reduction::Sat2Graph => "sat2graph",
        }
    }

    pub fn from_name(s: &str) -> Result<Reduction> {
        Reduction::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| invalid(format!("unknown reduction {s}")))
    }
}

/// Sizes of a round-trip suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    /// Every binary tree, pruned or not, up to this horizon (at most 3).
    pub exhaustive_depth: usize,
    /// Every pruned binary tree up to this horizon (at most 4), for the cheaper reductions.
    pub pruned_depth: usize,
    /// Seeded random instances per reduction.
    pub random_instances: usize,
    /// Largest horizon of a random instance.
    pub random_depth: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { exhaustive_depth: 3, pruned_depth: 4, random_instances: 100, random_depth: 8, seed: 0 }
    }
}

fn exhaustive_trees(cfg: &SuiteConfig, pruned_depth: usize) -> Result<Vec<FinTree>> {
    let mut out = Vec::new();
    for d in 0..=cfg.exhaustive_depth {
        out.extend(gen::all_trees(d)?);
    }
    for d in cfg.exhaustive_depth + 1..=pruned_depth {
        out.extend(gen::all_pruned_trees(d)?);
    }
    Ok(out)
}

fn random_binary_tree(r: &mut ChaCha8Rng, max_depth: usize) -> FinTree {
    let depth = r.gen_range(1..=max_depth.max(1));
    if r.gen_bool(0.5) {
        gen::random_pruned_tree(r, 2, depth, 6)
    } else {
        gen::random_tree(r, 2, depth, 0.6)
    }
}

fn evens(d: usize) -> Vec<usize> {
    (0..d).step_by(2).collect()
}

/// Runs one reduction over the exhaustive and random instances of `cfg`.
pub fn run_reduction(red: Reduction, cfg: &SuiteConfig) -> Result<Tally> {
    let mut r = gen::rng(cfg.seed ^ (red as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let mut tally = Tally::default();
    let depth = cfg.random_depth;
    match red {
        Reduction::Localize => {
            for t in exhaustive_trees(cfg, cfg.pruned_depth)? {
                let d = t.horizon();
                tally.merge(check_localize(&t, &evens(d))?);
                tally.merge(check_localize(&t, &(1..d).collect::<Vec<_>>())?);
            }
            for _ in 0..cfg.random_instances {
                let t = random_binary_tree(&mut r, depth);
                let x: Vec<usize> = (0..t.horizon()).filter(|_| r.gen_bool(0.6)).collect();
                tally.merge(check_localize(&t, &x)?);
            }
        }
        Reduction::Kary2 => {
            for t in exhaustive_trees(cfg, cfg.pruned_depth)? {
                tally.merge(check_kary(&t)?);
            }
            for _ in 0..cfg.random_instances {
                tally.merge(check_kary(&random_binary_tree(&mut r, depth))?);
            }
        }
        Reduction::Kary4 => {
            for _ in 0..cfg.random_instances {
                let d = r.gen_range(1..=depth.min(4));
                let t = if r.gen_bool(0.5) { gen::random_pruned_tree(&mut r, 4, d, 5) } else { gen::random_tree(&mut r, 4, d, 0.4) };
                tally.merge(check_kary(&t)?);
            }
        }
        Reduction::PackHalf | Reduction::PackIdentity => {
            let g = |d: usize| {
                if red == Reduction::PackHalf {
                    OrderFunction::floor_half((1 << (d + 1)) + 2)
                } else {
                    OrderFunction::identity(d + 2)
                }
            };
            let trees = exhaustive_trees(cfg, cfg.exhaustive_depth)?;
            for t in trees.iter().filter(|t| t.horizon() >= 1) {
                tally.merge(check_pack(t, &g(t.horizon()), 13, &mut r, 20)?);
            }
            for _ in 0..cfg.random_instances {
                let t = random_binary_tree(&mut r, depth);
                tally.merge(check_pack(&t, &g(t.horizon()), 13, &mut r, 20)?);
            }
        }
        Reduction::FixColor => {
            for t in exhaustive_trees(cfg, cfg.pruned_depth)? {
                tally.merge(check_fixcolor(&t)?);
            }
            for _ in 0..cfg.random_instances {
                tally.merge(check_fixcolor(&random_binary_tree(&mut r, depth))?);
            }
        }
        Reduction::ChainCode => {
            for t in exhaustive_trees(cfg, cfg.pruned_depth)? {
                tally.merge(check_chaincode(&t)?);
            }
            for _ in 0..cfg.random_instances {
                tally.merge(check_chaincode(&random_binary_tree(&mut r, depth))?);
            }
        }
        Reduction::Tree2Cnf => {
            for t in exhaustive_trees(cfg, cfg.pruned_depth)? {
                tally.merge(check_tree2cnf(&t)?);
            }
            for _ in 0..cfg.random_instances {
                tally.merge(check_tree2cnf(&random_binary_tree(&mut r, depth))?);
            }
        }
        Reduction::Cnf2Tree => {
            for t in exhaustive_trees(cfg, cfg.exhaustive_depth)? {
                let fs: Vec<PropFormula> = tree_to_clauses(&t)?.iter().map(Clause::to_formula).collect();
                tally.merge(check_cnf2tree(&fs, t.horizon())?);
            }
            for _ in 0..cfg.random_instances {
                let d = r.gen_range(1..=depth.max(1));
                let count = r.gen_range(1..=2 * d);
                let fs: Vec<PropFormula> = gen::random_clauses(&mut r, count, d).iter().map(Clause::to_formula).collect();
                tally.merge(check_cnf2tree(&fs, d)?);
            }
        }
        Reduction::Graph2Tree => {
            for n in 0..=4usize {
                let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
                for m in 0u64..(1 << pairs.len()) {
                    let edges = (0..pairs.len()).filter(|i| m & (1 << i) != 0).map(|i| pairs[i]);
                    let g = Graph::from_edges(0..n, edges)?;
                    for k in [2, 3] {
                        tally.merge(check_graph2tree(&g, k)?);
                    }
                }
            }
            for _ in 0..cfg.random_instances {
                let n = r.gen_range(1..=depth.clamp(1, 7));
                let g = gen::random_graph(&mut r, n, 0.35);
                let k = r.gen_range(2..=3);
                tally.merge(check_graph2tree(&g, k)?);
            }
        }
        Reduction::Sat2Graph => {
            for t in exhaustive_trees(cfg, cfg.exhaustive_depth)? {
                tally.merge(check_sat2graph(&t, 6, &mut r, 16)?);
            }
            for _ in 0..cfg.random_instances {
                let t = random_binary_tree(&mut r, depth.min(5));
                tally.merge(check_sat2graph(&t, 6, &mut r, 16)?);
            }
        }
    }
    Ok(tally)
}

/// Runs every reduction.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Vec<(Reduction, Tally)>> {
    Reduction::ALL.into_iter().map(|red| Ok((red, run_reduction(red, cfg)?))).collect()
}
