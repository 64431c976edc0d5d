//! A bipartite graph built against oracle enumerations, with exact measures.
//!
//! An adversary `W_e^X` is given by a table from binary prefixes to the
//! vertices enumerated along that prefix. At stage `s` the oracles are the
//! strings of length `min(s, L)` for the table's resolution `L`, and every
//! measure is a count of such strings over `2^{min(s, L)}`, kept as an exact
//! dyadic rational. Each requirement first locks vertices that most oracles
//! enumerate (type I), then merges them with a second such family so that
//! more than 2/5 of the oracles enumerate an inhomogeneous set (type II).

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::dyadic::Dyadic;
use crate::error::{invalid, precondition, Error, Result};
use crate::graph::parity::two_coloring;
use crate::graph::{odd_cycle_exists, Graph};
use crate::tree::Word;

/// Counting limit for [`exact_measure`].
pub const MAX_MEASURE_LENGTH: usize = 24;

/// `|{σ ∈ 2^s : pred(σ)}| / 2^s`.
pub fn exact_measure(s: usize, mut pred: impl FnMut(&[u32]) -> bool) -> Result<Dyadic> {
    if s > MAX_MEASURE_LENGTH {
        return Err(Error::Budget { what: "measure by counting strings", needed: s as u64, limit: MAX_MEASURE_LENGTH as u64 });
    }
    let mut count: u128 = 0;
    let mut sigma = vec![0u32; s];
    for v in 0u64..(1u64 << s) {
        for (i, b) in sigma.iter_mut().enumerate() {
            *b = ((v >> (s - 1 - i)) & 1) as u32;
        }
        if pred(&sigma) {
            count += 1;
        }
    }
    Ok(Dyadic::from_count(count, s as u32))
}

/// The enumeration behavior of one oracle adversary `W_e^X`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleAdversary {
    pub e: usize,
    /// Resolution `L`: the longest prefix the table mentions.
    pub prefix_len: usize,
    /// `W_e^σ` for listed prefixes `σ`; an unlisted prefix inherits from its longest listed prefix.
    pub table: BTreeMap<Word, BTreeSet<usize>>,
}

impl OracleAdversary {
    /// Checks binary prefixes within the resolution and monotonicity along prefix extension.
    pub fn validate(&self) -> Result<()> {
        if self.prefix_len > MAX_MEASURE_LENGTH {
            return Err(invalid(format!("adversary {}: resolution {} is too large", self.e, self.prefix_len)));
        }
        for (sigma, set) in &self.table {
            if sigma.len() > self.prefix_len || sigma.iter().any(|&b| b > 1) {
                return Err(invalid(format!("adversary {}: bad prefix {sigma:?}", self.e)));
            }
            for n in 0..sigma.len() {
                if let Some(lower) = self.table.get(&sigma[..n]) {
                    if !lower.is_subset(set) {
                        return Err(invalid(format!(
                            "adversary {}: table is not monotone between {:?} and {sigma:?}",
                            self.e,
                            &sigma[..n]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// `W_e^σ`: the set listed at the longest listed prefix of `σ`.
    pub fn enumerated(&self, sigma: &[u32]) -> &BTreeSet<usize> {
        static EMPTY: BTreeSet<usize> = BTreeSet::new();
        (0..=sigma.len().min(self.prefix_len)).rev().find_map(|n| self.table.get(&sigma[..n])).unwrap_or(&EMPTY)
    }

    /// Every vertex the table mentions.
    pub fn vertices(&self) -> BTreeSet<usize> {
        self.table.values().flatten().copied().collect()
    }
}

/// One threshold comparison made by the construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison {
    pub stage: usize,
    pub e: usize,
    pub test: String,
    pub measure: Dyadic,
    /// Threshold `num/den`.
    pub num: u64,
    pub den: u64,
    /// Whether `measure > num/den` was found.
    pub outcome: bool,
}

impl Comparison {
    /// Re-evaluates the comparison from its recorded numbers.
    pub fn replays(&self) -> bool {
        self.measure.gt_ratio(self.num, self.den) == self.outcome
    }
}

/// What a type II action did.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeTwo {
    pub stage: usize,
    pub xs: Vec<usize>,
    pub ys: Vec<usize>,
    /// Fresh vertices `a, b, c, d`.
    pub fresh: [usize; 4],
    /// Measure of oracles enumerating some `x_i` and some `y_j`.
    pub joint: Dyadic,
    /// Inhomogeneous measure with the edge `(a,c)` and with `(a,d)`.
    pub with_ac: Dyadic,
    pub with_ad: Dyadic,
    /// True when `(a,c)` was added.
    pub chose_ac: bool,
}

/// Final state of one requirement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RequirementReport {
    pub e: usize,
    /// Stages at which type I locks were placed.
    pub type_one_stages: Vec<usize>,
    pub locked: BTreeSet<usize>,
    pub type_two: Option<TypeTwo>,
    /// Measure of oracles whose final enumeration is inhomogeneous for the final graph.
    pub defeated: Dyadic,
}

/// Result of [`measure_build`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeasureRun {
    pub graph: Graph,
    pub log: Vec<Comparison>,
    pub requirements: Vec<RequirementReport>,
    pub bipartite_after: Vec<bool>,
}

impl MeasureRun {
    /// True iff every logged comparison re-evaluates to its recorded outcome.
    pub fn replays(&self) -> bool {
        self.log.iter().all(Comparison::replays)
    }
}

struct View {
    comp: BTreeMap<usize, usize>,
    side: BTreeMap<usize, u32>,
}

impl View {
    fn of(g: &Graph) -> Option<View> {
        let side = two_coloring(g)?;
        let mut comp = BTreeMap::new();
        for (i, c) in g.components().into_iter().enumerate() {
            for v in c {
                comp.insert(v, i);
            }
        }
        Some(View { comp, side })
    }

    fn touches(&self, v: usize, set: &BTreeSet<usize>) -> bool {
        set.contains(&v) || self.comp.get(&v).is_some_and(|c| set.iter().any(|w| self.comp.get(w) == Some(c)))
    }

    fn inhomogeneous(&self, set: &BTreeSet<usize>) -> bool {
        let mut seen: BTreeMap<usize, u32> = BTreeMap::new();
        for v in set {
            if let Some(&c) = self.comp.get(v) {
                let s = self.side[v];
                if *seen.entry(c).or_insert(s) != s {
                    return true;
                }
            }
        }
        false
    }
}

/// All oracle strings at stage `s` with the enumeration of each adversary.
struct Oracles {
    len: usize,
    sets: Vec<Vec<BTreeSet<usize>>>,
}

impl Oracles {
    fn at(advs: &[OracleAdversary], s: usize) -> Oracles {
        let len = advs.iter().map(|a| a.prefix_len).max().unwrap_or(0).min(s);
        let mut sets = vec![Vec::with_capacity(1 << len); advs.len()];
        for v in 0u64..(1u64 << len) {
            let sigma: Word = (0..len).map(|i| ((v >> (len - 1 - i)) & 1) as u32).collect();
            for (k, a) in advs.iter().enumerate() {
                sets[k].push(a.enumerated(&sigma).clone());
            }
        }
        Oracles { len, sets }
    }

    fn measure(&self, k: usize, pred: impl Fn(&BTreeSet<usize>) -> bool) -> Dyadic {
        Dyadic::from_count(self.sets[k].iter().filter(|w| pred(w)).count() as u128, self.len as u32)
    }
}

fn log_cmp(log: &mut Vec<Comparison>, stage: usize, e: usize, test: &str, measure: Dyadic, num: u64, den: u64) -> bool {
    let outcome = measure.gt_ratio(num, den);
    log.push(Comparison { stage, e, test: test.to_string(), measure, num, den, outcome });
    outcome
}

/// Least-first selection of vertices from `candidates` until the covered measure exceeds 9/10.
fn select(oracles: &Oracles, k: usize, candidates: &BTreeSet<usize>) -> (Vec<usize>, Dyadic) {
    let mut chosen: BTreeSet<usize> = BTreeSet::new();
    let mut m = Dyadic::zero();
    for &v in candidates {
        chosen.insert(v);
        m = oracles.measure(k, |w| !w.is_disjoint(&chosen));
        if m.gt_ratio(9, 10) {
            break;
        }
    }
    (chosen.into_iter().collect(), m)
}

fn attach(g: &mut Graph, v: usize, a: usize, b: usize) -> Result<()> {
    g.add_edge(v, a)?;
    if odd_cycle_exists(g) {
        g.remove_edge(v, a);
        g.add_edge(v, b)?;
    }
    Ok(())
}

#[derive(Default)]
struct State {
    locked: BTreeSet<usize>,
    acted_two: bool,
    type_one_stages: Vec<usize>,
    type_two: Option<TypeTwo>,
}

/// Runs stages `1..=stages` against the given adversaries.
pub fn measure_build(adversaries: &[OracleAdversary], stages: usize) -> Result<MeasureRun> {
    let mut seen = BTreeSet::new();
    for a in adversaries {
        a.validate()?;
        if !seen.insert(a.e) {
            return Err(invalid(format!("adversary index {} appears twice", a.e)));
        }
    }
    let mut advs: Vec<OracleAdversary> = adversaries.to_vec();
    advs.sort_by_key(|a| a.e);
    let mut next_fresh = advs.iter().flat_map(|a| a.vertices()).max().map_or(0, |m| m + 1);
    let mut graph = Graph::new();
    let mut states: Vec<State> = advs.iter().map(|_| State::default()).collect();
    let mut log = Vec::new();
    let mut bipartite_after = Vec::new();
    for s in 1..=stages {
        let oracles = Oracles::at(&advs, s);
        let view = View::of(&graph).ok_or_else(|| precondition("graph stopped being bipartite"))?;
        let mut acted = false;
        for k in 0..advs.len() {
            let e = advs[k].e;
            if e >= s || acted {
                continue;
            }
            let lower: BTreeSet<usize> = (0..k).flat_map(|j| states[j].locked.iter().copied()).collect();
            if states[k].locked.is_empty() {
                let m = oracles.measure(k, |w| w.iter().any(|&x| !view.touches(x, &lower)));
                if log_cmp(&mut log, s, e, "type I requires attention", m, 9, 10) {
                    let candidates: BTreeSet<usize> =
                        oracles.sets[k].iter().flatten().copied().filter(|&x| !view.touches(x, &lower)).collect();
                    let (xs, covered) = select(&oracles, k, &candidates);
                    log_cmp(&mut log, s, e, "type I selection covers", covered, 9, 10);
                    states[k].locked = xs.into_iter().collect();
                    states[k].type_one_stages.push(s);
                    for st in states.iter_mut().skip(k + 1) {
                        st.locked.clear();
                    }
                    acted = true;
                }
            } else if !states[k].acted_two {
                let upto: BTreeSet<usize> = lower.union(&states[k].locked).copied().collect();
                let m = oracles.measure(k, |w| w.iter().any(|&y| !view.touches(y, &upto)));
                if log_cmp(&mut log, s, e, "type II requires attention", m, 9, 10) {
                    let candidates: BTreeSet<usize> =
                        oracles.sets[k].iter().flatten().copied().filter(|&y| !view.touches(y, &upto)).collect();
                    let (ys, covered) = select(&oracles, k, &candidates);
                    log_cmp(&mut log, s, e, "type II selection covers", covered, 9, 10);
                    let xs: Vec<usize> = states[k].locked.iter().copied().collect();
                    let fresh_base = next_fresh.max(s + 1).max(graph.max_vertex().map_or(0, |m| m + 1));
                    let [a, b, c, d] = [fresh_base, fresh_base + 1, fresh_base + 2, fresh_base + 3];
                    next_fresh = fresh_base + 4;
                    graph.add_edge(a, b)?;
                    graph.add_edge(c, d)?;
                    for &x in &xs {
                        attach(&mut graph, x, a, b)?;
                    }
                    for &y in &ys {
                        attach(&mut graph, y, c, d)?;
                    }
                    let (xset, yset): (BTreeSet<usize>, BTreeSet<usize>) =
                        (xs.iter().copied().collect(), ys.iter().copied().collect());
                    let joint = oracles.measure(k, |w| !w.is_disjoint(&xset) && !w.is_disjoint(&yset));
                    log_cmp(&mut log, s, e, "type II joint coverage", joint, 4, 5);
                    let mut g1 = graph.clone();
                    g1.add_edge(a, c)?;
                    let mut g2 = graph.clone();
                    g2.add_edge(a, d)?;
                    let v1 = View::of(&g1).ok_or_else(|| precondition("merge with (a,c) is not bipartite"))?;
                    let v2 = View::of(&g2).ok_or_else(|| precondition("merge with (a,d) is not bipartite"))?;
                    let with_ac = oracles.measure(k, |w| v1.inhomogeneous(w));
                    let with_ad = oracles.measure(k, |w| v2.inhomogeneous(w));
                    let chose_ac = log_cmp(&mut log, s, e, "type II edge (a,c) defeats", with_ac, 2, 5);
                    if chose_ac {
                        graph = g1;
                    } else if log_cmp(&mut log, s, e, "type II edge (a,d) defeats", with_ad, 2, 5) {
                        graph = g2;
                    } else {
                        return Err(precondition(format!("requirement {e}: neither merge defeats more than 2/5")));
                    }
                    states[k].acted_two = true;
                    states[k].type_two = Some(TypeTwo { stage: s, xs, ys, fresh: [a, b, c, d], joint, with_ac, with_ad, chose_ac });
                    acted = true;
                }
            }
        }
        bipartite_after.push(!odd_cycle_exists(&graph));
    }
    let final_oracles = Oracles::at(&advs, stages);
    let view = View::of(&graph).ok_or_else(|| precondition("final graph is not bipartite"))?;
    let requirements = advs
        .iter()
        .zip(states)
        .enumerate()
        .map(|(k, (a, st))| RequirementReport {
            e: a.e,
            type_one_stages: st.type_one_stages,
            locked: st.locked,
            type_two: st.type_two,
            defeated: final_oracles.measure(k, |w| view.inhomogeneous(w)),
        })
        .collect();
    Ok(MeasureRun { graph, log, requirements, bipartite_after })
}
