//! A bipartite graph built against finitely many enumeration schedules.
//!
//! Each adversary `W_e` enumerates pairs `⟨x,y⟩` meaning `y ∈ W_e^{[x]}`.
//! At stage `s` the least `e` that requires attention and has not yet
//! received it joins its least eligible pair by a fresh path of length 3,
//! which makes `{x,y}` inhomogeneous while keeping the graph a forest.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::graph::{enumerate_odd_pairs, odd_cycle_exists, Graph, OddPair};

/// One enumeration event: `y` enters `W_e^{[x]}` at stage `stage`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PairEvent {
    pub stage: usize,
    pub x: usize,
    pub y: usize,
}

/// The enumeration behavior of one adversary `W_e`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdversarySchedule {
    pub e: usize,
    /// Events in nondecreasing stage order.
    pub events: Vec<PairEvent>,
}

impl AdversarySchedule {
    /// Checks that stages are nondecreasing and that no event pairs a vertex with itself.
    pub fn validate(&self) -> Result<()> {
        for w in self.events.windows(2) {
            if w[1].stage < w[0].stage {
                return Err(invalid(format!("adversary {}: stage {} follows stage {}", self.e, w[1].stage, w[0].stage)));
            }
        }
        if let Some(ev) = self.events.iter().find(|ev| ev.x == ev.y) {
            return Err(invalid(format!("adversary {}: pair ⟨{},{}⟩ repeats a vertex", self.e, ev.x, ev.y)));
        }
        Ok(())
    }

    /// Pairs enumerated by stage `s`, sorted and without repeats.
    pub fn pairs_by(&self, s: usize) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> =
            self.events.iter().take_while(|ev| ev.stage <= s).map(|ev| (ev.x, ev.y)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// One action of the construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Attention {
    pub stage: usize,
    pub e: usize,
    pub x: usize,
    pub y: usize,
    /// The fresh path is `x – u – v – y`.
    pub u: usize,
    pub v: usize,
}

/// Result of [`priority_build`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PriorityRun {
    pub graph: Graph,
    pub log: Vec<Attention>,
    /// For each stage, the adversaries that required attention and had not yet received it.
    pub requiring: Vec<Vec<usize>>,
    /// Whether the graph had no odd cycle after each stage.
    pub bipartite_after: Vec<bool>,
}

struct Components {
    label: BTreeMap<usize, usize>,
    min: BTreeMap<usize, usize>,
}

impl Components {
    fn of(g: &Graph) -> Self {
        let mut label = BTreeMap::new();
        let mut min = BTreeMap::new();
        for (i, comp) in g.components().into_iter().enumerate() {
            min.insert(i, *comp.iter().next().expect("components are nonempty"));
            for v in comp {
                label.insert(v, i);
            }
        }
        Components { label, min }
    }

    fn connected(&self, a: usize, b: usize) -> bool {
        a == b || matches!((self.label.get(&a), self.label.get(&b)), (Some(x), Some(y)) if x == y)
    }

    /// Least vertex connected to `v`, which is `v` itself when it is isolated.
    fn least(&self, v: usize) -> usize {
        self.label.get(&v).map_or(v, |c| self.min[c])
    }
}

/// The least pair witnessing that `adv` requires attention at stage `s`, if any.
fn witness(adv: &AdversarySchedule, s: usize, comps: &Components) -> Option<(usize, usize)> {
    if adv.e >= s {
        return None;
    }
    let e = adv.e;
    adv.pairs_by(s)
        .into_iter()
        .find(|&(x, y)| e < x && x < y && y < s && !comps.connected(x, y) && comps.least(x) > e && comps.least(y) > e)
}

fn least_isolated_above(g: &Graph, s: usize) -> usize {
    (s + 1..).find(|&v| g.degree(v) == 0).expect("only finitely many vertices are used")
}

/// Runs stages `0..stages` against the given adversaries.
pub fn priority_build(adversaries: &[AdversarySchedule], stages: usize) -> Result<PriorityRun> {
    let mut seen = std::collections::BTreeSet::new();
    for a in adversaries {
        a.validate()?;
        if !seen.insert(a.e) {
            return Err(invalid(format!("adversary index {} appears twice", a.e)));
        }
    }
    let mut order: Vec<&AdversarySchedule> = adversaries.iter().collect();
    order.sort_by_key(|a| a.e);
    let mut graph = Graph::new();
    let mut attended = std::collections::BTreeSet::new();
    let mut log = Vec::new();
    let mut requiring = Vec::new();
    let mut bipartite_after = Vec::new();
    for s in 0..stages {
        let comps = Components::of(&graph);
        let ready: Vec<(usize, (usize, usize))> = order
            .iter()
            .filter(|a| !attended.contains(&a.e))
            .filter_map(|a| witness(a, s, &comps).map(|p| (a.e, p)))
            .collect();
        requiring.push(ready.iter().map(|(e, _)| *e).collect());
        if let Some(&(e, (x, y))) = ready.first() {
            let u = least_isolated_above(&graph, s);
            graph.add_vertex(u);
            graph.add_edge(x, u)?;
            let v = least_isolated_above(&graph, s);
            graph.add_edge(u, v)?;
            graph.add_edge(v, y)?;
            attended.insert(e);
            log.push(Attention { stage: s, e, x, y, u, v });
        }
        bipartite_after.push(!odd_cycle_exists(&graph));
    }
    Ok(PriorityRun { graph, log, requiring, bipartite_after })
}

/// An enumerated pair of `adv` joined by an odd path in `g`, if there is one.
pub fn defeat_certificate(g: &Graph, adv: &AdversarySchedule) -> Option<OddPair> {
    adv.pairs_by(usize::MAX).into_iter().find_map(|(x, y)| {
        if !g.has_vertex(x) || !g.has_vertex(y) {
            return None;
        }
        let pair: std::collections::BTreeSet<usize> = [x, y].into_iter().collect();
        enumerate_odd_pairs(g, &pair).into_iter().next()
    })
}

/// True iff some pair enumerated by `adv` is not homogeneous for `g`.
pub fn verify_defeated(g: &Graph, adv: &AdversarySchedule) -> bool {
    defeat_certificate(g, adv).is_some()
}
