//! Exhaustive backtracking over proper colorings with forward checking.
//!
//! Enumeration branches on vertices in increasing id order and on colors in
//! increasing order, so results come out lexicographically. The single
//! solution search instead branches on the vertex with the fewest remaining
//! colors, which is much faster on the gadget graphs.

use std::collections::BTreeMap;

use crate::error::{invalid, Error, Result};
use crate::graph::Graph;

/// A vertex coloring.
pub type Coloring = BTreeMap<usize, u32>;

/// Limits on an exhaustive coloring search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// Maximum number of search-tree nodes.
    pub max_nodes: u64,
    /// Maximum number of colorings to collect when enumerating.
    pub max_solutions: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_nodes: 50_000_000, max_solutions: 1_000_000 }
    }
}

/// True iff every vertex gets a color below `k` and adjacent vertices differ.
pub fn is_proper_coloring(g: &Graph, nu: &Coloring, k: u32) -> bool {
    g.vertices().all(|v| nu.get(&v).is_some_and(|&c| c < k)) && g.edges().iter().all(|(u, v)| nu[u] != nu[v])
}

struct Solver {
    ids: Vec<usize>,
    adj: Vec<Vec<usize>>,
    domain: Vec<u32>,
    color: Vec<Option<u32>>,
    nodes: u64,
    budget: SearchBudget,
}

enum Flow {
    Continue,
    Stop,
}

impl Solver {
    fn new(g: &Graph, k: u32, pins: &Coloring, budget: SearchBudget) -> Result<Option<Solver>> {
        if k == 0 || k > 32 {
            return Err(invalid(format!("color count {k} out of range")));
        }
        let ids: Vec<usize> = g.vertices().collect();
        let index: BTreeMap<usize, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let adj = ids.iter().map(|&v| g.neighbors(v).map(|w| index[&w]).collect()).collect();
        let full = if k == 32 { u32::MAX } else { (1u32 << k) - 1 };
        let mut s = Solver { ids, adj, domain: vec![full; index.len()], color: vec![None; index.len()], nodes: 0, budget };
        for (&v, &c) in pins {
            let &i = index.get(&v).ok_or_else(|| invalid(format!("pinned vertex {v} is not in the graph")))?;
            if c >= k {
                return Err(invalid(format!("pinned color {c} out of range")));
            }
            if s.domain[i] & (1 << c) == 0 || s.assign(i, c).is_none() {
                return Ok(None);
            }
        }
        Ok(Some(s))
    }

    /// Colors `i` with `c`; returns the trail of pruned neighbors, or `None` on a wipe-out.
    fn assign(&mut self, i: usize, c: u32) -> Option<Vec<usize>> {
        self.color[i] = Some(c);
        let mut trail = Vec::new();
        let mut ok = true;
        for j in 0..self.adj[i].len() {
            let w = self.adj[i][j];
            if self.color[w].is_none() && self.domain[w] & (1 << c) != 0 {
                self.domain[w] &= !(1 << c);
                trail.push(w);
                if self.domain[w] == 0 {
                    ok = false;
                }
            }
        }
        if ok {
            Some(trail)
        } else {
            self.undo(i, c, &trail);
            None
        }
    }

    fn undo(&mut self, i: usize, c: u32, trail: &[usize]) {
        self.color[i] = None;
        for &w in trail {
            self.domain[w] |= 1 << c;
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            return Err(Error::Budget { what: "coloring search nodes", needed: self.nodes, limit: self.budget.max_nodes });
        }
        Ok(())
    }

    fn snapshot(&self) -> Coloring {
        self.ids.iter().zip(&self.color).map(|(&v, c)| (v, c.expect("complete"))).collect()
    }

    fn enumerate(&mut self, pos: usize, out: &mut Vec<Coloring>) -> Result<Flow> {
        self.tick()?;
        let Some(i) = (pos..self.ids.len()).find(|&i| self.color[i].is_none()) else {
            if out.len() >= self.budget.max_solutions {
                return Err(Error::Budget {
                    what: "enumerated colorings",
                    needed: out.len() as u64 + 1,
                    limit: self.budget.max_solutions as u64,
                });
            }
            out.push(self.snapshot());
            return Ok(Flow::Continue);
        };
        let dom = self.domain[i];
        for c in (0..32).filter(|c| dom & (1 << c) != 0) {
            if let Some(trail) = self.assign(i, c) {
                let flow = self.enumerate(i + 1, out);
                self.undo(i, c, &trail);
                flow?;
            }
        }
        Ok(Flow::Continue)
    }

    fn find(&mut self) -> Result<Flow> {
        self.tick()?;
        let pick = (0..self.ids.len())
            .filter(|&i| self.color[i].is_none())
            .min_by_key(|&i| (self.domain[i].count_ones(), std::cmp::Reverse(self.adj[i].len()), i));
        let Some(i) = pick else {
            return Ok(Flow::Stop);
        };
        let dom = self.domain[i];
        for c in (0..32).filter(|c| dom & (1 << c) != 0) {
            if let Some(trail) = self.assign(i, c) {
                match self.find()? {
                    Flow::Stop => return Ok(Flow::Stop),
                    Flow::Continue => self.undo(i, c, &trail),
                }
            }
        }
        Ok(Flow::Continue)
    }
}

/// Every proper `k`-coloring extending `pins`, in lexicographic order by vertex then color.
pub fn enumerate_colorings(g: &Graph, k: u32, pins: &Coloring, budget: SearchBudget) -> Result<Vec<Coloring>> {
    let mut out = Vec::new();
    if let Some(mut s) = Solver::new(g, k, pins, budget)? {
        s.enumerate(0, &mut out)?;
    }
    Ok(out)
}

/// Some proper `k`-coloring extending `pins`, or `None` if there is none.
pub fn find_coloring(g: &Graph, k: u32, pins: &Coloring, budget: SearchBudget) -> Result<Option<Coloring>> {
    let Some(mut s) = Solver::new(g, k, pins, budget)? else {
        return Ok(None);
    };
    Ok(match s.find()? {
        Flow::Stop => Some(s.snapshot()),
        Flow::Continue => None,
    })
}
