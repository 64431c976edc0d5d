//! Block-redundant coding of a binary tree for everywhere-packed solutions.
//!
//! Symbol `j` of a node of `T` is repeated over the block `[u_j, u_{j+1})`,
//! where the block ends are chosen so that a partial function packed for `g`
//! must meet every block. The first domain element in each block then reads
//! off a path of `T`.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, precondition, Error, Result};
use crate::tree::{func_homogeneous_to_depth, FinTree, PartialHom, Word};

/// A tabulated order function `g` on `[0, len)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderFunction {
    values: Vec<usize>,
}

impl OrderFunction {
    /// Validates a table: nondecreasing and bounded by the identity.
    pub fn new(values: Vec<usize>) -> Result<Self> {
        if let Some(i) = (1..values.len()).find(|&i| values[i] < values[i - 1]) {
            return Err(invalid(format!("order function decreases at {i}")));
        }
        if let Some((i, v)) = values.iter().enumerate().find(|(i, v)| **v > *i) {
            return Err(invalid(format!("order function has g({i}) = {v} > {i}")));
        }
        Ok(OrderFunction { values })
    }

    /// `g(n) = ⌊n/2⌋` on `[0, len)`.
    pub fn floor_half(len: usize) -> Self {
        OrderFunction { values: (0..len).map(|n| n / 2).collect() }
    }

    /// `g(n) = n` on `[0, len)`.
    pub fn identity(len: usize) -> Self {
        OrderFunction { values: (0..len).collect() }
    }

    /// `g(n)`, or `None` outside the table.
    pub fn get(&self, n: usize) -> Option<usize> {
        self.values.get(n).copied()
    }

    /// Number of tabulated arguments.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// True iff the table is empty.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// The block ends `u₀ = 0`, `u_{n+1} = μi (g(i) ≥ u_n + 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct USequence {
    pub g: OrderFunction,
    pub u: Vec<usize>,
}

impl USequence {
    /// Computes `u₀ … u_count`; errors if the table of `g` is too short.
    pub fn new(g: OrderFunction, count: usize) -> Result<Self> {
        let mut u = vec![0usize];
        for _ in 0..count {
            let target = u.last().expect("nonempty") + 1;
            let next = (0..g.len())
                .find(|&i| g.values[i] >= target)
                .ok_or_else(|| invalid(format!("order function table never reaches {target}")))?;
            u.push(next);
        }
        Ok(USequence { g, u })
    }

    /// `μi (n < u_i)`: the length of the source node behind a length-`n` node.
    pub fn source_length(&self, n: usize) -> Option<usize> {
        self.u.iter().position(|&ui| n < ui)
    }
}

/// The redundant tree together with its block structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Packed {
    pub tree: FinTree,
    pub seq: USequence,
}

/// Writes `τ(j)` across the block `[u_j, u_{j+1})` for each `j < |τ|`.
pub fn expand(tau: &[u32], u: &[usize]) -> Word {
    let mut out = Vec::new();
    for (j, &a) in tau.iter().enumerate() {
        out.extend(std::iter::repeat(a).take(u[j + 1] - u[j]));
    }
    out
}

/// Builds the redundant tree of horizon `u_D - 1` from a binary tree of horizon `D ≥ 1`.
pub fn pack_redundant(t: &FinTree, g: &OrderFunction) -> Result<Packed> {
    if t.alphabet() != 2 {
        return Err(invalid("redundant packing needs a binary tree"));
    }
    if t.horizon() == 0 {
        return Err(invalid("redundant packing needs horizon at least 1"));
    }
    let g = OrderFunction::new(g.values.clone())?;
    let seq = USequence::new(g, t.horizon())?;
    let horizon = seq.u[t.horizon()] - 1;
    let mut nodes = Vec::new();
    for n in 0..=horizon {
        let j = seq.source_length(n).expect("n is below u_D");
        for tau in t.level(j) {
            let mut w = expand(tau, &seq.u);
            w.truncate(n);
            nodes.push(w);
        }
    }
    let tree = FinTree::from_nodes(2, horizon, nodes)?;
    Ok(Packed { tree, seq })
}

/// True iff `|dom(h) ∩ [0,n)| ≥ g(n)` for every tabulated `n ≤ up_to`.
pub fn is_packed(h: &PartialHom, g: &OrderFunction, up_to: usize) -> bool {
    (0..=up_to.min(g.len().saturating_sub(1))).all(|n| h.domain_below(n) >= g.values[n])
}

/// Reads a node of `T` off a homogeneous, everywhere-packed partial function.
///
/// Every block `[u_j, u_{j+1})` ending at or below the horizon must meet
/// `dom(h)`; the last, truncated block contributes a symbol only when it does.
pub fn decode_packed(p: &Packed, h: &PartialHom) -> Result<Word> {
    let horizon = p.tree.horizon();
    if !func_homogeneous_to_depth(&p.tree, h, horizon) {
        return Err(Error::NotHomogeneous("partial function for the packed tree".into()));
    }
    let u = &p.seq.u;
    let mut f = Vec::new();
    for j in 0..u.len() - 1 {
        if u[j] >= horizon {
            break;
        }
        match h.entries.range(u[j]..u[j + 1].min(horizon)).next() {
            Some((_, &v)) => f.push(v),
            None if u[j + 1] <= horizon => {
                return Err(precondition(format!("block [{}, {}) misses dom(h)", u[j], u[j + 1])));
            }
            None => break,
        }
    }
    if !is_packed(h, &p.seq.g, horizon) {
        return Err(precondition("partial function is not everywhere-packed"));
    }
    Ok(f)
}
