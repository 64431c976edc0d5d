//! Localization of a coloring of `n`-element sets along an increasing sequence.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// A coloring of the increasing `exponent`-tuples from `[0, size)` with `colors` colors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub exponent: usize,
    pub colors: u32,
    pub size: usize,
    pub table: BTreeMap<Vec<usize>, u32>,
}

/// All increasing `n`-tuples from `[0, size)` in lexicographic order.
pub fn increasing_tuples(size: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, size: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in start..size {
            cur.push(v);
            go(v + 1, size, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, size, n, &mut Vec::new(), &mut out);
    out
}

impl Coloring {
    /// Tabulates `f` on every increasing tuple, validating the colors.
    pub fn from_fn(exponent: usize, colors: u32, size: usize, mut f: impl FnMut(&[usize]) -> u32) -> Result<Self> {
        let mut table = BTreeMap::new();
        for t in increasing_tuples(size, exponent) {
            let c = f(&t);
            if c >= colors {
                return Err(invalid(format!("color {c} out of range for tuple {t:?}")));
            }
            table.insert(t, c);
        }
        Ok(Coloring { exponent, colors, size, table })
    }

    /// `f(t)` for an increasing tuple inside the table.
    pub fn color(&self, t: &[usize]) -> Option<u32> {
        self.table.get(t).copied()
    }

    /// True iff every increasing tuple from `h` gets color `c`.
    pub fn is_homogeneous(&self, h: &BTreeSet<usize>, c: u32) -> bool {
        let hv: Vec<usize> = h.iter().copied().collect();
        increasing_tuples(hv.len(), self.exponent)
            .iter()
            .all(|idx| self.color(&idx.iter().map(|&i| hv[i]).collect::<Vec<_>>()) == Some(c))
    }

    /// Brute-force oracle: every `(H, c)` with `H ⊆ [0, size)` homogeneous for the coloring.
    pub fn homogeneous_sets(&self) -> Vec<(BTreeSet<usize>, u32)> {
        let mut out = Vec::new();
        for m in 0u64..(1 << self.size) {
            let h: BTreeSet<usize> = (0..self.size).filter(|i| m & (1 << i) != 0).collect();
            for c in 0..self.colors {
                if self.is_homogeneous(&h, c) {
                    out.push((h.clone(), c));
                }
            }
        }
        out
    }
}

/// `g(i₀,…,i_{n-1}) = f(x_{i₀},…,x_{i_{n-1}})` on the indices of `X` inside the table of `f`.
pub fn localize_coloring(f: &Coloring, x: &[usize]) -> Result<Coloring> {
    if x.windows(2).any(|w| w[0] >= w[1]) {
        return Err(invalid("positions must be strictly increasing"));
    }
    let xs: Vec<usize> = x.iter().copied().take_while(|&p| p < f.size).collect();
    Coloring::from_fn(f.exponent, f.colors, xs.len(), |t| {
        f.color(&t.iter().map(|&i| xs[i]).collect::<Vec<_>>()).expect("tuple inside table")
    })
}

/// `H = {x_i : i ∈ H₀}`, after checking that `H₀` is homogeneous for `g` with color `c`.
pub fn decode_localized_coloring(g: &Coloring, x: &[usize], h0: &BTreeSet<usize>, c: u32) -> Result<BTreeSet<usize>> {
    if h0.iter().any(|&i| i >= g.size) {
        return Err(invalid("index outside the localized coloring"));
    }
    if !g.is_homogeneous(h0, c) {
        return Err(Error::NotHomogeneous(format!("{h0:?} with color {c} for the localized coloring")));
    }
    Ok(h0.iter().map(|&i| x[i]).collect())
}
