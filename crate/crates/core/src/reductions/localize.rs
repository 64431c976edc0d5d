//! Localization of a binary tree along an increasing sequence of positions.
//!
//! `S` keeps only the coordinates `x_0 < x_1 < ...` of `T`: a word `σ` of length
//! `n` is in `S` when some `τ ∈ T` of length `x_n` carries `σ(i)` at `x_i`.
//! Positions at or beyond the horizon of `T` are dropped, and the horizon of
//! `T` itself stands in for the first missing `x_n`.

use crate::dyadic::Dyadic;
use crate::error::{invalid, Error, Result};
use crate::tree::{tree_homogeneous_to_depth, ColorSet, FinTree};

/// A localized tree together with the positions it was localized along.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Localized {
    pub tree: FinTree,
    /// The entries of `X` below the source horizon; `tree.horizon() == positions.len()`.
    pub positions: Vec<usize>,
    /// Horizon of the source tree.
    pub source_horizon: usize,
}

impl Localized {
    /// `x_n`, with the source horizon standing in for `n == positions.len()`.
    pub fn anchor(&self, n: usize) -> usize {
        self.positions.get(n).copied().unwrap_or(self.source_horizon)
    }
}

fn check_increasing(x: &[usize]) -> Result<()> {
    if let Some(w) = x.windows(2).find(|w| w[0] >= w[1]) {
        return Err(invalid(format!("positions must be strictly increasing, found {} before {}", w[0], w[1])));
    }
    Ok(())
}

/// Localizes `T` along `X`.
pub fn localize_tree(t: &FinTree, x: &[usize]) -> Result<Localized> {
    check_increasing(x)?;
    let positions: Vec<usize> = x.iter().copied().take_while(|&p| p < t.horizon()).collect();
    let m = positions.len();
    let mut nodes = Vec::new();
    for n in 0..=m {
        let anchor = if n == m { t.horizon() } else { positions[n] };
        for tau in t.level(anchor) {
            nodes.push(positions[..n].iter().map(|&p| tau[p]).collect::<Vec<u32>>());
        }
    }
    let tree = FinTree::from_nodes(t.alphabet(), m, nodes)?;
    Ok(Localized { tree, positions, source_horizon: t.horizon() })
}

/// Maps a homogeneous set for the localized tree back to `T`.
///
/// The result `{x_i : i ∈ H₀}` carries the same color and is homogeneous for
/// `T` up to the source horizon.
pub fn decode_localized(loc: &Localized, h0: &ColorSet) -> Result<ColorSet> {
    if let Some(&bad) = h0.positions.iter().find(|&&i| i >= loc.positions.len()) {
        return Err(invalid(format!("position {bad} is outside the localized tree")));
    }
    if !tree_homogeneous_to_depth(&loc.tree, h0, loc.tree.horizon()) {
        return Err(Error::NotHomogeneous(format!("{h0} for the localized tree")));
    }
    Ok(ColorSet::new(h0.positions.iter().map(|&i| loc.positions[i]), h0.color))
}

/// Localizes a binary tree and certifies a lower bound on the density of the result.
///
/// Level `n` of `S` has at least `|T^{x_n}| / 2^{x_n - n}` nodes, so
/// `min_n |T^{x_n}| / 2^{x_n}` bounds every level density of `S` from below.
pub fn localize_positive_measure(t: &FinTree, x: &[usize]) -> Result<(Localized, Dyadic)> {
    let loc = localize_tree(t, x)?;
    t.min_level_density()?;
    let bound = (0..=loc.positions.len())
        .map(|n| t.level_density(loc.anchor(n)))
        .min()
        .expect("at least one level");
    debug_assert!(loc.tree.min_level_density()? >= bound);
    Ok((loc, bound))
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;

    #[test]
    fn identity_localization_is_identity() {
        let t = FinTree::full(2, 4);
        assert_eq!(localize_tree(&t, &[0, 1, 2, 3]).unwrap().tree, t);
    }

    #[test]
    fn sparse_localization_of_full_tree() {
        let loc = localize_tree(&FinTree::full(2, 4), &[1, 3]).unwrap();
        assert_eq!(loc.tree, FinTree::full(2, 2));
    }

    #[test]
    fn pinned_position_moves_to_its_index() {
        let t = FinTree::full(2, 4).gamma_restrict(&BTreeSet::from([1]), 1);
        let loc = localize_tree(&t, &[1, 3]).unwrap();
        assert_eq!(loc.tree, FinTree::full(2, 2).gamma_restrict(&BTreeSet::from([0]), 1));
        let h = decode_localized(&loc, &ColorSet::new([0], 1)).unwrap();
        assert_eq!(h, ColorSet::new([1], 1));
        assert!(tree_homogeneous_to_depth(&t, &h, 4));
        assert!(decode_localized(&loc, &ColorSet::new([0], 0)).is_err());
        assert_eq!(decode_localized(&loc, &ColorSet::new([], 0)).unwrap(), ColorSet::new([], 0));
    }

    #[test]
    fn rejects_non_increasing_positions() {
        assert!(localize_tree(&FinTree::full(2, 3), &[2, 2]).is_err());
    }

    #[test]
    fn measure_bound() {
        let (loc, q) = localize_positive_measure(&FinTree::full(2, 5), &[0, 2]).unwrap();
        assert_eq!(q, Dyadic::one());
        assert_eq!(loc.tree.min_level_density().unwrap(), Dyadic::one());
        let g = FinTree::full(2, 6).gamma_restrict(&BTreeSet::from([0, 1, 2]), 1);
        let (loc, q) = localize_positive_measure(&g, &[3, 4, 5]).unwrap();
        assert_eq!(q, Dyadic::new(1, 3));
        assert!(loc.tree.min_level_density().unwrap() >= q);
    }
}
