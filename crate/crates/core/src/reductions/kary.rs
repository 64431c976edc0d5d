//! Reduction from a tree over `2^b` symbols to a binary tree, and back.
//!
//! Each symbol is written as its `b`-bit binary expansion, most significant
//! bit first. A homogeneous set for the source is rebuilt from `b` rounds of
//! localized homogeneous sets on the binary image: round `ℓ` fixes the `ℓ`-th
//! bit of the color on positions `≡ ℓ (mod b)`.

use crate::error::{invalid, precondition, Error, Result};
use crate::tree::{tree_homogeneous_to_depth, ColorSet, FinTree};

/// The binary image of a tree over `k` symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KaryEncoding {
    /// The binary tree `S₀` of all prefixes of expanded nodes.
    pub tree: FinTree,
    /// Bits per source symbol.
    pub bits: usize,
    /// Alphabet of the source tree.
    pub source_alphabet: u32,
    /// `2^bits`; symbols in `[source_alphabet, padded_alphabet)` never occur.
    pub padded_alphabet: u32,
}

impl KaryEncoding {
    /// The localization set `X₀ = {b·n : n < D}` of the first round.
    pub fn initial_positions(&self) -> Vec<usize> {
        (0..self.tree.horizon()).step_by(self.bits).collect()
    }
}

/// Bits needed to write symbols below `k` (at least one).
pub fn bits_for(k: u32) -> usize {
    (32 - (k.max(2) - 1).leading_zeros()) as usize
}

/// Binary expansion of a word, `bits` bits per symbol, most significant first.
pub fn expand_word(w: &[u32], bits: usize) -> Vec<u32> {
    w.iter().flat_map(|&a| (0..bits).rev().map(move |j| (a >> j) & 1)).collect()
}

/// Builds `S₀`, padding the alphabet up to a power of two when needed.
pub fn kary_to_binary(t: &FinTree) -> KaryEncoding {
    let bits = bits_for(t.alphabet());
    let mut nodes = Vec::new();
    for tau in t.nodes() {
        let e = expand_word(tau, bits);
        let start = if tau.is_empty() { 0 } else { e.len() - bits + 1 };
        for n in start..=e.len() {
            nodes.push(e[..n].to_vec());
        }
    }
    let tree = FinTree::from_nodes(2, bits * t.horizon(), nodes).expect("expansions are prefix-closed");
    KaryEncoding { tree, bits, source_alphabet: t.alphabet(), padded_alphabet: 1 << bits }
}

/// One refinement round: restricts `S_ℓ` to nodes with color `c_ℓ` on `H_ℓ`.
///
/// Returns `S_{ℓ+1}` and `X_{ℓ+1} = {n+1 : n ∈ H_ℓ}`.
pub fn kary_refine_step(s: &FinTree, h: &ColorSet, level: usize, bits: usize) -> Result<(FinTree, Vec<usize>)> {
    if bits == 0 || level >= bits {
        return Err(invalid(format!("round {level} out of range for {bits} bits")));
    }
    if let Some(&p) = h.positions.iter().find(|&&p| p % bits != level) {
        return Err(precondition(format!("position {p} is not congruent to {level} mod {bits}")));
    }
    if !tree_homogeneous_to_depth(s, h, s.horizon()) {
        return Err(Error::NotHomogeneous(format!("{h} in round {level}")));
    }
    let next = s.gamma_restrict(&h.positions, h.color);
    Ok((next, h.positions.iter().map(|&n| n + 1).collect()))
}

/// Recovers a homogeneous set for the source from the last round.
///
/// `colors` are `c₀ … c_{b-1}`, the colors of the `b` rounds in order.
pub fn decode_kary(enc: &KaryEncoding, last: &ColorSet, colors: &[u32]) -> Result<ColorSet> {
    let b = enc.bits;
    if colors.len() != b || colors.iter().any(|&c| c > 1) {
        return Err(invalid(format!("expected {b} binary colors, got {colors:?}")));
    }
    if let Some(&p) = last.positions.iter().find(|&&p| p % b != b - 1) {
        return Err(precondition(format!("position {p} is not congruent to {} mod {b}", b - 1)));
    }
    let a = colors.iter().fold(0u32, |acc, &c| (acc << 1) | c);
    let positions: Vec<usize> = last.positions.iter().map(|&p| p / b).collect();
    if a >= enc.source_alphabet {
        if positions.is_empty() {
            return Ok(ColorSet::new([], 0));
        }
        return Err(precondition(format!("decoded color {a} is padding outside alphabet {}", enc.source_alphabet)));
    }
    Ok(ColorSet::new(positions, a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::parse_word;

    fn bin(nodes: &[&str], d: usize) -> FinTree {
        FinTree::from_nodes(2, d, nodes.iter().map(|s| parse_word(s, 2).unwrap())).unwrap()
    }

    #[test]
    fn full_quaternary_expands_to_full_binary() {
        let enc = kary_to_binary(&FinTree::full(4, 1));
        assert_eq!(enc.tree, FinTree::full(2, 2));
        assert_eq!(enc.bits, 2);
    }

    #[test]
    fn single_symbol_expansion() {
        let t = FinTree::from_nodes(4, 1, [vec![], vec![2]]).unwrap();
        assert_eq!(kary_to_binary(&t).tree, bin(&["", "1", "10"], 2));
        let chain = FinTree::from_nodes(4, 2, [vec![], vec![3], vec![3, 3]]).unwrap();
        assert_eq!(kary_to_binary(&chain).tree, bin(&["", "1", "11", "111", "1111"], 4));
    }

    #[test]
    fn padding_is_recorded() {
        let enc = kary_to_binary(&FinTree::full(3, 2));
        assert_eq!((enc.bits, enc.padded_alphabet, enc.source_alphabet), (2, 4, 3));
        assert_eq!(enc.tree.level(2).len(), 3);
        assert!(decode_kary(&enc, &ColorSet::new([], 0), &[1, 1]).unwrap().positions.is_empty());
        assert!(decode_kary(&enc, &ColorSet::new([1], 0), &[1, 1]).is_err());
    }

    #[test]
    fn refine_step_examples() {
        let s = FinTree::full(2, 4);
        let (same, x) = kary_refine_step(&s, &ColorSet::new([], 1), 0, 2).unwrap();
        assert_eq!((same, x), (s.clone(), vec![]));
        let (half, x) = kary_refine_step(&s, &ColorSet::new([2], 1), 0, 2).unwrap();
        assert_eq!(half.level(4).len(), 8);
        assert_eq!(x, vec![3]);
        assert!(kary_refine_step(&s, &ColorSet::new([1], 1), 0, 2).is_err());
        let (a, _) = kary_refine_step(&s, &ColorSet::new([0], 1), 0, 2).unwrap();
        let (ab, _) = kary_refine_step(&a, &ColorSet::new([1], 0), 1, 2).unwrap();
        let direct = s.gamma_restrict(&[0].into(), 1).gamma_restrict(&[1].into(), 0);
        assert_eq!(ab, direct);
    }

    #[test]
    fn decode_assembles_color_msb_first() {
        let enc = kary_to_binary(&FinTree::full(4, 2));
        let h = decode_kary(&enc, &ColorSet::new([1, 3], 0), &[1, 0]).unwrap();
        assert_eq!(h, ColorSet::new([0, 1], 2));
    }
}
