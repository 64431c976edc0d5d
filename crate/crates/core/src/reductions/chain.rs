//! Chain coding: paths of `T` become homogeneous partial functions of `S`.
//!
//! A node `σ` of `S` of length `n` lists the indices of `τ↾0, τ↾1, …, τ↾(n-1)`
//! for some `τ ∈ T` of length `n-1`, so every value of a homogeneous function
//! names a prefix of one path. For a finite-branching source, `S` is bounded
//! by `g(n)`, the number of words of length at most `n`.

use crate::error::{invalid, precondition, Error, Result};
use crate::reductions::fixed::LengthLexEnum;
use crate::tree::{func_homogeneous_to_depth, is_prefix, FinTree, PartialHom, Word};

/// The chain-coded tree and its bounding function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainCode {
    pub tree: FinTree,
    pub enumeration: LengthLexEnum,
    /// `bound[n]`: every word of length `n` has index below `bound[n]`.
    pub bound: Vec<u64>,
}

/// Largest source alphabet/horizon pair accepted, keeping symbols within `u32`.
const MAX_CODE_ALPHABET: u64 = 1 << 20;

/// Builds `S` over the alphabet of word indices of length at most the source horizon.
pub fn chain_code_tree(t: &FinTree) -> Result<ChainCode> {
    if t.alphabet() < 2 {
        return Err(invalid("chain coding needs at least two source symbols"));
    }
    let e = LengthLexEnum::new(t.alphabet());
    let d = t.horizon();
    let bound: Vec<u64> = (0..=d).map(|n| e.offset(n + 1)).collect();
    let alphabet = bound[d];
    if alphabet > MAX_CODE_ALPHABET {
        return Err(Error::Budget { what: "chain-code alphabet", needed: alphabet, limit: MAX_CODE_ALPHABET });
    }
    let mut nodes: Vec<Word> = vec![Vec::new()];
    for tau in t.nodes() {
        nodes.push((0..=tau.len()).map(|i| e.index(&tau[..i]) as u32).collect());
    }
    let tree = FinTree::from_nodes(alphabet as u32, d + 1, nodes)?;
    Ok(ChainCode { tree, enumeration: e, bound })
}

/// Recovers a node of `T` as the union of the words named by `h`.
pub fn decode_chain_code(code: &ChainCode, source: &FinTree, h: &PartialHom) -> Result<Word> {
    if !func_homogeneous_to_depth(&code.tree, h, code.tree.horizon()) {
        return Err(Error::NotHomogeneous("partial function for the chain-coded tree".into()));
    }
    let mut union: Word = Vec::new();
    for &v in h.entries.values() {
        let tau = code.enumeration.word(v as u64);
        if is_prefix(&union, &tau) {
            union = tau;
        } else if !is_prefix(&tau, &union) {
            return Err(precondition("values of h do not name a chain"));
        }
    }
    if !source.contains(&union) {
        return Err(precondition("decoded word is not a node of the source tree"));
    }
    Ok(union)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::parse_word;

    #[test]
    fn full_binary_level_sizes() {
        let code = chain_code_tree(&FinTree::full(2, 2)).unwrap();
        let sizes: Vec<usize> = (0..=3).map(|n| code.tree.level(n).len()).collect();
        assert_eq!(sizes, vec![1, 1, 2, 4]);
        assert_eq!(code.bound, vec![1, 3, 7]);
        assert_eq!(code.tree.alphabet(), 7);
    }

    #[test]
    fn chain_source_gives_chain() {
        let t = FinTree::from_nodes(2, 2, ["", "1", "11"].iter().map(|s| parse_word(s, 2).unwrap())).unwrap();
        let code = chain_code_tree(&t).unwrap();
        assert!((0..=3).all(|n| code.tree.level(n).len() == 1));
        let path = code.tree.paths_at_horizon().remove(0);
        assert_eq!(path, vec![0, 2, 6]);
        let h = PartialHom::restriction(&path, [0, 2]);
        assert_eq!(decode_chain_code(&code, &t, &h).unwrap(), vec![1, 1]);
        assert_eq!(decode_chain_code(&code, &t, &PartialHom::default()).unwrap(), Vec::<u32>::new());
        assert!(decode_chain_code(&code, &t, &PartialHom::new([(1, 1)])).is_err());
    }
}
