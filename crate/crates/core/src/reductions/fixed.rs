//! Reduction of path-finding to homogeneous sets of one fixed color.
//!
//! Position `i` of a node of the image tree records whether the `i`-th word in
//! length-lexicographic order is a prefix of the source node. A set that is
//! homogeneous with color 0 therefore names a chain of prefixes of one node.

use crate::error::{invalid, precondition, Error, Result};
use crate::tree::{is_prefix, tree_homogeneous_to_depth, ColorSet, FinTree, Word};

/// The length-lexicographic enumeration `τ₀, τ₁, …` of `k^{<N}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LengthLexEnum {
    alphabet: u32,
}

impl LengthLexEnum {
    /// Enumeration of words over `[0, alphabet)`, `alphabet ≥ 2`.
    pub fn new(alphabet: u32) -> Self {
        assert!(alphabet >= 2, "length-lexicographic enumeration needs at least two symbols");
        LengthLexEnum { alphabet }
    }

    /// Alphabet size.
    pub fn alphabet(&self) -> u32 {
        self.alphabet
    }

    /// Number of words of length `< n`, which is the index of `0^n`.
    pub fn offset(&self, n: usize) -> u64 {
        let k = self.alphabet as u64;
        (k.pow(n as u32) - 1) / (k - 1)
    }

    /// Index of a word.
    pub fn index(&self, w: &[u32]) -> u64 {
        let value = w.iter().fold(0u64, |acc, &a| acc * self.alphabet as u64 + a as u64);
        self.offset(w.len()) + value
    }

    /// The word `τ_i`.
    pub fn word(&self, i: u64) -> Word {
        let k = self.alphabet as u64;
        let mut n = 0;
        while self.offset(n + 1) <= i {
            n += 1;
        }
        let mut value = i - self.offset(n);
        let mut w = vec![0; n];
        for slot in w.iter_mut().rev() {
            *slot = (value % k) as u32;
            value /= k;
        }
        w
    }
}

/// Builds `T` with `T^n = {σ_τ : τ ∈ S^n}` where `σ_τ(i) = 0` iff `τ_i ⪯ τ`.
pub fn fixed_color_tree(s: &FinTree) -> Result<FinTree> {
    if s.alphabet() != 2 {
        return Err(invalid("fixed-color reduction needs a binary source tree"));
    }
    let e = LengthLexEnum::new(2);
    let table: Vec<Word> = (0..s.horizon() as u64).map(|i| e.word(i)).collect();
    let nodes = s
        .nodes()
        .map(|tau| (0..tau.len()).map(|i| u32::from(!is_prefix(&table[i], tau))).collect::<Word>());
    FinTree::from_nodes(2, s.horizon(), nodes)
}

/// Recovers a node of `S` as the union of the words named by `H`.
///
/// `t` must be the output of [`fixed_color_tree`].
pub fn decode_fixed_color(t: &FinTree, h: &ColorSet) -> Result<Word> {
    if h.color != 0 {
        return Err(precondition(format!("fixed-color decoding needs color 0, got {}", h.color)));
    }
    if !tree_homogeneous_to_depth(t, h, t.horizon()) {
        return Err(Error::NotHomogeneous(format!("{h} for the fixed-color tree")));
    }
    let e = LengthLexEnum::new(2);
    let mut union: Word = Vec::new();
    for &i in &h.positions {
        let tau = e.word(i as u64);
        if is_prefix(&union, &tau) {
            union = tau;
        } else if !is_prefix(&tau, &union) {
            return Err(precondition(format!("words named by {h} do not form a chain")));
        }
    }
    Ok(union)
}

/// Length `n` of an all-ones run that no node `σ` of the image can be followed by.
///
/// With `m` least such that `2^m - 1 ≥ |σ|`, the run covers every index of a
/// length-`m` word, which would force the source node to be shorter than `m`.
pub fn forbidden_ones_run(len: usize) -> usize {
    let mut m = 0;
    while (1usize << m) - 1 < len {
        m += 1;
    }
    (1usize << (m + 1)) - 1 - len
}
