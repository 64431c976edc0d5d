//! Finite truncations of subtrees of `k^{<N}` and the homogeneity notions on them.
//!
//! A [`FinTree`] stores the nodes of a prefix-closed set of words of length at
//! most its horizon, grouped by level. An infinite homogeneous set becomes a
//! set that is homogeneous at every level up to a declared depth.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dyadic::Dyadic;
use crate::error::{invalid, Error, Result};

/// A finite word over an alphabet `[0, k)`.
pub type Word = Vec<u32>;

/// Default cap on `log2` of the number of candidates an exhaustive search may visit.
pub const DEFAULT_SEARCH_LOG2_BUDGET: u32 = 22;

/// True iff `a` is a prefix of `b`.
pub fn is_prefix(a: &[u32], b: &[u32]) -> bool {
    a.len() <= b.len() && b[..a.len()] == *a
}

/// Renders a word as digits (alphabets up to 10) or dot-separated decimals.
pub fn format_word(w: &[u32], alphabet: u32) -> String {
    if alphabet <= 10 {
        w.iter().map(|d| char::from_digit(*d, 10).expect("digit")).collect()
    } else {
        w.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(".")
    }
}

/// Parses a word written by [`format_word`].
pub fn parse_word(s: &str, alphabet: u32) -> Result<Word> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let symbols: Vec<u32> = if alphabet <= 10 {
        s.chars()
            .map(|c| c.to_digit(10).ok_or_else(|| invalid(format!("bad symbol {c:?} in word {s:?}"))))
            .collect::<Result<_>>()?
    } else {
        s.split('.')
            .map(|t| t.parse::<u32>().map_err(|_| invalid(format!("bad symbol {t:?} in word {s:?}"))))
            .collect::<Result<_>>()?
    };
    if let Some(bad) = symbols.iter().find(|d| **d >= alphabet) {
        return Err(invalid(format!("symbol {bad} outside alphabet {alphabet} in word {s:?}")));
    }
    Ok(symbols)
}

/// Prefix-closed finite set of words over `[0, alphabet)` of length at most `horizon`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinTree {
    alphabet: u32,
    horizon: usize,
    levels: Vec<BTreeSet<Word>>,
}

/// Pure predicate form of the tree invariants, usable on untrusted node lists.
pub fn validate_tree(alphabet: u32, horizon: usize, nodes: &[Word]) -> bool {
    FinTree::from_nodes(alphabet, horizon, nodes.iter().cloned()).is_ok()
}

impl FinTree {
    /// The empty tree (no nodes at all).
    pub fn empty(alphabet: u32, horizon: usize) -> Self {
        assert!(alphabet > 0, "alphabet must be positive");
        FinTree { alphabet, horizon, levels: vec![BTreeSet::new(); horizon + 1] }
    }

    /// The full tree `k^{<= horizon}`.
    pub fn full(alphabet: u32, horizon: usize) -> Self {
        Self::from_predicate(alphabet, horizon, |_| true)
    }

    /// The largest tree all of whose nodes (and their prefixes) satisfy `keep`.
    ///
    /// The search only extends accepted nodes, so the result is prefix-closed by
    /// construction even when `keep` is not.
    pub fn from_predicate(alphabet: u32, horizon: usize, mut keep: impl FnMut(&[u32]) -> bool) -> Self {
        let mut tree = FinTree::empty(alphabet, horizon);
        if !keep(&[]) {
            return tree;
        }
        tree.levels[0].insert(Vec::new());
        for len in 0..horizon {
            let mut next = BTreeSet::new();
            for w in &tree.levels[len] {
                for a in 0..alphabet {
                    let mut child = w.clone();
                    child.push(a);
                    if keep(&child) {
                        next.insert(child);
                    }
                }
            }
            tree.levels[len + 1] = next;
        }
        tree
    }

    /// Builds a tree from an explicit node list, rejecting any invariant violation.
    pub fn from_nodes(alphabet: u32, horizon: usize, nodes: impl IntoIterator<Item = Word>) -> Result<Self> {
        if alphabet == 0 {
            return Err(Error::InvalidTree("alphabet must be positive".into()));
        }
        let mut tree = FinTree::empty(alphabet, horizon);
        for w in nodes {
            if w.len() > horizon {
                return Err(Error::InvalidTree(format!(
                    "node {} longer than horizon {horizon}",
                    format_word(&w, alphabet)
                )));
            }
            if let Some(bad) = w.iter().find(|d| **d >= alphabet) {
                return Err(Error::InvalidTree(format!("symbol {bad} outside alphabet {alphabet}")));
            }
            tree.levels[w.len()].insert(w);
        }
        for len in 1..=horizon {
            for w in &tree.levels[len] {
                if !tree.levels[len - 1].contains(&w[..len - 1]) {
                    return Err(Error::InvalidTree(format!(
                        "missing prefix {} of node {}",
                        format_word(&w[..len - 1], alphabet),
                        format_word(w, alphabet)
                    )));
                }
            }
        }
        Ok(tree)
    }

    /// Alphabet size `k`.
    pub fn alphabet(&self) -> u32 {
        self.alphabet
    }

    /// Maximum node length.
    pub fn horizon(&self) -> usize {
        self.horizon
    }

    /// Nodes of length exactly `s` in lexicographic order (empty above the horizon).
    pub fn level(&self, s: usize) -> &BTreeSet<Word> {
        static EMPTY: BTreeSet<Word> = BTreeSet::new();
        self.levels.get(s).unwrap_or(&EMPTY)
    }

    /// Membership test.
    pub fn contains(&self, w: &[u32]) -> bool {
        self.levels.get(w.len()).is_some_and(|l| l.contains(w))
    }

    /// All nodes in length-lexicographic order.
    pub fn nodes(&self) -> impl Iterator<Item = &Word> {
        self.levels.iter().flat_map(|l| l.iter())
    }

    /// Total number of nodes.
    pub fn node_count(&self) -> usize {
        self.levels.iter().map(|l| l.len()).sum()
    }

    /// True iff the tree has no nodes.
    pub fn is_empty(&self) -> bool {
        self.levels[0].is_empty()
    }

    /// True iff every level up to the horizon is nonempty.
    pub fn has_node_per_level(&self) -> bool {
        self.levels.iter().all(|l| !l.is_empty())
    }

    /// Re-checks every invariant; always true for values built through this module.
    pub fn is_valid(&self) -> bool {
        Self::from_nodes(self.alphabet, self.horizon, self.nodes().cloned()).is_ok()
    }

    /// Nodes of length equal to the horizon, lexicographically.
    pub fn paths_at_horizon(&self) -> Vec<Word> {
        self.levels[self.horizon].iter().cloned().collect()
    }

    /// Keeps only nodes with an extension at the horizon.
    pub fn prune(&self) -> FinTree {
        let mut keep: BTreeSet<Word> = BTreeSet::new();
        for p in &self.levels[self.horizon] {
            for n in 0..=p.len() {
                keep.insert(p[..n].to_vec());
            }
        }
        FinTree::from_nodes(self.alphabet, self.horizon, keep).expect("prefixes of paths form a tree")
    }

    /// True iff every node extends to the horizon.
    pub fn is_pruned(&self) -> bool {
        self.prune() == *self
    }

    /// Restriction to nodes of length at most `d`.
    pub fn truncate(&self, d: usize) -> FinTree {
        let d = d.min(self.horizon);
        FinTree { alphabet: self.alphabet, horizon: d, levels: self.levels[..=d].to_vec() }
    }

    /// Nodes of `self` whose prefixes all satisfy `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&[u32]) -> bool) -> FinTree {
        FinTree::from_predicate(self.alphabet, self.horizon, |w| self.contains(w) && keep(w))
    }

    /// `T ∩ Γ^v_F`: nodes carrying value `v` at every position of `positions` they reach.
    pub fn gamma_restrict(&self, positions: &BTreeSet<usize>, v: u32) -> FinTree {
        self.filter(|w| positions.iter().all(|&i| i >= w.len() || w[i] == v))
    }

    /// Minimum over all levels `s` of `|T^s| / 2^s`; binary trees only.
    pub fn min_level_density(&self) -> Result<Dyadic> {
        if self.alphabet != 2 {
            return Err(invalid(format!("density needs alphabet 2, got {}", self.alphabet)));
        }
        Ok((0..=self.horizon).map(|s| self.level_density(s)).min().expect("at least level 0"))
    }

    /// `|T^s| / 2^s` for a binary tree.
    pub fn level_density(&self, s: usize) -> Dyadic {
        Dyadic::from_count(self.level(s).len() as u128, s as u32)
    }

    /// Interchange document for this tree.
    pub fn to_doc(&self) -> TreeDoc {
        TreeDoc {
            alphabet: self.alphabet,
            horizon: self.horizon,
            nodes: self.nodes().map(|w| format_word(w, self.alphabet)).collect(),
        }
    }

    /// Parses an interchange document, validating every invariant.
    pub fn from_doc(doc: &TreeDoc) -> Result<FinTree> {
        let nodes = doc.nodes.iter().map(|s| parse_word(s, doc.alphabet)).collect::<Result<Vec<_>>>()?;
        FinTree::from_nodes(doc.alphabet, doc.horizon, nodes)
    }

    /// Canonical JSON text of the interchange document.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("tree documents serialize")
    }

    /// Reads the JSON interchange format.
    pub fn from_json(text: &str) -> Result<FinTree> {
        let doc: TreeDoc = serde_json::from_str(text).map_err(|e| invalid(format!("tree document: {e}")))?;
        Self::from_doc(&doc)
    }
}

impl fmt::Display for FinTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self
            .nodes()
            .map(|w| if w.is_empty() { "ε".to_string() } else { format_word(w, self.alphabet) })
            .collect();
        write!(f, "{{{}}}", words.join(","))
    }
}

/// Serialized form `{alphabet, horizon, nodes}` with nodes in length-lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDoc {
    pub alphabet: u32,
    pub horizon: usize,
    pub nodes: Vec<String>,
}

/// A set of positions paired with one color.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ColorSet {
    pub positions: BTreeSet<usize>,
    pub color: u32,
}

impl ColorSet {
    /// Builds a color set from any collection of positions.
    pub fn new(positions: impl IntoIterator<Item = usize>, color: u32) -> Self {
        ColorSet { positions: positions.into_iter().collect(), color }
    }

    /// The constant partial function with value `color` on `positions`.
    pub fn to_partial_hom(&self) -> PartialHom {
        PartialHom { entries: self.positions.iter().map(|&p| (p, self.color)).collect() }
    }
}

impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ps: Vec<String> = self.positions.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}} color {}", ps.join(","), self.color)
    }
}

/// A finite partial function from positions to symbols.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PartialHom {
    pub entries: BTreeMap<usize, u32>,
}

impl PartialHom {
    /// Builds a partial function from `(position, value)` pairs; later pairs win.
    pub fn new(entries: impl IntoIterator<Item = (usize, u32)>) -> Self {
        PartialHom { entries: entries.into_iter().collect() }
    }

    /// The restriction of a word to a set of positions.
    pub fn restriction(w: &[u32], domain: impl IntoIterator<Item = usize>) -> Self {
        PartialHom::new(domain.into_iter().filter(|&i| i < w.len()).map(|i| (i, w[i])))
    }

    /// Number of domain elements below `n`.
    pub fn domain_below(&self, n: usize) -> usize {
        self.entries.range(..n).count()
    }
}

/// True iff `σ(i) = H.color` for every `i ∈ H` with `i < |σ|`.
pub fn word_homogeneous(h: &ColorSet, sigma: &[u32]) -> bool {
    h.positions.iter().take_while(|&&i| i < sigma.len()).all(|&i| sigma[i] == h.color)
}

/// True iff `σ(n) = h(n)` for every `n ∈ dom(h)` with `n < |σ|`.
pub fn word_func_homogeneous(h: &PartialHom, sigma: &[u32]) -> bool {
    h.entries.range(..sigma.len()).all(|(&i, &v)| sigma[i] == v)
}

/// True iff every level `ℓ <= d` of `T` contains a node for which `H` is homogeneous.
pub fn tree_homogeneous_to_depth(t: &FinTree, h: &ColorSet, d: usize) -> bool {
    d <= t.horizon() && (0..=d).all(|l| t.level(l).iter().any(|w| word_homogeneous(h, w)))
}

/// Partial-function analogue of [`tree_homogeneous_to_depth`].
pub fn func_homogeneous_to_depth(t: &FinTree, h: &PartialHom, d: usize) -> bool {
    d <= t.horizon() && (0..=d).all(|l| t.level(l).iter().any(|w| word_func_homogeneous(h, w)))
}

fn check_search_budget(what: &'static str, log2: u32, budget_log2: u32) -> Result<()> {
    if log2 > budget_log2 {
        return Err(Error::Budget { what, needed: 1u64 << log2.min(63), limit: 1u64 << budget_log2.min(63) });
    }
    Ok(())
}

/// Every color set with positions in `[0, bound)` homogeneous for `T` up to depth `d`.
///
/// Output is ordered lexicographically by position sequence, then by color.
/// The search costs `O(2^bound · k · |T^d|)`: a homogeneous set at level `d`
/// is witnessed by a single node whose prefixes cover the lower levels, so
/// the feasible sets for each color are the subsets of the agreement masks of
/// the level-`d` nodes, computed by a downward closure over `2^bound` masks.
pub fn enumerate_homogeneous(t: &FinTree, d: usize, bound: usize, budget_log2: u32) -> Result<Vec<ColorSet>> {
    check_search_budget("homogeneous-set enumeration (2^bound)", bound as u32, budget_log2)?;
    if bound > 63 || d > t.horizon() {
        return Err(invalid(format!("bound {bound} or depth {d} out of range")));
    }
    let full: u64 = if bound == 0 { 0 } else { (1u64 << bound) - 1 };
    let free: u64 = (d.min(bound)..bound).fold(0, |m, i| m | (1 << i));
    let mut found: BTreeSet<(Vec<usize>, u32)> = BTreeSet::new();
    for c in 0..t.alphabet() {
        let mut feasible = vec![false; 1usize << bound];
        for w in t.level(d) {
            let mut mask = free;
            for (i, &a) in w.iter().enumerate().take(bound) {
                if a == c {
                    mask |= 1 << i;
                }
            }
            feasible[mask as usize] = true;
        }
        for bit in 0..bound {
            for m in 0..=full {
                if m & (1 << bit) != 0 && feasible[m as usize] {
                    feasible[(m & !(1 << bit)) as usize] = true;
                }
            }
        }
        for m in 0..=full {
            if feasible[m as usize] {
                found.insert(((0..bound).filter(|i| m & (1 << i) != 0).collect(), c));
            }
        }
    }
    Ok(found.into_iter().map(|(p, c)| ColorSet::new(p, c)).collect())
}

/// Every partial function with domain inside `[0, d)` homogeneous for `T` up to depth `d`.
///
/// These are exactly the restrictions `σ↾D` of level-`d` nodes to subsets
/// `D ⊆ [0, d)`; the search costs `O(|T^d| · 2^d)`.
pub fn enumerate_func_homogeneous(t: &FinTree, d: usize, budget_log2: u32) -> Result<Vec<PartialHom>> {
    check_search_budget("partial-function enumeration (2^depth)", d as u32, budget_log2)?;
    if d > t.horizon() {
        return Err(invalid(format!("depth {d} above horizon {}", t.horizon())));
    }
    let mut out: BTreeSet<PartialHom> = BTreeSet::new();
    for w in t.level(d) {
        for m in 0u64..(1u64 << d) {
            out.insert(PartialHom::restriction(w, (0..d).filter(|i| m & (1 << i) != 0)));
        }
    }
    Ok(out.into_iter().collect())
}

/// Brute-force oracle: all `(positions ⊆ [0,bound), color)` filtered by the definition.
///
/// Kept independent of [`enumerate_homogeneous`] so the two can be cross-checked.
pub fn enumerate_homogeneous_naive(t: &FinTree, d: usize, bound: usize) -> Vec<ColorSet> {
    let mut out = Vec::new();
    for m in 0u64..(1u64 << bound) {
        for c in 0..t.alphabet() {
            let h = ColorSet::new((0..bound).filter(|i| m & (1 << i) != 0), c);
            if tree_homogeneous_to_depth(t, &h, d) {
                out.push(h);
            }
        }
    }
    out.sort_by(|a, b| {
        let pa: Vec<usize> = a.positions.iter().copied().collect();
        let pb: Vec<usize> = b.positions.iter().copied().collect();
        pa.cmp(&pb).then(a.color.cmp(&b.color))
    });
    out
}
