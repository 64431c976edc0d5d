//! The three gadget families and the clause spine they are chained into.
//!
//! `R_{x↦y,y↦z}(a,u)` permutes colors, `U_{x,y,z}(ℓ,b,u)` performs one
//! disjunction step, and `D(ℓ₀,…,ℓ_{n-1})` chains `U` gadgets into a clause.
//! The spine builder is shared by the standalone `D` gadget and by the
//! compiler, so both produce the same edges and the same decode table.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::graph::Graph;

/// What a vertex stands for in a compiled graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VertexRole {
    /// One of the three truth-value vertices.
    Truth(u32),
    /// The literal-coding vertex `a_i` or `¬a_i`.
    Literal { atom: usize, positive: bool },
    /// An auxiliary vertex of the spine step `step`, which sits at clause position `depth`.
    Aux { step: usize, depth: usize, tag: AuxTag },
}

/// Position of an auxiliary vertex inside one spine step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum AuxTag {
    /// `ℓ'_i`, the output of the outer color permuter.
    LPrime,
    /// The internal vertex of the outer permuter `R^i(ℓ_i, ℓ'_i)`.
    OuterV,
    /// `ℓ̄` of the `U` gadget.
    LBar,
    /// `r`, the output of the permuter inside `U`.
    R,
    /// The internal vertex of the permuter inside `U`.
    InnerV,
    /// `d` of the `U` gadget.
    D,
    /// `u_i`, the output of the `U` gadget.
    U,
}

impl AuxTag {
    /// Short ASCII name used in labels and documents.
    pub fn name(&self) -> &'static str {
        match self {
            AuxTag::LPrime => "lp",
            AuxTag::OuterV => "vr",
            AuxTag::LBar => "lbar",
            AuxTag::R => "r",
            AuxTag::InnerV => "v",
            AuxTag::D => "d",
            AuxTag::U => "u",
        }
    }
}

impl fmt::Display for VertexRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexRole::Truth(c) => write!(f, "T{c}"),
            VertexRole::Literal { atom, positive: true } => write!(f, "a{atom}"),
            VertexRole::Literal { atom, positive: false } => write!(f, "~a{atom}"),
            VertexRole::Aux { step, depth, tag } => write!(f, "{}{depth}@s{step}", tag.name()),
        }
    }
}

/// A gadget graph with named vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gadget {
    pub graph: Graph,
    /// Vertex names such as `x`, `lbar` or `d3`.
    pub names: BTreeMap<String, usize>,
    /// The interface vertices, in the order of the gadget's parameters.
    pub interface: Vec<usize>,
}

impl Gadget {
    /// The id of a named vertex.
    pub fn vertex(&self, name: &str) -> Option<usize> {
        self.names.get(name).copied()
    }

    /// Labels keyed by vertex id, for DOT export.
    pub fn labels(&self) -> BTreeMap<usize, String> {
        self.names.iter().map(|(n, &v)| (v, n.clone())).collect()
    }

    pub(crate) fn id(&self, name: &str) -> usize {
        self.names[name]
    }
}

pub(crate) fn edge(g: &mut Graph, u: usize, v: usize) {
    g.add_edge(u, v).expect("gadget vertices are distinct");
}

pub(crate) fn triangle(g: &mut Graph, a: usize, b: usize, c: usize) {
    edge(g, a, b);
    edge(g, b, c);
    edge(g, c, a);
}

/// Adds `R_{x↦y,y↦z}(a,u)` with internal vertex `v`.
pub(crate) fn add_r(g: &mut Graph, [x, y, z]: [usize; 3], a: usize, u: usize, v: usize) {
    triangle(g, x, y, z);
    triangle(g, a, u, v);
    edge(g, x, u);
    edge(g, y, v);
    edge(g, z, a);
}

/// The five internal vertices of a `U` gadget.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct UVertices {
    pub lbar: usize,
    pub r: usize,
    pub v: usize,
    pub d: usize,
    pub u: usize,
}

/// Adds `U_{x,y,z}(ℓ,b,u)`.
pub(crate) fn add_u(g: &mut Graph, xyz: [usize; 3], l: usize, b: usize, w: UVertices) {
    let [_, _, z] = xyz;
    triangle(g, xyz[0], xyz[1], z);
    triangle(g, z, l, w.lbar);
    edge(g, w.lbar, w.u);
    add_r(g, xyz, l, w.r, w.v);
    edge(g, w.r, w.u);
    edge(g, l, w.d);
    edge(g, w.d, w.u);
    edge(g, b, w.d);
}

/// `R_{x↦y,y↦z}(a,u)` on the given ids; the internal vertex is `v`.
pub fn build_r(x: usize, y: usize, z: usize, a: usize, u: usize, v: usize) -> Result<Gadget> {
    distinct(&[x, y, z, a, u, v])?;
    let mut graph = Graph::new();
    add_r(&mut graph, [x, y, z], a, u, v);
    let names = [("x", x), ("y", y), ("z", z), ("a", a), ("u", u), ("v", v)];
    Ok(Gadget { graph, names: named(&names), interface: vec![x, y, z, a, u] })
}

/// `U_{x,y,z}(ℓ,b,u)`; internal vertices take the ids `first`, `first+1`, … in the order `ℓ̄, r, v, d`.
pub fn build_u(x: usize, y: usize, z: usize, l: usize, b: usize, u: usize, first: usize) -> Result<Gadget> {
    let w = UVertices { lbar: first, r: first + 1, v: first + 2, d: first + 3, u };
    distinct(&[x, y, z, l, b, w.lbar, w.r, w.v, w.d, u])?;
    let mut graph = Graph::new();
    add_u(&mut graph, [x, y, z], l, b, w);
    let names = [
        ("x", x),
        ("y", y),
        ("z", z),
        ("l", l),
        ("b", b),
        ("u", u),
        ("lbar", w.lbar),
        ("r", w.r),
        ("v", w.v),
        ("d", w.d),
    ];
    Ok(Gadget { graph, names: named(&names), interface: vec![x, y, z, l, b, u] })
}

/// The truth vertices `(x,y,z)` of `U^i` in a clause spine.
pub fn u_triple(i: usize) -> [u32; 3] {
    match i % 3 {
        1 => [2, 0, 1],
        2 => [1, 2, 0],
        _ => [0, 1, 2],
    }
}

/// The truth vertices `(x,y,z)` of the outer permuter `R^i`, absent when `i ≡ 0 mod 3`.
pub fn r_triple(i: usize) -> Option<[u32; 3]> {
    match i % 3 {
        1 => Some([1, 0, 2]),
        2 => Some([0, 1, 2]),
        _ => None,
    }
}

/// The truth vertex joined to `u_{n-1}` at the end of a clause of length `n`.
pub fn terminal_vertex(n: usize) -> u32 {
    [0, 2, 1][(n - 1) % 3]
}

/// One link `R^i(ℓ_i,ℓ'_i)` followed by `U^i(ℓ'_i,u_{i-1},u_i)` of a clause spine.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpineStep {
    /// Clause position `i ≥ 1`.
    pub depth: usize,
    /// The literal-coding vertex `ℓ_i`.
    pub literal: usize,
    /// The vertex `u_{i-1}`, which is `ℓ₀` when `i = 1`.
    pub b: usize,
    /// `(ℓ'_i, v)` of the outer permuter, when there is one.
    pub outer: Option<(usize, usize)>,
    pub inner: UVertices,
}

impl SpineStep {
    /// `ℓ'_i`, which is `ℓ_i` itself when there is no outer permuter.
    pub fn l_prime(&self) -> usize {
        self.outer.map_or(self.literal, |(lp, _)| lp)
    }

    /// Every auxiliary vertex of the step with its tag, in allocation order.
    pub fn aux_vertices(&self) -> Vec<(usize, AuxTag)> {
        let mut out = Vec::new();
        if let Some((lp, v)) = self.outer {
            out.push((lp, AuxTag::LPrime));
            out.push((v, AuxTag::OuterV));
        }
        let w = self.inner;
        out.extend([(w.lbar, AuxTag::LBar), (w.r, AuxTag::R), (w.v, AuxTag::InnerV), (w.d, AuxTag::D), (w.u, AuxTag::U)]);
        out
    }
}

/// Adds the spine step at position `i ≥ 1`, allocating fresh ids from `next`.
///
/// Fresh ids are taken in the order `ℓ'_i, v` (when `i ≢ 0 mod 3`), then
/// `ℓ̄, r, v, d, u_i`. The truth vertices must be the ids 0, 1 and 2.
pub(crate) fn add_step(g: &mut Graph, next: &mut usize, i: usize, literal: usize, b: usize) -> SpineStep {
    let mut fresh = || {
        let v = *next;
        *next += 1;
        v
    };
    edge(g, 2, literal);
    let outer = r_triple(i).map(|[x, y, z]| {
        let lp = fresh();
        let v = fresh();
        add_r(g, [x as usize, y as usize, z as usize], literal, lp, v);
        (lp, v)
    });
    let inner = UVertices { lbar: fresh(), r: fresh(), v: fresh(), d: fresh(), u: fresh() };
    let [x, y, z] = u_triple(i);
    let l_prime = outer.map_or(literal, |(lp, _)| lp);
    add_u(g, [x as usize, y as usize, z as usize], l_prime, b, inner);
    SpineStep { depth: i, literal, b, outer, inner }
}

/// A clause widget `D(ℓ₀,…,ℓ_{n-1})` together with its spine steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DGadget {
    pub gadget: Gadget,
    /// Steps for positions `1..n`.
    pub steps: Vec<SpineStep>,
    /// The literal-coding vertices `ℓ₀,…,ℓ_{n-1}`.
    pub literals: Vec<usize>,
}

/// `D(ℓ₀,…,ℓ_{n-1})` with truth vertices 0, 1, 2, literal vertices `3..3+n` and fresh ids after that.
pub fn build_d(n: usize) -> Result<DGadget> {
    if n == 0 {
        return Err(invalid("a clause widget needs at least one literal"));
    }
    let mut graph = Graph::new();
    triangle(&mut graph, 0, 1, 2);
    let literals: Vec<usize> = (3..3 + n).collect();
    let mut names: BTreeMap<String, usize> = (0..3).map(|c| (c.to_string(), c)).collect();
    for (i, &l) in literals.iter().enumerate() {
        edge(&mut graph, 2, l);
        names.insert(format!("l{i}"), l);
    }
    let mut next = 3 + n;
    let mut steps = Vec::new();
    let mut b = literals[0];
    for (i, &l) in literals.iter().enumerate().skip(1) {
        let step = add_step(&mut graph, &mut next, i, l, b);
        for (v, tag) in step.aux_vertices() {
            names.insert(format!("{}{i}", tag.name()), v);
        }
        b = step.inner.u;
        steps.push(step);
    }
    edge(&mut graph, b, terminal_vertex(n) as usize);
    let mut interface = vec![0, 1, 2];
    interface.extend(&literals);
    Ok(DGadget { gadget: Gadget { graph, names, interface }, steps, literals })
}

fn named(pairs: &[(&str, usize)]) -> BTreeMap<String, usize> {
    pairs.iter().map(|(n, v)| (n.to_string(), *v)).collect()
}

fn distinct(ids: &[usize]) -> Result<()> {
    let mut seen = ids.to_vec();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != ids.len() {
        return Err(invalid(format!("gadget vertex ids {ids:?} are not distinct")));
    }
    Ok(())
}
