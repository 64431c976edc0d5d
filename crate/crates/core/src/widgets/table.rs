//! What the color of a single vertex says about the literal colors.
//!
//! Conclusions are stated for colorings that give each truth vertex its own
//! number as color. Inside `U_{x,y,z}(ℓ',b,u)` the vertex `ℓ' = x` codes a
//! false literal and `ℓ' = y` a true one, and the outer permuter maps the
//! literal colors 0 and 1 onto exactly these two, so every entry can be
//! phrased as a color of the literal-coding vertex `ℓ_i`.

use serde::{Deserialize, Serialize};

use crate::widgets::gadgets::{r_triple, u_triple, AuxTag, SpineStep};

/// What one color of one vertex forces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Conclusion {
    /// The literal-coding vertex `vertex` has color `color ∈ {0,1}`.
    Literal { vertex: usize, color: u32 },
    /// Only the weaker fact that `vertex` does not have color `color`.
    NotColor { vertex: usize, color: u32 },
    /// No proper coloring gives the vertex this color.
    Impossible,
}

/// The three conclusions of a vertex, indexed by its color.
pub type Entry = [Conclusion; 3];

/// The entry of a literal-coding vertex: its own color, and never 2.
pub fn literal_entry(vertex: usize) -> Entry {
    [Conclusion::Literal { vertex, color: 0 }, Conclusion::Literal { vertex, color: 1 }, Conclusion::Impossible]
}

fn entry_by(assign: [(u32, Conclusion); 3]) -> Entry {
    let mut e = [Conclusion::Impossible; 3];
    for (c, concl) in assign {
        e[c as usize] = concl;
    }
    e
}

/// Entries for every auxiliary vertex of a spine step, in allocation order.
pub fn step_entries(step: &SpineStep) -> Vec<(usize, AuxTag, Entry)> {
    let l = step.literal;
    let f = Conclusion::Literal { vertex: l, color: 0 };
    let t = Conclusion::Literal { vertex: l, color: 1 };
    let imp = Conclusion::Impossible;
    let lit = |c: u32| Conclusion::Literal { vertex: l, color: c };
    let [x, y, z] = u_triple(step.depth);
    let mut out = Vec::new();
    if let (Some((lp, v)), Some([rx, ry, rz])) = (step.outer, r_triple(step.depth)) {
        out.push((lp, AuxTag::LPrime, entry_by([(x, f), (y, t), (z, imp)])));
        out.push((v, AuxTag::OuterV, entry_by([(rz, lit(rx)), (rx, lit(ry)), (ry, imp)])));
    }
    let w = step.inner;
    out.push((w.lbar, AuxTag::LBar, entry_by([(x, t), (y, f), (z, imp)])));
    out.push((w.r, AuxTag::R, entry_by([(x, imp), (y, f), (z, t)])));
    out.push((w.v, AuxTag::InnerV, entry_by([(x, t), (y, imp), (z, f)])));
    let not_b = Conclusion::NotColor { vertex: step.b, color: z };
    out.push((w.d, AuxTag::D, entry_by([(x, t), (y, f), (z, not_b)])));
    out.push((w.u, AuxTag::U, entry_by([(x, f), (y, t), (z, f)])));
    out
}

/// Turns a `NotColor` conclusion into a literal color using the entry of the constrained vertex.
///
/// The constrained vertex `b` avoids color `c`; if every remaining possible
/// color of `b` forces the same literal color, that is the conclusion.
pub fn resolve(concl: Conclusion, lookup: impl Fn(usize) -> Option<Entry>) -> Option<(usize, u32)> {
    match concl {
        Conclusion::Literal { vertex, color } => Some((vertex, color)),
        Conclusion::Impossible => None,
        Conclusion::NotColor { vertex, color } => {
            let entry = lookup(vertex)?;
            let mut found: Option<(usize, u32)> = None;
            for (c, e) in entry.iter().enumerate() {
                if c as u32 == color {
                    continue;
                }
                match *e {
                    Conclusion::Impossible => {}
                    Conclusion::Literal { vertex, color } => match found {
                        None => found = Some((vertex, color)),
                        Some(prev) if prev == (vertex, color) => {}
                        Some(_) => return None,
                    },
                    Conclusion::NotColor { .. } => return None,
                }
            }
            found
        }
    }
}
