//! Finite-scale workbench for reductions between Ramsey-type tree, formula and graph problems.
//!
//! Infinite trees, graphs and formula lists are replaced by finite
//! truncations with an explicit horizon. Every reduction comes with a decoder
//! that maps solutions of the image instance back to the source, and every
//! decoder is checked against a brute-force oracle living next to it.

pub mod adversarial;
pub mod dyadic;
pub mod error;
pub mod gen;
pub mod graph;
pub mod reductions;
pub mod roundtrip;
pub mod sat;
pub mod tree;
pub mod widgets;

pub use dyadic::Dyadic;
pub use error::{Error, Result};
pub use tree::{ColorSet, FinTree, PartialHom, Word};
