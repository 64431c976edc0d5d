//! Tree-to-tree and tree-to-tournament reductions, each paired with a decoder.
//!
//! Every decoder re-checks its precondition on the image solution and refuses
//! data that does not satisfy it, so a bad solution never decodes silently.

pub mod chain;
pub mod coloring;
pub mod fixed;
pub mod kary;
pub mod localize;
pub mod packed;
pub mod tournament;

pub use chain::{chain_code_tree, decode_chain_code, ChainCode};
pub use coloring::{decode_localized_coloring, localize_coloring, Coloring};
pub use fixed::{decode_fixed_color, fixed_color_tree, LengthLexEnum};
pub use kary::{decode_kary, kary_refine_step, kary_to_binary, KaryEncoding};
pub use localize::{decode_localized, localize_positive_measure, localize_tree, Localized};
pub use packed::{decode_packed, expand, pack_redundant, OrderFunction, Packed, USequence};
pub use tournament::{
    greedy_transitive, homog_from_transitive, stability_report, tournament_from_tree, transitive_subtournament,
    Tournament, TournamentCase,
};
