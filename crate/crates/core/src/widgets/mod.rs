//! Graph gadgets that turn 2-branching clause sets into 3-coloring instances.

pub mod compile;
pub mod gadgets;
pub mod lemmas;
pub mod table;

pub use compile::{compile, decode_homogeneous, decode_vertex, find_normalized_coloring, literal_vertex, CompiledGraph, DecodeBudget, PlacedClause};
pub use gadgets::{build_d, build_r, build_u, AuxTag, DGadget, Gadget, SpineStep, VertexRole};
pub use lemmas::{check_widget_lemmas, ClauseCheck, LemmaReport, MutationCheck};
pub use table::{resolve, Conclusion};
