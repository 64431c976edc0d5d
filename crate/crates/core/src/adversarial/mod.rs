//! Finite-adversary simulations: priority and measure constructions of
//! bipartite graphs, bad-set counting, greedy homogeneous sets and
//! prediction-avoiding trees.
//!
//! Adversaries are explicit finite schedules and tables, and every limit
//! statement is replaced by a count up to a stated horizon.

pub mod avoidance;
pub mod claims;
pub mod measure;
pub mod priority;

pub use avoidance::{avoidance_tree, defeats, Prediction, SubsetCode};
pub use claims::{bad_set, greedy_homogeneous, restricted_density, GreedyResult, GreedyStep};
pub use measure::{exact_measure, measure_build, Comparison, MeasureRun, OracleAdversary, RequirementReport, TypeTwo};
pub use priority::{defeat_certificate, priority_build, verify_defeated, AdversarySchedule, Attention, PairEvent, PriorityRun};
