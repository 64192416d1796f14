//! Exact maximum-stable-set structure of small graphs.
//!
//! Graphs have at most 64 vertices and are stored as bitset adjacency rows.
//! The crate computes the stability number `α`, the core (intersection of all
//! maximum stable sets) and its size `ξ`, maximum matchings, the
//! König-Egerváry property, quasi-regularizability with obstructions, and
//! `α⁺`-stability. The [`theorems`] module states known structural results as
//! executable predicates and [`verify`] runs them over graph corpora.
//!
//! ```
//! use stablecore::{core, parse_graph6_line, stability_number};
//!
//! let c4 = parse_graph6_line("Cl", 1).unwrap();
//! assert_eq!(stability_number(&c4), 2);
//! assert!(core(&c4).is_empty());
//! ```

pub mod analysis;
pub mod cli;
pub mod error;
pub mod format;
pub mod generators;
pub mod graph;
pub mod matching;
pub mod quasi_reg;
pub mod set;
pub mod stable;
pub mod theorems;
pub mod verify;

pub use analysis::{AnalysisReport, OmegaCount};
pub use error::{Error, Result};
pub use format::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6, parse_graph6_line};
pub use graph::{Bipartiteness, Bipartition, Graph};
pub use matching::{
    can_match_into, hall_condition_on_core, is_koenig_egervary, matching_number, maximum_matching,
    MatchInto, MatchingReport,
};
pub use quasi_reg::{canonical_obstruction, is_quasi_regularizable_fast, is_quasi_regularizable_oracle};
pub use set::{VertexSet, MAX_VERTICES};
pub use stable::{
    berge_is_maximum, core, enumerate_maximum_stable_sets, maximum_stable_set,
    min_deficient_stable_set, stability_number, xi, BergeVerdict, Obstruction, Omega,
};
pub use theorems::{classify, run_suite, AlphaPlusClass, TheoremVerdict};
