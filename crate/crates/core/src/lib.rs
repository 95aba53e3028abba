//! Fairness-aware maximal clique enumeration in vertex-attributed graphs.
//!
//! Three models are supported, all parameterised by a per-attribute
//! threshold `k`:
//!
//! * weak: maximal cliques with at least `k` vertices of every attribute;
//! * strong: cliques whose attribute counts are all equal (and at least `k`),
//!   maximal among such cliques;
//! * relative: counts at least `k` and pairwise within `delta`, maximal among
//!   such cliques.
//!
//! ```
//! use fairclique::generate::fixture_f2;
//! use fairclique::{sfc_enum, OrderingKind};
//!
//! let g = fixture_f2();
//! let strong = sfc_enum(&g, 3, OrderingKind::Auto).unwrap();
//! assert_eq!(strong.len(), 4);
//! ```

pub mod cliques;
pub mod coloring;
pub mod enumerate;
pub mod error;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod ordering;
pub mod pruning;
pub mod stats;
pub mod suggest;

pub use cliques::CliqueSet;
pub use coloring::{greedy_color, greedy_color_with, validate_coloring, Coloring, TieBreak};
pub use enumerate::{
    is_maximal_strong, rfc_alter_enum, rfc_refine_enum, sfc_enum, wfc_enum, EnumReport, EnumRequest, Model,
    RelativeMethod,
};
pub use error::{Error, Result};
pub use graph::{
    assign_random_attributes, connected_components, load_attributes, load_edge_list, AttributedGraph, Clique, Graph,
    VertexId, VertexMask,
};
pub use ordering::{OrderingKind, VertexOrdering};
pub use pruning::{colorful_core, enhanced_colorful_core, fairness_core, PruneKind};
pub use stats::RunStats;
pub use suggest::{suggest_k, KSuggestion};
