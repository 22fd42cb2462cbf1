//! Graph-minor machinery around the forbidden-minor characterization of
//! linkless embeddability, plus exhaustive small-n verification of the
//! extremal edge bounds it supports.
//!
//! The pieces, bottom up:
//!
//! - [`graph`]: immutable simple graphs on at most 32 vertices with dense
//!   bitset adjacency; contraction, deletion, bipartitions, separations.
//! - [`graph6`]: the standard one-line text codec.
//! - [`iso`]: canonical forms, isomorphism, and isomorph-free enumeration by
//!   canonical augmentation with edge-window pruning and subtree resume
//!   tokens.
//! - [`transforms`]: degree-3 star/triangle exchanges and the seven-graph
//!   obstruction family generated from K6.
//! - [`minors`]: branch-set minor search with verifiable certificates;
//!   linkless embeddability as absence of the seven obstructions.
//! - [`extremal`]: exhaustive edge-bound verification and conjecture
//!   harnesses with deterministic, machine-readable reports.

pub mod bits;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod minors;
pub mod named;
pub mod transforms;

pub use bits::VertexSet;
pub use error::{Error, Result};
pub use graph::{
    bipartite_complement, check_separation, super_separation_order, Bipartition, Graph,
    Separation, MAX_VERTICES,
};
pub use iso::{
    are_isomorphic, canonical_form, canonical_graph, enumerate, enumerate_fold, CanonicalForm,
    ClassFilter, EnumerationSpec, SubtreeToken,
};
pub use minors::{
    find_minor, find_obstruction, has_minor, is_bipartite_obstruction_free, is_linkless,
    verify_model, MinorModel, Obstruction,
};
pub use transforms::{delta_y, petersen_family, y_delta, PetersenFamily};
