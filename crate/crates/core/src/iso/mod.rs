//! Canonical forms, isomorphism testing, and isomorph-free enumeration.

mod canon;
mod enumerate;

pub use canon::{are_isomorphic, canonical_form, canonical_graph, CanonicalForm};
pub use enumerate::{
    enumerate, enumerate_fold, enumerate_subtree, subtree_tokens, ClassFilter, EnumerationSpec,
    Enumerator, SubtreeToken,
};

pub(crate) use canon::canon;
