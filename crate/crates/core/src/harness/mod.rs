//! Exhaustive tree enumeration and the oracle cross-validation suites.

pub mod trees;
pub mod validate;

pub use trees::{all_free_trees, canonical_form, enumerate_free_trees, FreeTrees, OrderOutOfRange};
pub use validate::{
    cross_validate, lemma_suite, Check, HarnessError, LemmaConfig, ValidationReport,
};
