//! ve-domination on graphs: exact minimal-set oracle, neighbourhood
//! reduction, a linear-time recognizer for well-ve-dominated trees,
//! constructions, and exhaustive validation over small trees.

pub mod constructions;
pub mod domination;
pub mod graph;
pub mod harness;
pub mod recognizer;
pub mod reduction;
pub mod sets;

pub use constructions::backbone::{
    expand_backbone, unit_cut_decompose, unit_cut_extend, unit_cut_split,
};
pub use constructions::paths::{is_wvd_path, path_graph};
pub use constructions::sat::{
    sat_decide_via_graph, sat_to_graph, satisfying_assignment_via_graph, CnfError, CnfInstance,
    Literal, SatReductionMap,
};
pub use constructions::ConstructionError;
pub use domination::{
    domination_chain_check, enumerate_minimal_ve_dominating_sets, is_minimal_ve_dominating,
    is_ve_dominating, oracle_report, private_edges, DominationReport, EnumerationMode, Oracle,
    OracleError, OracleLimits,
};
pub use graph::{Graph, GraphError, ParseError};
pub use harness::{
    cross_validate, enumerate_free_trees, lemma_suite, LemmaConfig, ValidationReport,
};
pub use recognizer::{
    build_certificate, find_forbidden_configuration, recognize, unit_partition, verify_certificate,
    ForbiddenConfig, ForbiddenWitness, Label, RecognitionCase, RecognitionResult, Refutation, Unit,
    UnitPartition, Verdict,
};
pub use reduction::{reduce, ReductionMap};
pub use sets::{EdgeSet, VertexSet};
