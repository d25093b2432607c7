//! Graph constructions: backbone expansions and unit cuts, paths, and the
//! 3-SAT gadget.

pub mod backbone;
pub mod paths;
pub mod sat;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("input graph is not a tree")]
    NotATree,
    #[error("order {order} is below the minimum {min}")]
    OrderTooSmall { order: usize, min: usize },
    #[error("invalid unit partition: {0}")]
    InvalidPartition(String),
    #[error("vertex {vertex} is not a backbone vertex")]
    EndpointNotInBackbone { vertex: usize },
    #[error("tree {which} is not a reduced well-ve-dominated tree with a unit partition")]
    NotInT2 { which: usize },
    #[error("{u}-{v} is not a backbone edge")]
    NotABackboneEdge { u: usize, v: usize },
}
