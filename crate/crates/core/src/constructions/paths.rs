//! Paths and their well-ve-dominated orders.

use super::ConstructionError;
use crate::graph::{path, Graph};

/// `P_n` on vertices `0..n` in path order.
pub fn path_graph(n: usize) -> Result<Graph, ConstructionError> {
    if n < 1 {
        return Err(ConstructionError::OrderTooSmall { order: n, min: 1 });
    }
    Ok(path(n))
}

/// `P_n` is well-ve-dominated exactly for `n` in {1, 2, 3, 6}.
pub fn is_wvd_path(n: usize) -> Result<bool, ConstructionError> {
    if n < 1 {
        return Err(ConstructionError::OrderTooSmall { order: n, min: 1 });
    }
    Ok(matches!(n, 1 | 2 | 3 | 6))
}
