//! Benchmark inputs shared by the criterion targets.

use vedom::{expand_backbone, Graph};

/// Backbone expansion of the path on `k` vertices: a `3k`-vertex
/// well-ve-dominated tree.
pub fn expanded_path(k: usize) -> Graph {
    expand_backbone(&vedom::path_graph(k).expect("k >= 1"))
        .expect("path is a tree")
        .0
}

/// Caterpillar with spine `0..spine` and `legs` leaves per spine vertex.
pub fn caterpillar(spine: usize, legs: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..spine).map(|i| (i - 1, i)).collect();
    let mut next = spine;
    for s in 0..spine {
        for _ in 0..legs {
            edges.push((s, next));
            next += 1;
        }
    }
    Graph::from_edges(next, edges).expect("caterpillar is simple")
}
