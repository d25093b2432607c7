//! Collapsing vertices with identical open neighbourhoods.
//!
//! Two vertices with the same open neighbourhood ve-dominate exactly the same
//! edges, and a minimal ve-dominating set contains at most one of them, so
//! keeping one representative per class leaves the well-ve-dominated verdict
//! unchanged.

use std::collections::HashMap;

use serde::Serialize;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionMap {
    /// Class id of every original vertex; ids follow the minimum member.
    pub class_of: Vec<usize>,
    /// Minimum-index member of each class.
    pub representative: Vec<usize>,
    #[serde(skip)]
    pub reduced_graph: Graph,
    /// Original vertex → vertex of `reduced_graph`.
    pub to_reduced: Vec<usize>,
}

impl ReductionMap {
    /// Original vertex → its representative (original index).
    pub fn representative_of(&self, v: usize) -> usize {
        self.representative[self.class_of[v]]
    }

    pub fn class_members(&self) -> Vec<Vec<usize>> {
        let mut members = vec![Vec::new(); self.representative.len()];
        for (v, &c) in self.class_of.iter().enumerate() {
            members[c].push(v);
        }
        members
    }
}

/// Classes of vertices with equal open neighbourhoods, ordered by minimum member.
pub fn neighborhood_classes(g: &Graph) -> Vec<Vec<usize>> {
    class_assignment(g).1
}

fn class_assignment(g: &Graph) -> (Vec<usize>, Vec<Vec<usize>>) {
    let mut index: HashMap<&[usize], usize> = HashMap::with_capacity(g.vertex_count());
    let mut class_of = Vec::with_capacity(g.vertex_count());
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in g.vertices() {
        let next = classes.len();
        let c = *index.entry(g.neighbors(v)).or_insert(next);
        if c == next {
            classes.push(Vec::new());
        }
        classes[c].push(v);
        class_of.push(c);
    }
    (class_of, classes)
}

/// R(G): the subgraph induced by one representative per class.
pub fn reduce(g: &Graph) -> ReductionMap {
    let (class_of, classes) = class_assignment(g);
    let representative: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    // Representatives are increasing, so reduced vertex i is class i.
    let (reduced_graph, _) = g.induced_subgraph(&representative);
    ReductionMap {
        to_reduced: class_of.clone(),
        class_of,
        representative,
        reduced_graph,
    }
}

pub fn is_reduced(g: &Graph) -> bool {
    let mut seen = std::collections::HashSet::with_capacity(g.vertex_count());
    g.vertices().all(|v| seen.insert(g.neighbors(v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{path, star};

    #[test]
    fn classes_examples() {
        assert_eq!(neighborhood_classes(&star(3)), vec![vec![0], vec![1, 2, 3]]);
        assert_eq!(neighborhood_classes(&path(3)), vec![vec![0, 2], vec![1]]);
        assert_eq!(neighborhood_classes(&path(6)).len(), 6);
    }

    #[test]
    fn reduce_examples() {
        let r = reduce(&path(3));
        assert_eq!(r.reduced_graph, path(2));
        assert_eq!(r.representative, vec![0, 1]);
        assert_eq!(r.representative_of(2), 0);
        assert_eq!(reduce(&star(5)).reduced_graph, path(2));
        assert_eq!(reduce(&path(6)).reduced_graph, path(6));
    }

    #[test]
    fn reduced_predicate() {
        assert!(is_reduced(&path(6)));
        assert!(!is_reduced(&path(3)));
        assert!(is_reduced(&path(1)));
        assert!(!is_reduced(&Graph::empty(2)));
    }

    #[test]
    fn isolated_vertices_collapse() {
        let g = Graph::from_edges(5, [(0, 1)]).unwrap();
        let r = reduce(&g);
        assert_eq!(r.class_members(), vec![vec![0], vec![1], vec![2, 3, 4]]);
        assert_eq!(r.reduced_graph.vertex_count(), 3);
    }
}
