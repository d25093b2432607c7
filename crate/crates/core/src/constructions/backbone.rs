//! Growing well-ve-dominated trees from a backbone, and cutting them apart
//! along backbone edges.

use super::ConstructionError;
use crate::graph::Graph;
use crate::recognizer::{recognize, Label, RecognitionCase, Unit, UnitPartition};
use crate::sets::EdgeSet;

/// Attaches a pendant `P_2` to every vertex of the tree `r`.
///
/// Backbone vertex `i` keeps index `i`; its support is `n + i` and its leaf
/// `2n + i`, where `n = |V(r)|`.
pub fn expand_backbone(r: &Graph) -> Result<(Graph, UnitPartition), ConstructionError> {
    let n = r.vertex_count();
    if n < 2 {
        return Err(ConstructionError::OrderTooSmall { order: n, min: 2 });
    }
    if !r.is_tree() {
        return Err(ConstructionError::NotATree);
    }
    let mut edges = r.edges().to_vec();
    edges.extend((0..n).flat_map(|i| [(i, n + i), (n + i, 2 * n + i)]));
    let t = Graph::from_edges(3 * n, edges).expect("expansion is simple");
    let mut labels = vec![Label::W; 3 * n];
    labels[n..2 * n].fill(Label::S);
    labels[2 * n..].fill(Label::L);
    let units = (0..n)
        .map(|i| Unit {
            leaf: 2 * n + i,
            support: n + i,
            backbone: i,
        })
        .collect();
    let partition = UnitPartition {
        units,
        labels,
        backbone_edges: r.edges().to_vec(),
    };
    Ok((t, partition))
}

/// Removes every backbone edge, leaving one `P_3` per unit. Each component
/// comes with its sorted original vertices.
pub fn unit_cut_decompose(
    t: &Graph,
    p: &UnitPartition,
) -> Result<Vec<(Graph, Vec<usize>)>, ConstructionError> {
    p.validate(t).map_err(ConstructionError::InvalidPartition)?;
    let mut cut = EdgeSet::new(t.edge_count());
    for &(a, b) in &p.backbone_edges {
        cut.insert(t.edge_index(a, b).expect("validated backbone edge"));
    }
    Ok(t.without_edges(&cut).component_graphs())
}

/// Removes the single backbone edge `u-v`, giving two components.
pub fn unit_cut_split(
    t: &Graph,
    p: &UnitPartition,
    u: usize,
    v: usize,
) -> Result<Vec<(Graph, Vec<usize>)>, ConstructionError> {
    p.validate(t).map_err(ConstructionError::InvalidPartition)?;
    let index = t
        .edge_index(u, v)
        .filter(|_| p.labels[u] == Label::W && p.labels[v] == Label::W)
        .ok_or(ConstructionError::NotABackboneEdge { u, v })?;
    let mut cut = EdgeSet::new(t.edge_count());
    cut.insert(index);
    Ok(t.without_edges(&cut).component_graphs())
}

/// Joins `t1` and `t2` by an edge between backbone vertices `u ∈ t1` and
/// `v ∈ t2`. Vertices of `t2` are shifted by `|V(t1)|`; the returned
/// partition is the union of both.
pub fn unit_cut_extend(
    t1: &Graph,
    p1: &UnitPartition,
    u: usize,
    t2: &Graph,
    p2: &UnitPartition,
    v: usize,
) -> Result<(Graph, UnitPartition), ConstructionError> {
    for (which, t, p, x) in [(1, t1, p1, u), (2, t2, p2, v)] {
        p.validate(t).map_err(ConstructionError::InvalidPartition)?;
        if p.labels.get(x) != Some(&Label::W) {
            return Err(ConstructionError::EndpointNotInBackbone { vertex: x });
        }
        let in_t2 = recognize(t)
            .map(|r| {
                r.case == RecognitionCase::T2 && r.reduced_tree.vertex_count() == t.vertex_count()
            })
            .unwrap_or(false);
        if !in_t2 {
            return Err(ConstructionError::NotInT2 { which });
        }
    }
    let offset = t1.vertex_count();
    let joined = t1
        .disjoint_union(t2)
        .with_edge(u, v + offset)
        .expect("endpoints are in different components");

    let mut units: Vec<Unit> = p1.units.clone();
    units.extend(p2.units.iter().map(|x| Unit {
        leaf: x.leaf + offset,
        support: x.support + offset,
        backbone: x.backbone + offset,
    }));
    units.sort_by_key(|x| x.leaf);
    let mut labels = p1.labels.clone();
    labels.extend_from_slice(&p2.labels);
    let backbone_edges = joined
        .edges()
        .iter()
        .copied()
        .filter(|&(a, b)| labels[a] == Label::W && labels[b] == Label::W)
        .collect();
    Ok((
        joined,
        UnitPartition {
            units,
            labels,
            backbone_edges,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::Oracle;
    use crate::graph::{path, star};

    #[test]
    fn expansion_of_p2_is_p6() {
        let (t, p) = expand_backbone(&path(2)).unwrap();
        assert_eq!(t.edges(), &[(0, 1), (0, 2), (1, 3), (2, 4), (3, 5)]);
        p.validate(&t).unwrap();
        let r = recognize(&t).unwrap();
        assert!(r.is_yes());
        assert_eq!(r.partition.unwrap(), p);
    }

    #[test]
    fn expansion_errors() {
        assert_eq!(
            expand_backbone(&path(1)).unwrap_err(),
            ConstructionError::OrderTooSmall { order: 1, min: 2 }
        );
        let forest = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            expand_backbone(&forest).unwrap_err(),
            ConstructionError::NotATree
        );
    }

    #[test]
    fn decomposition_is_units() {
        let (t, p) = expand_backbone(&star(3)).unwrap();
        let parts = unit_cut_decompose(&t, &p).unwrap();
        assert_eq!(parts.len(), 4);
        assert!(parts
            .iter()
            .all(|(g, _)| *g == path(3) || g.vertex_count() == 3 && g.edge_count() == 2));
        let oracle = Oracle::default();
        let whole = oracle.report(&t).unwrap().gamma_ve;
        let sum: usize = parts
            .iter()
            .map(|(g, _)| oracle.report(g).unwrap().gamma_ve)
            .sum();
        assert_eq!(whole, sum);
    }

    #[test]
    fn split_and_extend() {
        let (t, p) = expand_backbone(&path(3)).unwrap();
        let halves = unit_cut_split(&t, &p, 0, 1).unwrap();
        assert_eq!(halves.len(), 2);
        assert_eq!(
            unit_cut_split(&t, &p, 0, 3),
            Err(ConstructionError::NotABackboneEdge { u: 0, v: 3 })
        );

        let (t2, p2) = expand_backbone(&path(2)).unwrap();
        let (joined, q) = unit_cut_extend(&t, &p, 2, &t2, &p2, 0).unwrap();
        assert_eq!(joined.vertex_count(), 15);
        assert!(joined.has_edge(2, 9));
        q.validate(&joined).unwrap();
        assert!(recognize(&joined).unwrap().is_yes());
        assert!(Oracle::default().is_well_ve_dominated(&joined).unwrap());
    }

    #[test]
    fn extend_rejects_non_backbone() {
        let (t, p) = expand_backbone(&path(2)).unwrap();
        assert_eq!(
            unit_cut_extend(&t, &p, 2, &t, &p, 0),
            Err(ConstructionError::EndpointNotInBackbone { vertex: 2 })
        );
    }
}
