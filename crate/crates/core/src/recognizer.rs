//! Linear-time recognition of well-ve-dominated trees.
//!
//! A reduced tree on at least six vertices is well-ve-dominated exactly when
//! its vertices split into units `(leaf, support, backbone)`: every leaf hangs
//! off a degree-2 support, every support's other neighbour is a backbone
//! vertex, and every backbone vertex owns exactly one support. The backbone
//! then induces a subtree, and alternating supports and leaves along a
//! 2-colouring of it gives an independent set that ve-dominates every edge
//! exactly once. That set is returned as a certificate and re-checked edge by
//! edge before a "yes" is reported.

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::Graph;
use crate::reduction::{is_reduced, reduce};
use crate::sets::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Label {
    L,
    S,
    W,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Label::L => "L",
            Label::S => "S",
            Label::W => "W",
        })
    }
}

/// Body `leaf - support - backbone` of one unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Unit {
    pub leaf: usize,
    pub support: usize,
    pub backbone: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnitPartition {
    /// Sorted by leaf.
    pub units: Vec<Unit>,
    pub labels: Vec<Label>,
    /// Edges with both endpoints labelled `W`, in canonical order.
    pub backbone_edges: Vec<(usize, usize)>,
}

impl UnitPartition {
    pub fn len(&self) -> usize {
        self.units.len()
    }

    pub fn is_empty(&self) -> bool {
        self.units.is_empty()
    }

    fn labelled(&self, label: Label) -> VertexSet {
        VertexSet::from_members(
            self.labels.len(),
            self.labels
                .iter()
                .enumerate()
                .filter(|(_, &l)| l == label)
                .map(|(v, _)| v),
        )
    }

    pub fn leaves(&self) -> VertexSet {
        self.labelled(Label::L)
    }

    pub fn supports(&self) -> VertexSet {
        self.labelled(Label::S)
    }

    pub fn backbone(&self) -> VertexSet {
        self.labelled(Label::W)
    }

    pub fn unit_at_backbone(&self, w: usize) -> Option<&Unit> {
        self.units.iter().find(|u| u.backbone == w)
    }

    /// Backbone-induced subtree, relabelled to `0..units` in increasing
    /// order of the original backbone vertices.
    pub fn backbone_graph(&self) -> Graph {
        let keep = self.backbone().to_vec();
        let mut pos = vec![usize::MAX; self.labels.len()];
        for (i, &w) in keep.iter().enumerate() {
            pos[w] = i;
        }
        Graph::from_edges(
            keep.len(),
            self.backbone_edges.iter().map(|&(a, b)| (pos[a], pos[b])),
        )
        .expect("backbone edges are simple")
    }

    /// Checks every structural invariant of a unit partition against `t`.
    pub fn validate(&self, t: &Graph) -> Result<(), String> {
        let n = t.vertex_count();
        if self.labels.len() != n {
            return Err(format!("{} labels for {} vertices", self.labels.len(), n));
        }
        if 3 * self.units.len() != n {
            return Err(format!(
                "{} units cannot partition {} vertices",
                self.units.len(),
                n
            ));
        }
        let mut owner = vec![None; n];
        for (k, u) in self.units.iter().enumerate() {
            for (v, want) in [
                (u.leaf, Label::L),
                (u.support, Label::S),
                (u.backbone, Label::W),
            ] {
                if v >= n || self.labels[v] != want {
                    return Err(format!("unit {k}: vertex {v} is not labelled {want}"));
                }
                if owner[v].replace(k).is_some() {
                    return Err(format!("vertex {v} belongs to two units"));
                }
            }
            if t.degree(u.leaf) != 1 || t.degree(u.support) != 2 {
                return Err(format!("unit {k}: leaf/support degrees are not 1/2"));
            }
            if !t.has_edge(u.leaf, u.support) || !t.has_edge(u.support, u.backbone) {
                return Err(format!("unit {k}: body is not a path"));
            }
        }
        let expected: Vec<(usize, usize)> = t
            .edges()
            .iter()
            .copied()
            .filter(|&(a, b)| self.labels[a] == Label::W && self.labels[b] == Label::W)
            .collect();
        if expected != self.backbone_edges {
            return Err("backbone edge list does not match the W-induced subgraph".into());
        }
        if !self.backbone_graph().is_connected() {
            return Err("backbone is disconnected".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ForbiddenConfig {
    /// Induced `v1..v4`, `d(v1) = d(v4) = 1`, `d(v2) = 2`.
    I,
    /// Induced `v1..v5`, `d(v1) = d(v5) = 1`, `d(v2) = 2`.
    II,
    /// Induced `v1..v7`, `d(v1) = d(v7) = 1`, `d(v2) = d(v4) = d(v6) = 2`.
    III,
}

impl ForbiddenConfig {
    pub const ALL: [ForbiddenConfig; 3] = [
        ForbiddenConfig::I,
        ForbiddenConfig::II,
        ForbiddenConfig::III,
    ];

    fn length(self) -> usize {
        match self {
            ForbiddenConfig::I => 4,
            ForbiddenConfig::II => 5,
            ForbiddenConfig::III => 7,
        }
    }

    /// Required degree at a path position, if any.
    fn degree_at(self, pos: usize) -> Option<usize> {
        let last = self.length() - 1;
        match (self, pos) {
            (_, 0) => Some(1),
            (_, p) if p == last => Some(1),
            (_, 1) => Some(2),
            (ForbiddenConfig::III, 3 | 5) => Some(2),
            _ => None,
        }
    }
}

impl fmt::Display for ForbiddenConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ForbiddenConfig::I => "i",
            ForbiddenConfig::II => "ii",
            ForbiddenConfig::III => "iii",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForbiddenWitness {
    pub config: ForbiddenConfig,
    pub path: Vec<usize>,
}

/// Why a tree is not well-ve-dominated. Vertex indices refer to the reduced tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "kebab-case")]
pub enum Refutation {
    #[serde(rename = "order-not-3n")]
    OrderNot3n {
        order: usize,
    },
    /// A leaf whose neighbour does not have degree 2.
    BadLeaf {
        leaf: usize,
        support: usize,
        support_degree: usize,
    },
    /// A support whose non-leaf neighbour is not a backbone vertex.
    BadSupportDegree {
        support: usize,
        backbone_neighbors: usize,
    },
    /// A backbone vertex adjacent to other than exactly one support.
    WMultiplicity {
        vertex: usize,
        support_neighbors: usize,
    },
    UnbalancedPartition {
        leaves: usize,
        supports: usize,
        backbone: usize,
    },
    ForbiddenPath(ForbiddenWitness),
    BackboneDisconnected,
    CertificateRejected,
}

impl fmt::Display for Refutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Refutation::OrderNot3n { order } => {
                write!(f, "order-not-3n: reduced order {order} is not a multiple of 3 that is at least 6")
            }
            Refutation::BadLeaf { leaf, support, support_degree } => write!(
                f,
                "bad-leaf: leaf {leaf} hangs off {support} of degree {support_degree}, not a good pendant edge"
            ),
            Refutation::BadSupportDegree { support, backbone_neighbors } => write!(
                f,
                "bad-support-degree: support {support} has {backbone_neighbors} backbone neighbours, expected 1"
            ),
            Refutation::WMultiplicity { vertex, support_neighbors } => write!(
                f,
                "w-multiplicity: backbone vertex {vertex} has {support_neighbors} support neighbours, expected 1"
            ),
            Refutation::UnbalancedPartition { leaves, supports, backbone } => {
                write!(f, "unbalanced-partition: |L|={leaves} |S|={supports} |W|={backbone}")
            }
            Refutation::ForbiddenPath(w) => {
                write!(f, "forbidden-path({}): ", w.config)?;
                let parts: Vec<String> = w.path.iter().map(usize::to_string).collect();
                f.write_str(&parts.join("-"))
            }
            Refutation::BackboneDisconnected => f.write_str("backbone-disconnected"),
            Refutation::CertificateRejected => f.write_str("certificate-rejected"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecognitionCase {
    /// Reduces to `P_1` or `P_2`.
    T1,
    /// Reduced order at least six with a unit partition.
    T2,
    Rejected,
}

impl Serialize for RecognitionCase {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(match self {
            RecognitionCase::T1 => "T1",
            RecognitionCase::T2 => "T2",
            RecognitionCase::Rejected => "rejected",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecognitionResult {
    pub verdict: Verdict,
    pub case: RecognitionCase,
    #[serde(skip)]
    pub reduced_tree: Graph,
    /// Reduced vertex → original vertex.
    pub representatives: Vec<usize>,
    pub partition: Option<UnitPartition>,
    pub certificate: Option<VertexSet>,
    pub refutation: Option<Refutation>,
}

impl RecognitionResult {
    pub fn is_yes(&self) -> bool {
        self.verdict == Verdict::Yes
    }

    /// ve-domination number implied by the structure, for "yes" results.
    pub fn gamma_ve(&self) -> Option<usize> {
        match self.case {
            RecognitionCase::T1 => Some(self.reduced_tree.edge_count().min(1)),
            RecognitionCase::T2 => self.partition.as_ref().map(UnitPartition::len),
            RecognitionCase::Rejected => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognizeError {
    #[error("input graph is not a tree")]
    NotATree,
    #[error("input tree is not reduced")]
    NotReduced,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error(transparent)]
    Input(#[from] RecognizeError),
    #[error("no unit partition: {0}")]
    Refuted(Refutation),
}

/// Decides whether a tree is well-ve-dominated.
///
/// Reduces first, so unreduced input is fine. A "no" carries a concrete
/// forbidden induced path when one exists in the reduced tree, and otherwise
/// the first failed structural check.
pub fn recognize(t: &Graph) -> Result<RecognitionResult, RecognizeError> {
    if !t.is_tree() {
        return Err(RecognizeError::NotATree);
    }
    let reduction = reduce(t);
    let reduced = reduction.reduced_graph;
    let representatives = reduction.representative;
    let reject = |reduced: Graph, representatives: Vec<usize>, why: Refutation| RecognitionResult {
        verdict: Verdict::No,
        case: RecognitionCase::Rejected,
        reduced_tree: reduced,
        representatives,
        partition: None,
        certificate: None,
        refutation: Some(why),
    };

    if reduced.vertex_count() <= 2 {
        return Ok(RecognitionResult {
            verdict: Verdict::Yes,
            case: RecognitionCase::T1,
            reduced_tree: reduced,
            representatives,
            partition: None,
            certificate: None,
            refutation: None,
        });
    }

    let partition = match partition_reduced(&reduced) {
        Ok(p) => p,
        Err(why) => {
            let why = match forbidden_in_tree(&reduced) {
                Some(w) => Refutation::ForbiddenPath(w),
                None => why,
            };
            return Ok(reject(reduced, representatives, why));
        }
    };
    let certificate = build_certificate(&reduced, &partition);
    if !verify_certificate(&reduced, &certificate).passed {
        return Ok(reject(
            reduced,
            representatives,
            Refutation::CertificateRejected,
        ));
    }
    Ok(RecognitionResult {
        verdict: Verdict::Yes,
        case: RecognitionCase::T2,
        reduced_tree: reduced,
        representatives,
        partition: Some(partition),
        certificate: Some(certificate),
        refutation: None,
    })
}

/// L/S/W labelling of a reduced tree on at least six vertices.
pub fn unit_partition(t: &Graph) -> Result<UnitPartition, PartitionError> {
    if !t.is_tree() {
        return Err(RecognizeError::NotATree.into());
    }
    if !is_reduced(t) {
        return Err(RecognizeError::NotReduced.into());
    }
    partition_reduced(t).map_err(PartitionError::Refuted)
}

fn partition_reduced(t: &Graph) -> Result<UnitPartition, Refutation> {
    let n = t.vertex_count();
    if n < 6 || !n.is_multiple_of(3) {
        return Err(Refutation::OrderNot3n { order: n });
    }

    let mut labels = vec![Label::W; n];
    let mut pending = Vec::new();
    for leaf in t.vertices().filter(|&v| t.degree(v) == 1) {
        let support = t.neighbors(leaf)[0];
        if t.degree(support) != 2 {
            return Err(Refutation::BadLeaf {
                leaf,
                support,
                support_degree: t.degree(support),
            });
        }
        labels[leaf] = Label::L;
        labels[support] = Label::S;
        pending.push((leaf, support));
    }

    let mut units = Vec::with_capacity(pending.len());
    for (leaf, support) in pending {
        let other = t.neighbors(support).iter().copied().find(|&x| x != leaf);
        match other {
            Some(w) if labels[w] == Label::W => units.push(Unit {
                leaf,
                support,
                backbone: w,
            }),
            _ => {
                return Err(Refutation::BadSupportDegree {
                    support,
                    backbone_neighbors: 0,
                })
            }
        }
    }

    for w in t.vertices().filter(|&v| labels[v] == Label::W) {
        let support_neighbors = t
            .neighbors(w)
            .iter()
            .filter(|&&x| labels[x] == Label::S)
            .count();
        if support_neighbors != 1 {
            return Err(Refutation::WMultiplicity {
                vertex: w,
                support_neighbors,
            });
        }
    }

    let count = |l: Label| labels.iter().filter(|&&x| x == l).count();
    let (leaves, supports, backbone) = (count(Label::L), count(Label::S), count(Label::W));
    if leaves != supports || supports != backbone {
        return Err(Refutation::UnbalancedPartition {
            leaves,
            supports,
            backbone,
        });
    }

    let backbone_edges: Vec<(usize, usize)> = t
        .edges()
        .iter()
        .copied()
        .filter(|&(a, b)| labels[a] == Label::W && labels[b] == Label::W)
        .collect();
    let partition = UnitPartition {
        units,
        labels,
        backbone_edges,
    };
    if !partition.backbone_graph().is_connected() {
        return Err(Refutation::BackboneDisconnected);
    }
    Ok(partition)
}

/// Independent set that ve-dominates each edge of `t` exactly once.
///
/// Two-colours the backbone from its smallest vertex; backbone vertices in
/// that vertex's colour class contribute their support, the others their leaf.
pub fn build_certificate(t: &Graph, p: &UnitPartition) -> VertexSet {
    certificate_for_colouring(t, p, false)
}

/// As [`build_certificate`], optionally with the two colour classes swapped.
pub fn certificate_for_colouring(t: &Graph, p: &UnitPartition, swap: bool) -> VertexSet {
    let n = t.vertex_count();
    let mut colour: Vec<Option<bool>> = vec![None; n];
    let mut queue = VecDeque::new();
    if let Some(root) = p.labels.iter().position(|&l| l == Label::W) {
        colour[root] = Some(false);
        queue.push_back(root);
    }
    while let Some(v) = queue.pop_front() {
        let c = colour[v].expect("queued vertices are coloured");
        for &w in t.neighbors(v) {
            if p.labels[w] == Label::W && colour[w].is_none() {
                colour[w] = Some(!c);
                queue.push_back(w);
            }
        }
    }
    let mut cert = VertexSet::new(n);
    for u in &p.units {
        let in_anchor_class = colour[u.backbone] == Some(swap);
        cert.insert(if in_anchor_class { u.support } else { u.leaf });
    }
    cert
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateCheck {
    /// Members of the set ve-dominating each edge, in edge-index order.
    pub counts: Vec<usize>,
    pub independent: bool,
    /// Set lies within the leaves and supports of good pendant edges.
    pub within_leaves_and_supports: bool,
    pub passed: bool,
}

/// Checks that `i` is independent, lies in `L_T ∪ S_T`, and ve-dominates
/// every edge exactly once.
pub fn verify_certificate(t: &Graph, i: &VertexSet) -> CertificateCheck {
    let n = t.vertex_count();
    assert_eq!(
        i.universe(),
        n,
        "certificate universe differs from tree order"
    );
    // |I ∩ N[v]| for every vertex.
    let closed_hits: Vec<usize> = t
        .vertices()
        .map(|v| {
            usize::from(i.contains(v)) + t.neighbors(v).iter().filter(|&&w| i.contains(w)).count()
        })
        .collect();
    let triangle_free = t.is_tree();
    let counts: Vec<usize> = t
        .edges()
        .iter()
        .map(|&(a, b)| {
            // Members in N[a] ∩ N[b] are counted twice by the sum.
            let shared = if triangle_free {
                usize::from(i.contains(a)) + usize::from(i.contains(b))
            } else {
                t.closed_neighborhood(a)
                    .iter()
                    .filter(|&x| i.contains(x) && (x == b || t.has_edge(x, b)))
                    .count()
            };
            closed_hits[a] + closed_hits[b] - shared
        })
        .collect();

    let independent = crate::domination::is_independent(t, i);
    let mut allowed = VertexSet::new(n);
    for (l, s) in t.good_pendant_edges() {
        allowed.insert(l);
        allowed.insert(s);
    }
    let within = i.is_subset(&allowed);
    let exact = counts.iter().all(|&c| c == 1);
    CertificateCheck {
        counts,
        independent,
        within_leaves_and_supports: within,
        passed: independent && within && exact,
    }
}

/// First forbidden induced path, trying configurations (i), (ii), (iii) in
/// turn and returning the lexicographically smallest vertex sequence of the
/// first configuration present. A witness proves the tree is not
/// well-ve-dominated; its absence proves nothing.
pub fn find_forbidden_configuration(t: &Graph) -> Result<Option<ForbiddenWitness>, RecognizeError> {
    if !t.is_tree() {
        return Err(RecognizeError::NotATree);
    }
    Ok(forbidden_in_tree(t))
}

/// Witness for one specific configuration.
pub fn find_configuration(t: &Graph, config: ForbiddenConfig) -> Option<ForbiddenWitness> {
    let mut path = Vec::with_capacity(config.length());
    for leaf in t.vertices().filter(|&v| t.degree(v) == 1) {
        path.push(leaf);
        if extend_path(t, config, &mut path) {
            return Some(ForbiddenWitness { config, path });
        }
        path.clear();
    }
    None
}

fn forbidden_in_tree(t: &Graph) -> Option<ForbiddenWitness> {
    ForbiddenConfig::ALL
        .iter()
        .find_map(|&c| find_configuration(t, c))
}

// In a tree every walk that never steps back is an induced path.
fn extend_path(t: &Graph, config: ForbiddenConfig, path: &mut Vec<usize>) -> bool {
    if path.len() == config.length() {
        return true;
    }
    let cur = *path.last().expect("path starts at a leaf");
    let prev = path.len().checked_sub(2).map(|i| path[i]);
    let pos = path.len();
    for &next in t.neighbors(cur) {
        if Some(next) == prev {
            continue;
        }
        if config.degree_at(pos).is_some_and(|d| t.degree(next) != d) {
            continue;
        }
        path.push(next);
        if extend_path(t, config, path) {
            return true;
        }
        path.pop();
    }
    false
}
