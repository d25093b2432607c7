//! Immutable simple undirected graphs and the edge-list text format.
//!
//! Vertices are dense `0..n` indices. Edges are stored once as `(u, v)` with
//! `u < v`, sorted lexicographically; an edge's position in that list is its
//! edge index, and every [`EdgeSet`] is expressed in those indices.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::sets::{EdgeSet, VertexSet};

/// Structural violation found while building a graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("vertex {vertex} out of range for {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
}

/// Edge-list parse failure; `line` is 1-based and counts every line of the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: {source}")]
    Invalid {
        line: usize,
        #[source]
        source: GraphError,
    },
}

impl ParseError {
    pub fn line(&self) -> usize {
        match self {
            ParseError::Malformed { line, .. } | ParseError::Invalid { line, .. } => *line,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Graph on `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    /// Builds a graph from an edge list. Endpoint order within a pair and
    /// the order of pairs are irrelevant.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (a, b) in edges {
            for vertex in [a, b] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { vertex, count: n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop { vertex: a });
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge {
                u: w[0].0,
                v: w[0].1,
            });
        }
        Ok(Self::from_canonical(n, list))
    }

    /// `list` must already be sorted, deduplicated and normalized.
    fn from_canonical(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph { adjacency, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list; position = edge index.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> (usize, usize) {
        self.edges[index]
    }

    /// Sorted open neighbourhood N(v).
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Closed neighbourhood N[v] as a vertex set.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut set =
            VertexSet::from_members(self.vertex_count(), self.adjacency[v].iter().copied());
        set.insert(v);
        set
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Index of edge `{u, v}` in the canonical order.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.vertex_count()
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() <= 1 || self.connected_components().len() == 1
    }

    /// True iff connected with exactly `n - 1` edges. The empty graph is not a tree.
    pub fn is_tree(&self) -> bool {
        let n = self.vertex_count();
        n > 0 && self.edge_count() == n - 1 && self.is_connected()
    }

    /// Maximal connected vertex sets, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = VertexSet::new(n);
            seen[start] = true;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                comp.insert(v);
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Good pendant edges `(leaf, support)`: `d(leaf) = 1` and `d(support) = 2`,
    /// sorted by leaf.
    pub fn good_pendant_edges(&self) -> Vec<(usize, usize)> {
        self.vertices()
            .filter(|&l| self.degree(l) == 1)
            .map(|l| (l, self.adjacency[l][0]))
            .filter(|&(_, s)| self.degree(s) == 2)
            .collect()
    }

    /// Subgraph induced by the vertices outside `removed`.
    ///
    /// The returned map sends each old index to its new index (`None` for
    /// removed vertices). Surviving vertices keep their relative order.
    pub fn induced_delete(&self, removed: &VertexSet) -> (Graph, Vec<Option<usize>>) {
        let keep: Vec<usize> = self.vertices().filter(|&v| !removed.contains(v)).collect();
        self.induced_subgraph(&keep)
    }

    /// Subgraph induced by `keep` (sorted ascending, distinct), with the old→new map.
    pub fn induced_subgraph(&self, keep: &[usize]) -> (Graph, Vec<Option<usize>>) {
        debug_assert!(keep.windows(2).all(|w| w[0] < w[1]));
        let mut map = vec![None; self.vertex_count()];
        for (new, &old) in keep.iter().enumerate() {
            map[old] = Some(new);
        }
        let mut edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((map[u]?, map[v]?)))
            .collect();
        edges.sort_unstable();
        (Self::from_canonical(keep.len(), edges), map)
    }

    /// Same graph with the listed edges removed (vertices untouched).
    pub fn without_edges(&self, removed: &EdgeSet) -> Graph {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| !removed.contains(*i))
            .map(|(_, &e)| e)
            .collect();
        Self::from_canonical(self.vertex_count(), edges)
    }

    /// Same graph plus edge `{u, v}`.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        Graph::from_edges(
            self.vertex_count(),
            self.edges.iter().copied().chain([(u, v)]),
        )
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.vertex_count();
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + offset, v + offset)))
            .collect();
        Self::from_canonical(offset + other.vertex_count(), edges)
    }

    /// Applies a vertex permutation: old vertex `v` becomes `perm[v]`.
    ///
    /// # Panics
    /// If `perm` is not a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.vertex_count());
        let mut hit = vec![false; perm.len()];
        for &p in perm {
            assert!(p < perm.len() && !hit[p], "not a permutation");
            hit[p] = true;
        }
        Graph::from_edges(
            self.vertex_count(),
            self.edges.iter().map(|&(u, v)| (perm[u], perm[v])),
        )
        .expect("relabelling preserves simplicity")
    }

    /// Component graphs, each with the sorted list of original vertices.
    pub fn component_graphs(&self) -> Vec<(Graph, Vec<usize>)> {
        self.connected_components()
            .into_iter()
            .map(|c| {
                let keep = c.to_vec();
                (self.induced_subgraph(&keep).0, keep)
            })
            .collect()
    }

    /// Parses the edge-list text format.
    ///
    /// Lines starting with `#` and blank lines are ignored. The first
    /// remaining line may be a header `n <count>`; every other line is an
    /// edge `u v`. Without a header the vertex count is one more than the
    /// largest index mentioned.
    pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
        let mut declared: Option<usize> = None;
        let mut seen_content = false;
        let mut edges: Vec<(usize, usize, usize)> = Vec::new();

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = trimmed.split_whitespace().collect();
            if tokens[0] == "n" {
                if seen_content {
                    return Err(ParseError::Malformed {
                        line,
                        reason: "header `n <count>` must precede all edges".into(),
                    });
                }
                seen_content = true;
                if tokens.len() != 2 {
                    return Err(ParseError::Malformed {
                        line,
                        reason: "expected `n <count>`".into(),
                    });
                }
                declared = Some(parse_index(tokens[1], line)?);
                continue;
            }
            seen_content = true;
            if tokens.len() != 2 {
                return Err(ParseError::Malformed {
                    line,
                    reason: format!("expected two vertex indices, found {} tokens", tokens.len()),
                });
            }
            let u = parse_index(tokens[0], line)?;
            let v = parse_index(tokens[1], line)?;
            edges.push((u, v, line));
        }

        let n = match declared {
            Some(n) => n,
            None => edges
                .iter()
                .map(|&(u, v, _)| u.max(v) + 1)
                .max()
                .unwrap_or(0),
        };

        // Validate in file order so the first offending line is reported.
        let mut seen = std::collections::HashSet::with_capacity(edges.len());
        for &(u, v, line) in &edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(ParseError::Invalid {
                        line,
                        source: GraphError::VertexOutOfRange { vertex, count: n },
                    });
                }
            }
            if u == v {
                return Err(ParseError::Invalid {
                    line,
                    source: GraphError::SelfLoop { vertex: u },
                });
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(ParseError::Invalid {
                    line,
                    source: GraphError::DuplicateEdge { u: key.0, v: key.1 },
                });
            }
        }
        let mut list: Vec<(usize, usize)> = seen.into_iter().collect();
        list.sort_unstable();
        Ok(Self::from_canonical(n, list))
    }

    /// Serializes to the edge-list format; the header is always emitted.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.vertex_count());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

fn parse_index(token: &str, line: usize) -> Result<usize, ParseError> {
    token.parse::<usize>().map_err(|_| ParseError::Malformed {
        line,
        reason: format!("`{token}` is not a non-negative integer"),
    })
}

impl FromStr for Graph {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Graph::parse_edge_list(s)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.vertex_count(),
            self.edges
        )
    }
}

/// Path `v0 - v1 - ... - v(n-1)`.
pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
}

/// Star `K_{1,k}` with centre 0.
pub fn star(k: usize) -> Graph {
    Graph::from_edges(k + 1, (1..=k).map(|i| (0, i))).expect("star is simple")
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
}
