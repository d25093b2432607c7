//! Exact ve-domination oracle.
//!
//! A vertex `v` ve-dominates every edge with an endpoint in `N[v]`. The
//! oracle enumerates inclusion-minimal ve-dominating sets by cardinality,
//! using per-vertex dominated-edge masks and two running masks per search
//! level: edges covered at least once and edges covered at least twice. A
//! member's private edges are exactly `mask(v) & !twice`, so the
//! private-edge minimality test costs one word operation per member.
//!
//! Two prunes keep the search small: a partial set in which some member has
//! already lost all its private edges has no minimal superset, and a partial
//! set that already dominates cannot be extended to a minimal set.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::ControlFlow;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::Graph;
use crate::sets::{EdgeSet, VertexSet};

/// Absolute ceiling: search states are `u64` vertex masks.
pub const HARD_MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("instance too large: {vertices} vertices exceeds the oracle limit of {limit}")]
    InstanceTooLarge { vertices: usize, limit: usize },
    #[error("size bound {bound} exceeds the limit of {limit} for size-bounded search")]
    BoundTooLarge { bound: usize, limit: usize },
}

/// Guards on the exponential searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    /// Largest graph accepted for full enumeration.
    pub max_vertices: usize,
    /// Largest graph accepted for size-bounded enumeration.
    pub bounded_max_vertices: usize,
    /// Largest cardinality bound accepted for size-bounded enumeration.
    pub bounded_max_size: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_vertices: 24,
            bounded_max_vertices: 40,
            bounded_max_size: 10,
        }
    }
}

impl OracleLimits {
    pub fn with_max_vertices(max_vertices: usize) -> Self {
        OracleLimits {
            max_vertices,
            ..Self::default()
        }
    }

    fn check_full(&self, g: &Graph) -> Result<(), OracleError> {
        let limit = self.max_vertices.min(HARD_MAX_VERTICES);
        if g.vertex_count() > limit {
            return Err(OracleError::InstanceTooLarge {
                vertices: g.vertex_count(),
                limit,
            });
        }
        Ok(())
    }

    fn check_bounded(&self, g: &Graph, bound: usize) -> Result<(), OracleError> {
        // A bound covering every vertex is a full enumeration in disguise.
        if bound >= g.vertex_count() {
            return self.check_full(g);
        }
        let limit = self
            .bounded_max_vertices
            .max(self.max_vertices)
            .min(HARD_MAX_VERTICES);
        if g.vertex_count() > limit {
            return Err(OracleError::InstanceTooLarge {
                vertices: g.vertex_count(),
                limit,
            });
        }
        if bound > self.bounded_max_size && g.vertex_count() > self.max_vertices {
            return Err(OracleError::BoundTooLarge {
                bound,
                limit: self.bounded_max_size,
            });
        }
        Ok(())
    }
}

/// Edges ve-dominated by `v`: those with an endpoint in `N[v]`.
pub fn ve_dominated_edges(g: &Graph, v: usize) -> EdgeSet {
    let closed = g.closed_neighborhood(v);
    let mut out = EdgeSet::new(g.edge_count());
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        if closed.contains(a) || closed.contains(b) {
            out.insert(i);
        }
    }
    out
}

/// Union of the edges ve-dominated by members of `s`.
pub fn ve_dominated_by_set(g: &Graph, s: &VertexSet) -> EdgeSet {
    let mut covered = EdgeSet::new(g.edge_count());
    for v in s.iter() {
        covered.union_with(&ve_dominated_edges(g, v));
    }
    covered
}

/// Vacuously true on edgeless graphs.
pub fn is_ve_dominating(g: &Graph, s: &VertexSet) -> bool {
    ve_dominated_by_set(g, s).len() == g.edge_count()
}

/// Edges ve-dominated by `v` and by no other member of `s`.
pub fn private_edges(g: &Graph, s: &VertexSet, v: usize) -> EdgeSet {
    let mut own = ve_dominated_edges(g, v);
    for u in s.iter().filter(|&u| u != v) {
        own.difference_with(&ve_dominated_edges(g, u));
    }
    own
}

/// Minimality through private edges: dominating, and every member keeps at
/// least one private edge.
pub fn is_minimal_ve_dominating(g: &Graph, s: &VertexSet) -> bool {
    is_ve_dominating(g, s) && s.iter().all(|v| !private_edges(g, s, v).is_empty())
}

/// Minimality straight from the definition: dominating, and no set obtained
/// by dropping one member still dominates. Dropping a single member suffices
/// because domination is monotone under supersets.
pub fn is_minimal_by_removal(g: &Graph, s: &VertexSet) -> bool {
    if !is_ve_dominating(g, s) {
        return false;
    }
    s.iter().all(|v| {
        let mut smaller = s.clone();
        smaller.remove(v);
        !is_ve_dominating(g, &smaller)
    })
}

pub fn is_independent(g: &Graph, s: &VertexSet) -> bool {
    s.iter()
        .all(|v| g.neighbors(v).iter().all(|&w| !s.contains(w)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerationMode {
    Full,
    SizeBounded(usize),
}

impl fmt::Display for EnumerationMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumerationMode::Full => f.write_str("full"),
            EnumerationMode::SizeBounded(b) => write!(f, "size-bounded({b})"),
        }
    }
}

impl Serialize for EnumerationMode {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Summary of all minimal ve-dominating sets of a graph.
///
/// In size-bounded mode every field describes only the minimal sets of
/// cardinality at most the bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominationReport {
    pub gamma_ve: usize,
    pub big_gamma_ve: usize,
    #[serde(rename = "sizes")]
    pub minimal_size_multiset: BTreeMap<usize, u64>,
    pub witness_min: VertexSet,
    pub witness_max: VertexSet,
    pub i_ve: usize,
    pub beta_ve: usize,
    #[serde(rename = "wvd")]
    pub is_well_ve_dominated: bool,
    #[serde(rename = "wvc")]
    pub is_well_ve_covered: bool,
    #[serde(rename = "mode")]
    pub enumeration_mode: EnumerationMode,
}

impl DominationReport {
    pub fn minimal_set_count(&self) -> u64 {
        self.minimal_size_multiset.values().sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// γ_ve ≤ i_ve ≤ β_ve ≤ Γ_ve.
    pub fn chain_holds(&self) -> bool {
        self.gamma_ve <= self.i_ve && self.i_ve <= self.beta_ve && self.beta_ve <= self.big_gamma_ve
    }
}

/// Exhaustive searches over vertex subsets, bounded by [`OracleLimits`].
#[derive(Debug, Clone, Copy, Default)]
pub struct Oracle {
    pub limits: OracleLimits,
}

impl Oracle {
    pub fn new(limits: OracleLimits) -> Self {
        Oracle { limits }
    }

    /// Every inclusion-minimal ve-dominating set, ordered by size and then
    /// lexicographically. With `size_bound`, only sets of at most that size.
    pub fn enumerate(
        &self,
        g: &Graph,
        size_bound: Option<usize>,
    ) -> Result<Vec<VertexSet>, OracleError> {
        let max_k = self.check(g, size_bound)?;
        let n = g.vertex_count();
        let mut out = Vec::new();
        search::minimal_sets(g, &all_vertices(n), 0..=max_k, |mask| {
            let set = VertexSet::from_word(n, mask);
            debug_assert!(is_minimal_by_removal(g, &set), "{set} is not minimal");
            out.push(set);
            ControlFlow::Continue(())
        });
        Ok(out)
    }

    /// Full report: all four parameters and both verdicts.
    pub fn report(&self, g: &Graph) -> Result<DominationReport, OracleError> {
        self.limits.check_full(g)?;
        Ok(self.build_report(g, g.vertex_count(), EnumerationMode::Full))
    }

    /// Report restricted to minimal sets of size at most `bound`.
    pub fn bounded_report(&self, g: &Graph, bound: usize) -> Result<DominationReport, OracleError> {
        self.limits.check_bounded(g, bound)?;
        let mode = if bound >= g.vertex_count() {
            EnumerationMode::Full
        } else {
            EnumerationMode::SizeBounded(bound)
        };
        Ok(self.build_report(g, bound.min(g.vertex_count()), mode))
    }

    fn build_report(&self, g: &Graph, max_k: usize, mode: EnumerationMode) -> DominationReport {
        let n = g.vertex_count();
        let adjacency: Vec<u64> = g
            .vertices()
            .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | (1 << w)))
            .collect();
        let mut sizes = BTreeMap::new();
        let mut first_min: Option<u64> = None;
        let mut first_max: Option<(usize, u64)> = None;
        let mut independent: Option<(usize, usize)> = None;

        search::minimal_sets(g, &all_vertices(n), 0..=max_k, |mask| {
            let size = mask.count_ones() as usize;
            *sizes.entry(size).or_insert(0u64) += 1;
            first_min.get_or_insert(mask);
            // Sizes arrive in increasing order; keep the first set of the largest.
            if first_max.is_none_or(|(s, _)| s < size) {
                first_max = Some((size, mask));
            }
            let is_indep = ones(mask).all(|v| adjacency[v] & mask == 0);
            if is_indep {
                independent = Some(match independent {
                    None => (size, size),
                    Some((lo, hi)) => (lo.min(size), hi.max(size)),
                });
            }
            ControlFlow::Continue(())
        });

        // Every graph has a minimal ve-dominating set that is independent (any
        // maximal independent set dominates), so in full mode these unwrap.
        let gamma_ve = sizes.keys().next().copied().unwrap_or(0);
        let big_gamma_ve = sizes.keys().next_back().copied().unwrap_or(0);
        let (i_ve, beta_ve) = independent.unwrap_or((0, 0));
        DominationReport {
            gamma_ve,
            big_gamma_ve,
            minimal_size_multiset: sizes,
            witness_min: VertexSet::from_word(n, first_min.unwrap_or(0)),
            witness_max: VertexSet::from_word(n, first_max.map_or(0, |(_, m)| m)),
            i_ve,
            beta_ve,
            is_well_ve_dominated: gamma_ve == big_gamma_ve,
            is_well_ve_covered: i_ve == beta_ve,
            enumeration_mode: mode,
        }
    }

    /// Minimum cardinality of a ve-dominating set; stops at the first hit.
    pub fn gamma_ve(&self, g: &Graph) -> Result<usize, OracleError> {
        self.limits.check_full(g)?;
        let mut found = 0;
        search::minimal_sets(
            g,
            &all_vertices(g.vertex_count()),
            0..=g.vertex_count(),
            |mask| {
                found = mask.count_ones() as usize;
                ControlFlow::Break(())
            },
        );
        Ok(found)
    }

    /// Verdict only; stops as soon as two minimal sets of different size exist.
    pub fn is_well_ve_dominated(&self, g: &Graph) -> Result<bool, OracleError> {
        self.limits.check_full(g)?;
        let mut first: Option<u32> = None;
        let mut uniform = true;
        search::minimal_sets(
            g,
            &all_vertices(g.vertex_count()),
            0..=g.vertex_count(),
            |mask| {
                let size = mask.count_ones();
                match first {
                    None => {
                        first = Some(size);
                        ControlFlow::Continue(())
                    }
                    Some(s) if s == size => ControlFlow::Continue(()),
                    Some(_) => {
                        uniform = false;
                        ControlFlow::Break(())
                    }
                }
            },
        );
        Ok(uniform)
    }

    /// γ_ve ≤ i_ve ≤ β_ve ≤ Γ_ve on the full report.
    pub fn domination_chain_check(&self, g: &Graph) -> Result<bool, OracleError> {
        Ok(self.report(g)?.chain_holds())
    }

    /// Some ve-dominating set of exactly `size` vertices drawn from
    /// `candidates` (minimality not required), first in lexicographic order.
    pub fn find_ve_dominating_set(
        &self,
        g: &Graph,
        size: usize,
        candidates: &VertexSet,
    ) -> Result<Option<VertexSet>, OracleError> {
        self.limits.check_bounded(g, size)?;
        let cands = candidates.to_vec();
        let mut found = None;
        search::dominating_sets(g, &cands, size, |mask| {
            found = Some(VertexSet::from_word(g.vertex_count(), mask));
            ControlFlow::Break(())
        });
        Ok(found)
    }

    /// Visits every ve-dominating set of exactly `size` vertices drawn from
    /// `candidates`, in lexicographic order, until `visit` breaks.
    pub fn for_each_ve_dominating_set<F>(
        &self,
        g: &Graph,
        size: usize,
        candidates: &VertexSet,
        mut visit: F,
    ) -> Result<(), OracleError>
    where
        F: FnMut(&VertexSet) -> ControlFlow<()>,
    {
        self.limits.check_bounded(g, size)?;
        let cands = candidates.to_vec();
        search::dominating_sets(g, &cands, size, |mask| {
            visit(&VertexSet::from_word(g.vertex_count(), mask))
        });
        Ok(())
    }

    fn check(&self, g: &Graph, size_bound: Option<usize>) -> Result<usize, OracleError> {
        match size_bound {
            None => {
                self.limits.check_full(g)?;
                Ok(g.vertex_count())
            }
            Some(b) => {
                self.limits.check_bounded(g, b)?;
                Ok(b.min(g.vertex_count()))
            }
        }
    }
}

/// [`Oracle::enumerate`] with default limits.
pub fn enumerate_minimal_ve_dominating_sets(
    g: &Graph,
    size_bound: Option<usize>,
) -> Result<Vec<VertexSet>, OracleError> {
    Oracle::default().enumerate(g, size_bound)
}

/// [`Oracle::report`] with default limits.
pub fn oracle_report(g: &Graph) -> Result<DominationReport, OracleError> {
    Oracle::default().report(g)
}

/// [`Oracle::domination_chain_check`] with default limits.
pub fn domination_chain_check(g: &Graph) -> Result<bool, OracleError> {
    Oracle::default().domination_chain_check(g)
}

fn all_vertices(n: usize) -> Vec<usize> {
    (0..n).collect()
}

fn ones(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

mod search {
    //! Word-parallel subset search, monomorphized on the number of 64-bit
    //! words needed for the edge masks.

    use std::ops::{ControlFlow, RangeInclusive};

    use crate::graph::Graph;

    type Words<const W: usize> = [u64; W];

    struct Masks<const W: usize> {
        dominated: Vec<Words<W>>,
        full: Words<W>,
    }

    impl<const W: usize> Masks<W> {
        fn new(g: &Graph) -> Self {
            let mut dominated = vec![[0u64; W]; g.vertex_count()];
            for (i, &(a, b)) in g.edges().iter().enumerate() {
                let (word, bit) = (i / 64, 1u64 << (i % 64));
                // Edge ab is ve-dominated by a, b and every neighbour of either.
                for end in [a, b] {
                    dominated[end][word] |= bit;
                    for &x in g.neighbors(end) {
                        dominated[x][word] |= bit;
                    }
                }
            }
            let mut full = [0u64; W];
            for i in 0..g.edge_count() {
                full[i / 64] |= 1 << (i % 64);
            }
            Masks { dominated, full }
        }
    }

    #[inline]
    fn or<const W: usize>(a: &Words<W>, b: &Words<W>) -> Words<W> {
        std::array::from_fn(|i| a[i] | b[i])
    }

    #[inline]
    fn and<const W: usize>(a: &Words<W>, b: &Words<W>) -> Words<W> {
        std::array::from_fn(|i| a[i] & b[i])
    }

    #[inline]
    fn has_private<const W: usize>(own: &Words<W>, twice: &Words<W>) -> bool {
        own.iter().zip(twice).any(|(o, t)| o & !t != 0)
    }

    macro_rules! dispatch {
        ($g:expr, $f:ident($($arg:expr),*)) => {{
            let words = $g.edge_count().div_ceil(64).max(1);
            match words {
                1 => $f::<1, _>($($arg),*),
                2 => $f::<2, _>($($arg),*),
                3..=4 => $f::<4, _>($($arg),*),
                5..=8 => $f::<8, _>($($arg),*),
                9..=16 => $f::<16, _>($($arg),*),
                _ => $f::<32, _>($($arg),*),
            }
        }};
    }

    /// Visits inclusion-minimal ve-dominating sets drawn from `candidates`
    /// whose size lies in `sizes`, by increasing size then lexicographically.
    /// Minimality is relative to the whole graph only when `candidates`
    /// covers every vertex that could appear in a minimal set.
    pub(super) fn minimal_sets<F>(
        g: &Graph,
        candidates: &[usize],
        sizes: RangeInclusive<usize>,
        mut visit: F,
    ) where
        F: FnMut(u64) -> ControlFlow<()>,
    {
        assert!(g.vertex_count() <= super::HARD_MAX_VERTICES);
        dispatch!(g, minimal_sets_w(g, candidates, sizes, &mut visit))
    }

    fn minimal_sets_w<const W: usize, F>(
        g: &Graph,
        candidates: &[usize],
        sizes: RangeInclusive<usize>,
        visit: &mut F,
    ) where
        F: FnMut(u64) -> ControlFlow<()>,
    {
        let masks = Masks::<W>::new(g);
        let mut chosen = Vec::with_capacity(candidates.len());
        for k in sizes {
            if k > candidates.len() {
                break;
            }
            let mut ctx = Minimal {
                masks: &masks,
                candidates,
                k,
                chosen: &mut chosen,
                visit: &mut *visit,
            };
            if ctx.descend(0, [0; W], [0; W], 0).is_break() {
                return;
            }
        }
    }

    struct Minimal<'a, const W: usize, F> {
        masks: &'a Masks<W>,
        candidates: &'a [usize],
        k: usize,
        chosen: &'a mut Vec<usize>,
        visit: &'a mut F,
    }

    impl<const W: usize, F: FnMut(u64) -> ControlFlow<()>> Minimal<'_, W, F> {
        fn descend(
            &mut self,
            start: usize,
            covered: Words<W>,
            twice: Words<W>,
            set: u64,
        ) -> ControlFlow<()> {
            let depth = self.chosen.len();
            if depth == self.k {
                if covered == self.masks.full {
                    return (self.visit)(set);
                }
                return ControlFlow::Continue(());
            }
            let last = self.candidates.len() - (self.k - depth);
            for ci in start..=last {
                let v = self.candidates[ci];
                let own = &self.masks.dominated[v];
                let next_twice = or(&twice, &and(&covered, own));
                let next_covered = or(&covered, own);
                if !has_private(own, &next_twice) {
                    continue;
                }
                if !self
                    .chosen
                    .iter()
                    .all(|&u| has_private(&self.masks.dominated[u], &next_twice))
                {
                    continue;
                }
                if next_covered == self.masks.full && depth + 1 < self.k {
                    continue;
                }
                self.chosen.push(v);
                let flow = self.descend(ci + 1, next_covered, next_twice, set | (1 << v));
                self.chosen.pop();
                flow?;
            }
            ControlFlow::Continue(())
        }
    }

    /// Visits every ve-dominating set of exactly `k` candidates.
    pub(super) fn dominating_sets<F>(g: &Graph, candidates: &[usize], k: usize, mut visit: F)
    where
        F: FnMut(u64) -> ControlFlow<()>,
    {
        assert!(g.vertex_count() <= super::HARD_MAX_VERTICES);
        if k > candidates.len() {
            return;
        }
        dispatch!(g, dominating_sets_w(g, candidates, k, &mut visit))
    }

    fn dominating_sets_w<const W: usize, F>(
        g: &Graph,
        candidates: &[usize],
        k: usize,
        visit: &mut F,
    ) where
        F: FnMut(u64) -> ControlFlow<()>,
    {
        fn rec<const W: usize, F: FnMut(u64) -> ControlFlow<()>>(
            masks: &Masks<W>,
            candidates: &[usize],
            start: usize,
            remaining: usize,
            covered: Words<W>,
            set: u64,
            visit: &mut F,
        ) -> ControlFlow<()> {
            if remaining == 0 {
                return if covered == masks.full {
                    visit(set)
                } else {
                    ControlFlow::Continue(())
                };
            }
            for ci in start..=candidates.len() - remaining {
                let v = candidates[ci];
                rec(
                    masks,
                    candidates,
                    ci + 1,
                    remaining - 1,
                    or(&covered, &masks.dominated[v]),
                    set | (1 << v),
                    visit,
                )?;
            }
            ControlFlow::Continue(())
        }
        let masks = Masks::<W>::new(g);
        let _ = rec(&masks, candidates, 0, k, [0; W], 0, visit);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{path, star};

    fn set(n: usize, m: &[usize]) -> VertexSet {
        VertexSet::from_members(n, m.iter().copied())
    }

    fn edges_of(g: &Graph, es: &EdgeSet) -> Vec<(usize, usize)> {
        es.iter().map(|i| g.edge(i)).collect()
    }

    #[test]
    fn dominated_edges_examples() {
        let p4 = path(4);
        assert_eq!(
            edges_of(&p4, &ve_dominated_edges(&p4, 0)),
            vec![(0, 1), (1, 2)]
        );
        assert_eq!(ve_dominated_edges(&p4, 1).len(), 3);
        let k13 = star(3);
        for leaf in 1..=3 {
            assert_eq!(ve_dominated_edges(&k13, leaf).len(), 3);
        }
    }

    #[test]
    fn domination_examples() {
        let p4 = path(4);
        assert!(is_ve_dominating(&p4, &set(4, &[2])));
        assert!(!is_ve_dominating(&p4, &set(4, &[3])));
        assert!(is_ve_dominating(&path(1), &VertexSet::new(1)));
    }

    #[test]
    fn private_edge_examples() {
        let p6 = path(6);
        let s = set(6, &[1, 4]);
        assert_eq!(
            edges_of(&p6, &private_edges(&p6, &s, 1)),
            vec![(0, 1), (1, 2)]
        );
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        for v in g.vertices() {
            assert_eq!(
                private_edges(&g, &set(5, &[v]), v),
                ve_dominated_edges(&g, v)
            );
        }
        assert!(private_edges(&path(4), &set(4, &[1, 2]), 1).is_empty());
    }

    #[test]
    fn minimality_examples() {
        let p4 = path(4);
        assert!(is_minimal_ve_dominating(&p4, &set(4, &[2])));
        assert!(is_minimal_ve_dominating(&p4, &set(4, &[0, 3])));
        assert!(!is_minimal_ve_dominating(&p4, &set(4, &[1, 2])));
        assert!(!is_minimal_by_removal(&p4, &set(4, &[1, 2])));
    }

    #[test]
    fn enumerate_p4() {
        let sets: Vec<Vec<usize>> = enumerate_minimal_ve_dominating_sets(&path(4), None)
            .unwrap()
            .iter()
            .map(|s| s.to_vec())
            .collect();
        assert_eq!(sets, vec![vec![1], vec![2], vec![0, 3]]);
    }

    #[test]
    fn enumerate_p2_and_p6() {
        let p2: Vec<Vec<usize>> = enumerate_minimal_ve_dominating_sets(&path(2), None)
            .unwrap()
            .iter()
            .map(|s| s.to_vec())
            .collect();
        assert_eq!(p2, vec![vec![0], vec![1]]);
        let p6 = enumerate_minimal_ve_dominating_sets(&path(6), None).unwrap();
        assert!(!p6.is_empty());
        assert!(p6.iter().all(|s| s.len() == 2));
    }

    #[test]
    fn reports() {
        let r = oracle_report(&path(6)).unwrap();
        assert_eq!(
            (r.gamma_ve, r.big_gamma_ve, r.is_well_ve_dominated),
            (2, 2, true)
        );
        let r = oracle_report(&path(4)).unwrap();
        assert_eq!(
            (r.gamma_ve, r.big_gamma_ve, r.is_well_ve_dominated),
            (1, 2, false)
        );
        assert_eq!((r.i_ve, r.beta_ve), (1, 2));
        assert_eq!(r.witness_min.to_vec(), vec![1]);
        assert_eq!(r.witness_max.to_vec(), vec![0, 3]);
        let r = oracle_report(&path(1)).unwrap();
        assert_eq!(
            (r.gamma_ve, r.big_gamma_ve, r.is_well_ve_dominated),
            (0, 0, true)
        );
        assert_eq!(r.minimal_size_multiset, BTreeMap::from([(0, 1)]));
    }

    #[test]
    fn chain_examples() {
        assert!(domination_chain_check(&path(6)).unwrap());
        assert!(domination_chain_check(&path(4)).unwrap());
    }

    #[test]
    fn edgeless_graph_is_trivially_wvd() {
        let r = oracle_report(&Graph::empty(3)).unwrap();
        assert_eq!(r.gamma_ve, 0);
        assert!(r.is_well_ve_dominated && r.is_well_ve_covered);
        assert!(r.witness_min.is_empty());
    }

    #[test]
    fn guard_is_enforced() {
        let big = path(25);
        assert_eq!(
            oracle_report(&big),
            Err(OracleError::InstanceTooLarge {
                vertices: 25,
                limit: 24
            })
        );
        assert!(enumerate_minimal_ve_dominating_sets(&big, Some(5)).is_ok());
        assert!(matches!(
            enumerate_minimal_ve_dominating_sets(&path(30), Some(11)),
            Err(OracleError::BoundTooLarge { .. })
        ));
        assert!(matches!(
            enumerate_minimal_ve_dominating_sets(&path(41), Some(3)),
            Err(OracleError::InstanceTooLarge { .. })
        ));
        let wide = Oracle::new(OracleLimits::with_max_vertices(26));
        assert!(wide.gamma_ve(&big).is_ok());
    }

    #[test]
    fn json_keys() {
        let json: serde_json::Value =
            serde_json::from_str(&oracle_report(&path(4)).unwrap().to_json()).unwrap();
        let keys: Vec<&str> = json
            .as_object()
            .unwrap()
            .keys()
            .map(String::as_str)
            .collect();
        for k in [
            "gamma_ve",
            "big_gamma_ve",
            "sizes",
            "witness_min",
            "witness_max",
            "i_ve",
            "beta_ve",
            "wvd",
            "wvc",
            "mode",
        ] {
            assert!(keys.contains(&k), "missing {k}");
        }
        assert_eq!(json["mode"], "full");
        assert_eq!(json["sizes"]["2"], 1);
    }

    #[test]
    fn multiword_edge_masks() {
        // K_12 has 66 edges, so masks span two words.
        let k12 =
            Graph::from_edges(12, (0..12).flat_map(|a| (a + 1..12).map(move |b| (a, b)))).unwrap();
        let sets = enumerate_minimal_ve_dominating_sets(&k12, None).unwrap();
        assert_eq!(sets.len(), 12);
        assert!(sets.iter().all(|s| s.len() == 1));
    }

    #[test]
    fn gamma_and_verdict_shortcuts() {
        let o = Oracle::default();
        assert_eq!(o.gamma_ve(&path(7)).unwrap(), 2);
        assert!(o.is_well_ve_dominated(&path(6)).unwrap());
        assert!(!o.is_well_ve_dominated(&path(5)).unwrap());
        assert!(o.is_well_ve_dominated(&path(3)).unwrap());
    }

    #[test]
    fn find_dominating_set_restricted() {
        let o = Oracle::default();
        let p6 = path(6);
        let found = o
            .find_ve_dominating_set(&p6, 2, &VertexSet::full(6))
            .unwrap()
            .unwrap();
        assert_eq!(found.to_vec(), vec![0, 3]);
        let only_leaves = set(6, &[0, 5]);
        assert_eq!(
            o.find_ve_dominating_set(&p6, 2, &only_leaves).unwrap(),
            None
        );
    }
}
