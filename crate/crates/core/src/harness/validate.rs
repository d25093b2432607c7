//! Recognizer-versus-oracle sweeps and structural property checks over all
//! small trees.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use super::trees::{all_free_trees, enumerate_free_trees, OrderOutOfRange};
use crate::constructions::backbone::unit_cut_split;
use crate::domination::{is_minimal_ve_dominating, Oracle, OracleError};
use crate::graph::Graph;
use crate::recognizer::{
    find_forbidden_configuration, recognize, verify_certificate, RecognitionCase,
};
use crate::reduction::reduce;
use crate::sets::VertexSet;

/// Largest order swept with full per-tree oracle enumeration.
pub const ORACLE_SWEEP_MAX: usize = 15;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Order(#[from] OrderOutOfRange),
    #[error("order {order} exceeds the oracle sweep limit {limit}")]
    BeyondOracleSweep { order: usize, limit: usize },
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// Verdict of `G` equals verdict of `R(G)`.
    ReductionTransport,
    /// Components of `G - {u, v}` for a qualifying cut edge `uv`.
    CutEdgeComponents,
    /// Components of `G - c` for a qualifying cut vertex `c`.
    CutVertexComponents,
    /// A forbidden-path witness implies the oracle says no.
    ForbiddenPathSoundness,
    /// Well-ve-dominated implies `i_ve = β_ve`.
    WvdImpliesWvc,
    /// `γ_ve ≤ i_ve ≤ β_ve ≤ Γ_ve`.
    Chain,
    /// γ_ve splits across the two sides of a unit-cut edge and over all unit bodies.
    UnitCutAdditivity,
    /// The certificate of a T2 recognition is independent, exact, and
    /// its supports form a minimal set.
    Certificate,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("check serializes");
        f.write_str(s.as_str().expect("unit variant"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub order: usize,
    pub edges: Vec<(usize, usize)>,
    pub recognizer: bool,
    pub oracle: bool,
    pub recognizer_gamma: Option<usize>,
    pub oracle_gamma: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaFailure {
    pub check: Check,
    pub order: usize,
    pub edges: Vec<(usize, usize)>,
    pub detail: String,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct ValidationReport {
    pub max_order: usize,
    pub trees_checked: BTreeMap<usize, usize>,
    pub recognizer_oracle_mismatches: Vec<Mismatch>,
    pub wvd_tree_census: BTreeMap<usize, usize>,
    pub lemma_failures: Vec<LemmaFailure>,
    /// Instances examined per check.
    pub checks_run: BTreeMap<Check, usize>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.recognizer_oracle_mismatches.is_empty() && self.lemma_failures.is_empty()
    }

    pub fn total_trees(&self) -> usize {
        self.trees_checked.values().sum()
    }

    pub fn failures_for(&self, check: Check) -> usize {
        self.lemma_failures
            .iter()
            .filter(|f| f.check == check)
            .count()
    }

    /// Plain-text summary: one census row per order, then per-check counts.
    pub fn render(&self) -> String {
        let mut out = String::from("order  trees  wvd\n");
        for (n, trees) in &self.trees_checked {
            let wvd = self.wvd_tree_census.get(n).copied().unwrap_or(0);
            out.push_str(&format!("{n:>5}  {trees:>5}  {wvd:>3}\n"));
        }
        out.push_str(&format!(
            "mismatches: {}\n",
            self.recognizer_oracle_mismatches.len()
        ));
        for (check, count) in &self.checks_run {
            out.push_str(&format!(
                "{check}: {count} checked, {} failed\n",
                self.failures_for(*check)
            ));
        }
        out
    }

    fn absorb(&mut self, outcome: TreeOutcome) {
        *self.trees_checked.entry(outcome.order).or_default() += 1;
        if outcome.wvd {
            *self.wvd_tree_census.entry(outcome.order).or_default() += 1;
        }
        self.recognizer_oracle_mismatches.extend(outcome.mismatch);
        self.lemma_failures.extend(outcome.failures);
        for (check, n) in outcome.checks {
            *self.checks_run.entry(check).or_default() += n;
        }
    }
}

#[derive(Default)]
struct TreeOutcome {
    order: usize,
    wvd: bool,
    mismatch: Option<Mismatch>,
    failures: Vec<LemmaFailure>,
    checks: Vec<(Check, usize)>,
}

impl TreeOutcome {
    fn new(t: &Graph) -> Self {
        TreeOutcome {
            order: t.vertex_count(),
            ..Default::default()
        }
    }

    fn record(&mut self, check: Check, t: &Graph, ok: bool, detail: impl FnOnce() -> String) {
        match self.checks.iter_mut().find(|(c, _)| *c == check) {
            Some((_, n)) => *n += 1,
            None => self.checks.push((check, 1)),
        }
        if !ok {
            self.failures.push(LemmaFailure {
                check,
                order: t.vertex_count(),
                edges: t.edges().to_vec(),
                detail: detail(),
            });
        }
    }
}

fn check_order(max_n: usize) -> Result<(), HarnessError> {
    if max_n > ORACLE_SWEEP_MAX {
        return Err(HarnessError::BeyondOracleSweep {
            order: max_n,
            limit: ORACLE_SWEEP_MAX,
        });
    }
    Ok(())
}

fn sweep<F>(trees: &[Graph], per_tree: F) -> Result<Vec<TreeOutcome>, OracleError>
where
    F: Fn(&Graph) -> Result<TreeOutcome, OracleError> + Sync + Send,
{
    trees.par_iter().map(per_tree).collect()
}

/// Compares recognizer and oracle on every tree with at most `max_n`
/// vertices, and checks each T2 certificate.
pub fn cross_validate(max_n: usize, oracle: &Oracle) -> Result<ValidationReport, HarnessError> {
    check_order(max_n)?;
    let start = Instant::now();
    let trees = all_free_trees(max_n)?;
    let outcomes = sweep(&trees, |t| cross_validate_tree(t, oracle))?;
    let mut report = ValidationReport {
        max_order: max_n,
        ..Default::default()
    };
    outcomes.into_iter().for_each(|o| report.absorb(o));
    report.elapsed = start.elapsed();
    Ok(report)
}

fn cross_validate_tree(t: &Graph, oracle: &Oracle) -> Result<TreeOutcome, OracleError> {
    let mut out = TreeOutcome::new(t);
    let result = recognize(t).expect("enumerated graphs are trees");
    let oracle_wvd = oracle.is_well_ve_dominated(t)?;
    out.wvd = oracle_wvd;
    let oracle_gamma = if oracle_wvd {
        Some(oracle.gamma_ve(t)?)
    } else {
        None
    };
    let recognizer_gamma = result.gamma_ve();
    if result.is_yes() != oracle_wvd || recognizer_gamma != oracle_gamma {
        out.mismatch = Some(Mismatch {
            order: t.vertex_count(),
            edges: t.edges().to_vec(),
            recognizer: result.is_yes(),
            oracle: oracle_wvd,
            recognizer_gamma,
            oracle_gamma,
        });
    }
    if result.case == RecognitionCase::T2 {
        let r = &result.reduced_tree;
        let p = result.partition.as_ref().expect("T2 carries a partition");
        let cert = result
            .certificate
            .as_ref()
            .expect("T2 carries a certificate");
        let check = verify_certificate(r, cert);
        let mut within = p.leaves();
        within.union_with(&p.supports());
        let ok = check.passed
            && cert.is_subset(&within)
            && r.vertex_count() == 3 * p.len()
            && is_minimal_ve_dominating(r, &p.supports());
        out.record(Check::Certificate, t, ok, || {
            format!("certificate {cert} rejected: {check:?}")
        });
    }
    Ok(out)
}

/// Parameters of [`lemma_suite`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LemmaConfig {
    /// Trees up to this order get verdict-level checks.
    pub max_order: usize,
    /// Trees up to this order also get full reports (`i_ve`, `β_ve`, chain).
    pub report_max_order: usize,
    /// Random leaf-duplicated graphs for the reduction transport check.
    pub transport_samples: usize,
    pub transport_max_order: usize,
    pub seed: u64,
}

impl Default for LemmaConfig {
    fn default() -> Self {
        LemmaConfig {
            max_order: 15,
            report_max_order: 12,
            transport_samples: 200,
            transport_max_order: 12,
            seed: 7,
        }
    }
}

impl LemmaConfig {
    pub fn with_max_order(max_order: usize) -> Self {
        let d = Self::default();
        LemmaConfig {
            max_order,
            report_max_order: d.report_max_order.min(max_order),
            transport_max_order: d.transport_max_order.min(max_order.max(2)),
            ..d
        }
    }
}

/// Structural claims checked against the oracle over all small trees, plus
/// seeded random leaf duplications for the reduction transport.
pub fn lemma_suite(
    config: &LemmaConfig,
    oracle: &Oracle,
) -> Result<ValidationReport, HarnessError> {
    check_order(config.max_order)?;
    check_order(config.transport_max_order)?;
    let start = Instant::now();
    let trees = all_free_trees(config.max_order)?;
    let outcomes = sweep(&trees, |t| lemma_checks(t, config, oracle))?;
    let mut report = ValidationReport {
        max_order: config.max_order,
        ..Default::default()
    };
    outcomes.into_iter().for_each(|o| report.absorb(o));

    let samples = leaf_duplicated_samples(config)?;
    let transport = sweep(&samples, |g| {
        let mut out = TreeOutcome::new(g);
        transport_check(g, oracle, &mut out)?;
        Ok(out)
    })?;
    for o in transport {
        report.lemma_failures.extend(o.failures);
        for (check, n) in o.checks {
            *report.checks_run.entry(check).or_default() += n;
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

fn lemma_checks(
    t: &Graph,
    config: &LemmaConfig,
    oracle: &Oracle,
) -> Result<TreeOutcome, OracleError> {
    let mut out = TreeOutcome::new(t);
    let n = t.vertex_count();
    let wvd = oracle.is_well_ve_dominated(t)?;
    out.wvd = wvd;

    if n <= config.transport_max_order {
        transport_check(t, oracle, &mut out)?;
    }

    if let Some(w) = find_forbidden_configuration(t).expect("tree input") {
        out.record(Check::ForbiddenPathSoundness, t, !wvd, || {
            format!("witness {:?} on a wvd tree", w.path)
        });
    }

    if wvd {
        for &(u, v) in t.edges() {
            if has_long_arm(t, u, v) && has_long_arm(t, v, u) {
                let removed = VertexSet::from_members(n, [u, v]);
                let bad = non_wvd_component(t, &removed, oracle)?;
                out.record(Check::CutEdgeComponents, t, bad.is_none(), || {
                    format!(
                        "deleting {u}, {v} leaves non-wvd component {:?}",
                        bad.clone().unwrap_or_default()
                    )
                });
            }
        }
        for c in t.vertices() {
            if t.neighbors(c)
                .iter()
                .filter(|&&x| has_long_arm(t, x, c))
                .count()
                >= 2
            {
                let removed = VertexSet::from_members(n, [c]);
                let bad = non_wvd_component(t, &removed, oracle)?;
                out.record(Check::CutVertexComponents, t, bad.is_none(), || {
                    format!(
                        "deleting {c} leaves non-wvd component {:?}",
                        bad.clone().unwrap_or_default()
                    )
                });
            }
        }
    }

    if n <= config.report_max_order {
        let report = oracle.report(t)?;
        out.record(Check::Chain, t, report.chain_holds(), || {
            format!("{report:?}")
        });
        if wvd {
            out.record(Check::WvdImpliesWvc, t, report.is_well_ve_covered, || {
                format!("i_ve = {}, beta_ve = {}", report.i_ve, report.beta_ve)
            });
        }
    }

    let result = recognize(t).expect("tree input");
    if result.case == RecognitionCase::T2 && result.reduced_tree.vertex_count() == n {
        additivity_checks(t, &result, oracle, &mut out)?;
    }
    Ok(out)
}

/// `a` has a neighbour other than `b` that is not a leaf, i.e. `a` starts a
/// path of length two avoiding `b`.
fn has_long_arm(t: &Graph, a: usize, b: usize) -> bool {
    t.neighbors(a).iter().any(|&x| x != b && t.degree(x) > 1)
}

fn non_wvd_component(
    t: &Graph,
    removed: &VertexSet,
    oracle: &Oracle,
) -> Result<Option<Vec<usize>>, OracleError> {
    let (rest, back) = t.induced_delete(removed);
    let original: Vec<usize> = {
        let mut inv = vec![0; rest.vertex_count()];
        for (v, m) in back.iter().enumerate() {
            if let Some(i) = m {
                inv[*i] = v;
            }
        }
        inv
    };
    for (g, members) in rest.component_graphs() {
        if !oracle.is_well_ve_dominated(&g)? {
            return Ok(Some(members.into_iter().map(|i| original[i]).collect()));
        }
    }
    Ok(None)
}

fn transport_check(g: &Graph, oracle: &Oracle, out: &mut TreeOutcome) -> Result<(), OracleError> {
    let reduced = reduce(g).reduced_graph;
    let a = oracle.report(g)?;
    let b = oracle.report(&reduced)?;
    let ok = a.is_well_ve_dominated == b.is_well_ve_dominated && a.gamma_ve == b.gamma_ve;
    out.record(Check::ReductionTransport, g, ok, || {
        format!(
            "G: wvd {} gamma {}; R(G): wvd {} gamma {}",
            a.is_well_ve_dominated, a.gamma_ve, b.is_well_ve_dominated, b.gamma_ve
        )
    });
    Ok(())
}

fn additivity_checks(
    t: &Graph,
    result: &crate::recognizer::RecognitionResult,
    oracle: &Oracle,
    out: &mut TreeOutcome,
) -> Result<(), OracleError> {
    let p = result.partition.as_ref().expect("T2 carries a partition");
    let whole = oracle.gamma_ve(t)?;
    for &(u, v) in &p.backbone_edges {
        let halves = unit_cut_split(t, p, u, v).expect("validated partition");
        let mut sum = 0;
        for (g, _) in &halves {
            sum += oracle.gamma_ve(g)?;
        }
        out.record(
            Check::UnitCutAdditivity,
            t,
            sum == whole && halves.len() == 2,
            || format!("cutting {u}-{v}: {sum} != {whole}"),
        );
    }
    out.record(Check::UnitCutAdditivity, t, whole == p.len(), || {
        format!("{} unit bodies but gamma {whole}", p.len())
    });
    Ok(())
}

/// Seeded random trees grown by repeatedly adding a twin of a leaf.
pub fn leaf_duplicated_samples(config: &LemmaConfig) -> Result<Vec<Graph>, HarnessError> {
    let max = config.transport_max_order;
    if max < 3 {
        return Ok(Vec::new());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let base_max = (max - 1).min(8);
    let bases: Vec<Vec<Graph>> = (2..=base_max)
        .map(|b| enumerate_free_trees(b).map(Iterator::collect))
        .collect::<Result<_, _>>()?;
    let mut out = Vec::with_capacity(config.transport_samples);
    for _ in 0..config.transport_samples {
        let b = rng.random_range(2..=base_max);
        let family = &bases[b - 2];
        let base = &family[rng.random_range(0..family.len())];
        let extra = rng.random_range(1..=max - b);
        let mut edges = base.edges().to_vec();
        let mut degree: Vec<usize> = base.vertices().map(|v| base.degree(v)).collect();
        let mut neighbour_of_leaf: Vec<Option<usize>> = vec![None; b];
        for &(x, y) in &edges {
            neighbour_of_leaf[x] = Some(y);
            neighbour_of_leaf[y] = Some(x);
        }
        for _ in 0..extra {
            let leaves: Vec<usize> = (0..degree.len()).filter(|&v| degree[v] == 1).collect();
            let leaf = leaves[rng.random_range(0..leaves.len())];
            let support = neighbour_of_leaf[leaf].expect("leaf has a neighbour");
            let new = degree.len();
            edges.push((support, new));
            degree[support] += 1;
            degree.push(1);
            neighbour_of_leaf.push(Some(support));
        }
        let mut perm: Vec<usize> = (0..degree.len()).collect();
        perm.shuffle(&mut rng);
        let g = Graph::from_edges(degree.len(), edges).expect("growth keeps the graph simple");
        out.push(g.relabel(&perm));
    }
    Ok(out)
}
