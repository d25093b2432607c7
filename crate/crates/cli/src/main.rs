use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde_json::json;
use vedom::domination::HARD_MAX_VERTICES;
use vedom::harness::validate::ValidationReport;
use vedom::{
    cross_validate, expand_backbone, lemma_suite, recognize, reduce, sat_decide_via_graph,
    sat_to_graph, satisfying_assignment_via_graph, unit_cut_decompose, unit_cut_split,
    unit_partition, verify_certificate, CnfInstance, DominationReport, Graph, LemmaConfig, Oracle,
    OracleLimits, RecognitionCase, Refutation,
};

/// ve-domination analysis of graphs and trees.
///
/// Graphs are read in edge-list format: an optional `n <count>` header, then
/// one `u v` pair per line; `#` starts a comment. Use `-` to read stdin.
#[derive(Debug, Parser)]
#[command(name = "vedom", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Vertex limit for full minimal-set enumeration.
    #[arg(long, global = true, value_name = "N")]
    max_vertices: Option<usize>,
    /// Worker threads for exhaustive sweeps (default: all cores).
    #[arg(long, global = true, value_name = "K")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact γ_ve, Γ_ve, i_ve, β_ve and the minimal-set size profile.
    Analyze {
        graph: PathBuf,
        /// Only enumerate minimal sets of at most this many vertices.
        #[arg(long, value_name = "B")]
        bound: Option<usize>,
    },
    /// Decide whether a tree is well-ve-dominated.
    Recognize {
        tree: PathBuf,
        /// Re-check the certificate and compare with the oracle.
        #[arg(long)]
        verify: bool,
    },
    /// Collapse vertices with identical open neighbourhoods.
    Reduce { graph: PathBuf },
    /// Attach a pendant path of length two to every vertex of a tree.
    Expand { backbone: PathBuf },
    /// Delete the backbone edges of a well-ve-dominated reduced tree.
    Decompose {
        tree: PathBuf,
        /// Delete only the backbone edge U-V.
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        edge: Option<Vec<usize>>,
    },
    /// Build the 3-SAT gadget graph from a DIMACS CNF file.
    FromCnf {
        dimacs: PathBuf,
        /// Search the gadget for size-2n ve-dominating sets.
        #[arg(long)]
        decide: bool,
    },
    /// Compare recognizer and oracle on every tree up to N vertices.
    Enumerate {
        #[arg(long, value_name = "N")]
        max_n: usize,
        /// Also run the structural property suite.
        #[arg(long)]
        lemmas: bool,
    },
}

/// Result of a command that ran to completion.
enum Status {
    Ok,
    Violated,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, status)) => {
            print!("{out}");
            match status {
                Status::Ok => ExitCode::SUCCESS,
                Status::Violated => ExitCode::from(1),
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<(String, Status)> {
    if let Some(k) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
            .context("configuring thread pool")?;
    }
    let limits = match cli.max_vertices {
        Some(n) if n > HARD_MAX_VERTICES => {
            bail!("--max-vertices {n} exceeds the hard limit {HARD_MAX_VERTICES}")
        }
        Some(n) => OracleLimits::with_max_vertices(n),
        None => OracleLimits::default(),
    };
    let oracle = Oracle::new(limits);
    match &cli.command {
        Command::Analyze { graph, bound } => {
            analyze(cli.json, &oracle, &read_graph(graph)?, *bound)
        }
        Command::Recognize { tree, verify } => {
            recognize_cmd(cli.json, &oracle, &read_graph(tree)?, *verify)
        }
        Command::Reduce { graph } => reduce_cmd(cli.json, &read_graph(graph)?),
        Command::Expand { backbone } => expand_cmd(cli.json, &read_graph(backbone)?),
        Command::Decompose { tree, edge } => {
            decompose_cmd(cli.json, &oracle, &read_graph(tree)?, edge.as_deref())
        }
        Command::FromCnf { dimacs, decide } => from_cnf(cli.json, &oracle, dimacs, *decide),
        Command::Enumerate { max_n, lemmas } => enumerate_cmd(cli.json, &oracle, *max_n, *lemmas),
    }
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        return std::io::read_to_string(std::io::stdin()).context("reading stdin");
    }
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = read_input(path)?;
    Graph::parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))
}

fn require_tree(g: &Graph) -> Result<()> {
    if !g.is_tree() {
        bail!("input graph is not a tree");
    }
    Ok(())
}

fn to_json(value: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serializes");
    s.push('\n');
    s
}

fn graph_json(g: &Graph) -> serde_json::Value {
    json!({ "vertices": g.vertex_count(), "edges": g.edges() })
}

fn analyze(
    as_json: bool,
    oracle: &Oracle,
    g: &Graph,
    bound: Option<usize>,
) -> Result<(String, Status)> {
    let report = match bound {
        Some(b) => oracle.bounded_report(g, b)?,
        None => oracle.report(g)?,
    };
    if as_json {
        return Ok((to_json(&report), Status::Ok));
    }
    Ok((render_report(g, &report), Status::Ok))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn render_report(g: &Graph, r: &DominationReport) -> String {
    let mut out = String::new();
    let profile: Vec<String> = r
        .minimal_size_multiset
        .iter()
        .map(|(k, c)| format!("{k}:{c}"))
        .collect();
    writeln!(out, "vertices {}", g.vertex_count()).unwrap();
    writeln!(out, "edges {}", g.edge_count()).unwrap();
    writeln!(out, "mode {}", r.enumeration_mode).unwrap();
    writeln!(out, "gamma_ve {}", r.gamma_ve).unwrap();
    writeln!(out, "Gamma_ve {}", r.big_gamma_ve).unwrap();
    writeln!(out, "i_ve {}", r.i_ve).unwrap();
    writeln!(out, "beta_ve {}", r.beta_ve).unwrap();
    writeln!(out, "minimal set sizes {}", profile.join(" ")).unwrap();
    writeln!(out, "witness_min {}", r.witness_min).unwrap();
    writeln!(out, "witness_max {}", r.witness_max).unwrap();
    writeln!(out, "well-ve-dominated {}", yes_no(r.is_well_ve_dominated)).unwrap();
    writeln!(out, "well-ve-covered {}", yes_no(r.is_well_ve_covered)).unwrap();
    out
}

fn recognize_cmd(
    as_json: bool,
    oracle: &Oracle,
    t: &Graph,
    verify: bool,
) -> Result<(String, Status)> {
    require_tree(t)?;
    let r = recognize(t)?;
    let mut status = Status::Ok;
    let mut checks = serde_json::Map::new();
    let mut lines = Vec::new();
    if verify {
        if let Some(cert) = &r.certificate {
            let check = verify_certificate(&r.reduced_tree, cert);
            if !check.passed {
                status = Status::Violated;
            }
            lines.push(format!(
                "certificate check {}",
                if check.passed { "passed" } else { "failed" }
            ));
            checks.insert("certificate_passed".into(), json!(check.passed));
        }
        match oracle.is_well_ve_dominated(t) {
            Ok(wvd) => {
                let agrees = wvd == r.is_yes();
                if !agrees {
                    status = Status::Violated;
                }
                lines.push(format!(
                    "oracle verdict {} ({})",
                    yes_no(wvd),
                    if agrees { "agrees" } else { "DISAGREES" }
                ));
                checks.insert("oracle_wvd".into(), json!(wvd));
            }
            Err(e) => {
                lines.push(format!("oracle skipped: {e}"));
                checks.insert("oracle_wvd".into(), serde_json::Value::Null);
            }
        }
    }

    if as_json {
        let mut v = serde_json::to_value(&r)?;
        v["reduced_tree"] = graph_json(&r.reduced_tree);
        v["gamma_ve"] = json!(r.gamma_ve());
        if verify {
            v["verify"] = serde_json::Value::Object(checks);
        }
        return Ok((to_json(&v), status));
    }

    let mut out = String::new();
    writeln!(out, "verdict {}", yes_no(r.is_yes())).unwrap();
    let case = match r.case {
        RecognitionCase::T1 => "T1",
        RecognitionCase::T2 => "T2",
        RecognitionCase::Rejected => "rejected",
    };
    writeln!(out, "case {case}").unwrap();
    writeln!(out, "reduced order {}", r.reduced_tree.vertex_count()).unwrap();
    if let Some(gamma) = r.gamma_ve() {
        writeln!(out, "gamma_ve {gamma}").unwrap();
    }
    if let Some(p) = &r.partition {
        let orig = |v: usize| r.representatives[v];
        for u in &p.units {
            writeln!(
                out,
                "unit leaf {} support {} backbone {}",
                orig(u.leaf),
                orig(u.support),
                orig(u.backbone)
            )
            .unwrap();
        }
    }
    if let Some(cert) = &r.certificate {
        let members: Vec<String> = cert
            .iter()
            .map(|v| r.representatives[v].to_string())
            .collect();
        writeln!(out, "certificate {{{}}}", members.join(", ")).unwrap();
    }
    if let Some(why) = &r.refutation {
        writeln!(out, "refutation {why}").unwrap();
        if let Refutation::ForbiddenPath(w) = why {
            let path: Vec<String> = w
                .path
                .iter()
                .map(|&v| r.representatives[v].to_string())
                .collect();
            writeln!(out, "witness in input {}", path.join("-")).unwrap();
        }
    }
    for line in lines {
        writeln!(out, "{line}").unwrap();
    }
    Ok((out, status))
}

fn reduce_cmd(as_json: bool, g: &Graph) -> Result<(String, Status)> {
    let map = reduce(g);
    if as_json {
        let mut v = serde_json::to_value(&map)?;
        v["reduced_graph"] = graph_json(&map.reduced_graph);
        return Ok((to_json(&v), Status::Ok));
    }
    let mut out = String::new();
    for (c, members) in map.class_members().iter().enumerate() {
        let list: Vec<String> = members.iter().map(usize::to_string).collect();
        writeln!(out, "# vertex {c} <- {}", list.join(" ")).unwrap();
    }
    out.push_str(&map.reduced_graph.to_edge_list());
    Ok((out, Status::Ok))
}

fn expand_cmd(as_json: bool, r: &Graph) -> Result<(String, Status)> {
    let (t, p) = expand_backbone(r)?;
    if as_json {
        return Ok((
            to_json(&json!({ "graph": graph_json(&t), "partition": p })),
            Status::Ok,
        ));
    }
    let n = r.vertex_count();
    let mut out = format!(
        "# backbone 0..{n}, supports {n}..{}, leaves {}..{}\n",
        2 * n,
        2 * n,
        3 * n
    );
    out.push_str(&t.to_edge_list());
    Ok((out, Status::Ok))
}

fn decompose_cmd(
    as_json: bool,
    oracle: &Oracle,
    t: &Graph,
    edge: Option<&[usize]>,
) -> Result<(String, Status)> {
    let p = unit_partition(t).context("tree has no unit partition")?;
    let parts = match edge {
        Some([u, v]) => unit_cut_split(t, &p, *u, *v)?,
        _ => unit_cut_decompose(t, &p)?,
    };
    let whole = oracle.gamma_ve(t).ok();
    let gammas: Vec<Option<usize>> = parts.iter().map(|(g, _)| oracle.gamma_ve(g).ok()).collect();
    let sum: Option<usize> = gammas.iter().copied().sum();
    let additive = match (whole, sum) {
        (Some(w), Some(s)) => Some(w == s),
        _ => None,
    };
    let status = if additive == Some(false) {
        Status::Violated
    } else {
        Status::Ok
    };

    if as_json {
        let components: Vec<serde_json::Value> = parts
            .iter()
            .zip(&gammas)
            .map(|((g, members), gamma)| json!({ "vertices": members, "edges": g.edges(), "gamma_ve": gamma }))
            .collect();
        let v = json!({ "components": components, "gamma_ve": whole, "additive": additive });
        return Ok((to_json(&v), status));
    }
    let mut out = String::new();
    for (k, ((_, members), gamma)) in parts.iter().zip(&gammas).enumerate() {
        let list: Vec<String> = members.iter().map(usize::to_string).collect();
        let gamma = gamma.map_or("?".to_string(), |g| g.to_string());
        writeln!(
            out,
            "component {k} vertices {} gamma_ve {gamma}",
            list.join(" ")
        )
        .unwrap();
    }
    match (whole, additive) {
        (Some(w), Some(a)) => writeln!(out, "gamma_ve {w} additive {}", yes_no(a)).unwrap(),
        _ => writeln!(out, "gamma_ve not computed (oracle limit)").unwrap(),
    }
    Ok((out, status))
}

fn from_cnf(as_json: bool, oracle: &Oracle, path: &Path, decide: bool) -> Result<(String, Status)> {
    let text = read_input(path)?;
    let f =
        CnfInstance::parse_dimacs(&text).with_context(|| format!("parsing {}", path.display()))?;
    let map = sat_to_graph(&f);
    let n = f.variable_count();

    let decision = if decide {
        let exists = sat_decide_via_graph(&f, oracle)?;
        let assignment = satisfying_assignment_via_graph(&f, oracle)?;
        Some((exists, assignment))
    } else {
        None
    };
    let signed = |a: &[bool]| -> Vec<i64> {
        a.iter()
            .enumerate()
            .map(|(i, &t)| if t { i as i64 + 1 } else { -(i as i64 + 1) })
            .collect()
    };

    if as_json {
        let mut v = json!({ "graph": graph_json(&map.graph), "map": map });
        if let Some((exists, assignment)) = &decision {
            v["size_2n_set_exists"] = json!(exists);
            v["consistent_assignment"] = json!(assignment.as_deref().map(signed));
        }
        return Ok((to_json(&v), Status::Ok));
    }
    let Some((exists, assignment)) = decision else {
        let mut out = format!(
            "# variables {n}: vertices 6i..6i+5 are x y u u' w z; clauses {}..{}; apex {}\n",
            6 * n,
            map.apex,
            map.apex
        );
        out.push_str(&map.graph.to_edge_list());
        return Ok((out, Status::Ok));
    };
    let mut out = String::new();
    writeln!(out, "vertices {}", map.graph.vertex_count()).unwrap();
    writeln!(out, "edges {}", map.graph.edge_count()).unwrap();
    writeln!(
        out,
        "size-{} ve-dominating set {}",
        2 * n,
        if exists { "exists" } else { "absent" }
    )
    .unwrap();
    match assignment {
        Some(a) => {
            let lits: Vec<String> = signed(&a).iter().map(i64::to_string).collect();
            writeln!(
                out,
                "literal-consistent set found, assignment {}",
                lits.join(" ")
            )
            .unwrap();
        }
        None => writeln!(out, "no literal-consistent set, formula unsatisfiable").unwrap(),
    }
    Ok((out, Status::Ok))
}

fn enumerate_cmd(
    as_json: bool,
    oracle: &Oracle,
    max_n: usize,
    lemmas: bool,
) -> Result<(String, Status)> {
    let cross = cross_validate(max_n, oracle)?;
    let suite = if lemmas {
        Some(lemma_suite(&LemmaConfig::with_max_order(max_n), oracle)?)
    } else {
        None
    };
    let clean = cross.is_clean() && suite.as_ref().is_none_or(ValidationReport::is_clean);
    eprintln!(
        "elapsed {:.2}s",
        (cross.elapsed + suite.as_ref().map(|s| s.elapsed).unwrap_or_default()).as_secs_f64()
    );
    let status = if clean { Status::Ok } else { Status::Violated };
    if as_json {
        return Ok((
            to_json(&json!({ "cross_validation": cross, "lemmas": suite })),
            status,
        ));
    }
    let mut out = cross.render();
    if let Some(s) = &suite {
        out.push_str("property suite\n");
        for (check, count) in &s.checks_run {
            writeln!(
                out,
                "{check}: {count} checked, {} failed",
                s.failures_for(*check)
            )
            .unwrap();
        }
        for f in &s.lemma_failures {
            writeln!(out, "FAILED {} on {:?}: {}", f.check, f.edges, f.detail).unwrap();
        }
    }
    for m in &cross.recognizer_oracle_mismatches {
        writeln!(out, "MISMATCH order {} edges {:?}", m.order, m.edges).unwrap();
    }
    Ok((out, status))
}
