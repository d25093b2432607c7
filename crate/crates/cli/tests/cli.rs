use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

use tempfile::TempDir;

struct Workspace {
    dir: TempDir,
}

impl Workspace {
    fn new() -> Self {
        Workspace {
            dir: tempfile::tempdir().unwrap(),
        }
    }

    fn file(&self, name: &str, contents: &str) -> PathBuf {
        let path = self.dir.path().join(name);
        std::fs::File::create(&path)
            .unwrap()
            .write_all(contents.as_bytes())
            .unwrap();
        path
    }
}

fn vedom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vedom"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const P6: &str = "n 6\n0 1\n1 2\n2 3\n3 4\n4 5\n";
const P7: &str = "n 7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n";
const FIGURE: &str = "c figure instance\np cnf 4 3\n1 2 -3 0\n-1 3 4 0\n-2 -3 -4 0\n";

#[test]
fn analyze_json_report() {
    let ws = Workspace::new();
    let p6 = ws.file("p6.el", P6);
    let out = vedom(&["--json", "analyze", p6.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["gamma_ve"], 2);
    assert_eq!(v["big_gamma_ve"], 2);
    assert_eq!(v["wvd"], true);
    assert_eq!(v["mode"], "full");
}

#[test]
fn analyze_bounded() {
    let ws = Workspace::new();
    let p7 = ws.file("p7.el", P7);
    let out = vedom(&["--json", "analyze", "--bound", "2", p7.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["mode"], "size-bounded(2)");
}

#[test]
fn recognize_no_exits_zero() {
    let ws = Workspace::new();
    let p7 = ws.file("p7.el", P7);
    let out = vedom(&["recognize", "--verify", p7.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("verdict no"));
    assert!(text.contains("refutation forbidden-path(iii)"));
    assert!(text.contains("oracle verdict no (agrees)"));
}

#[test]
fn recognize_json_certificate() {
    let ws = Workspace::new();
    let p6 = ws.file("p6.el", P6);
    let out = vedom(&["--json", "recognize", "--verify", p6.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"], "yes");
    assert_eq!(v["case"], "T2");
    assert_eq!(v["certificate"], serde_json::json!([1, 5]));
    assert_eq!(v["verify"]["certificate_passed"], true);
}

#[test]
fn recognize_rejects_non_tree() {
    let ws = Workspace::new();
    let c4 = ws.file("c4.el", "0 1\n1 2\n2 3\n0 3\n");
    let out = vedom(&["recognize", c4.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_input_exit_codes() {
    let ws = Workspace::new();
    let dup = ws.file("dup.el", "n 3\n0 1\n0 1\n");
    let out = vedom(&["analyze", dup.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    assert_eq!(
        vedom(&["analyze", "/nonexistent/graph.el"]).status.code(),
        Some(2)
    );
    assert_eq!(vedom(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        vedom(&["enumerate", "--max-n", "16"]).status.code(),
        Some(2)
    );
}

#[test]
fn oracle_guard_is_input_error() {
    let ws = Workspace::new();
    let edges: String = (1..30).map(|i| format!("0 {i}\n")).collect();
    let big = ws.file("k1_29.el", &edges);
    let out = vedom(&["analyze", big.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let out = vedom(&["--max-vertices", "30", "analyze", big.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn reduce_output_parses() {
    let ws = Workspace::new();
    let star = ws.file("star.el", "0 1\n0 2\n0 3\n0 4\n");
    let out = vedom(&["reduce", star.to_str().unwrap()]);
    let text = stdout(&out);
    assert!(text.contains("# vertex 1 <- 1 2 3 4"));
    assert_eq!(
        vedom::Graph::parse_edge_list(&text).unwrap(),
        vedom::graph::path(2)
    );
}

#[test]
fn expand_and_decompose_round_trip() {
    let ws = Workspace::new();
    let backbone = ws.file("k13.el", "0 1\n0 2\n0 3\n");
    let out = vedom(&["expand", backbone.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let expanded = ws.file("t.el", &stdout(&out));
    let out = vedom(&["decompose", expanded.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(
        text.lines().filter(|l| l.starts_with("component")).count(),
        4
    );
    assert!(text.contains("gamma_ve 4 additive yes"));

    let out = vedom(&["decompose", "--edge", "0", "1", expanded.to_str().unwrap()]);
    assert_eq!(
        stdout(&out)
            .lines()
            .filter(|l| l.starts_with("component"))
            .count(),
        2
    );
    let out = vedom(&["decompose", "--edge", "0", "4", expanded.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn decompose_requires_partition() {
    let ws = Workspace::new();
    let p7 = ws.file("p7.el", P7);
    assert_eq!(
        vedom(&["decompose", p7.to_str().unwrap()]).status.code(),
        Some(2)
    );
}

#[test]
fn from_cnf_gadget_and_decision() {
    let ws = Workspace::new();
    let fig = ws.file("fig.cnf", FIGURE);
    let out = vedom(&["from-cnf", fig.to_str().unwrap()]);
    let g = vedom::Graph::parse_edge_list(&stdout(&out)).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (28, 35));

    let out = vedom(&["--json", "from-cnf", "--decide", fig.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["size_2n_set_exists"], true);
    assert!(v["consistent_assignment"].is_array());
    assert_eq!(v["map"]["apex"], 27);

    let bad = ws.file("bad.cnf", "p cnf 3 1\n1 -1 2 0\n");
    assert_eq!(
        vedom(&["from-cnf", bad.to_str().unwrap()]).status.code(),
        Some(2)
    );
}

#[test]
fn enumerate_is_clean_and_deterministic() {
    let a = vedom(&["--threads", "2", "enumerate", "--max-n", "9", "--lemmas"]);
    assert_eq!(a.status.code(), Some(0));
    let b = vedom(&["--threads", "1", "enumerate", "--max-n", "9", "--lemmas"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("mismatches: 0"));

    let j = vedom(&["--json", "enumerate", "--max-n", "6"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&j)).unwrap();
    assert_eq!(
        v["cross_validation"]["recognizer_oracle_mismatches"],
        serde_json::json!([])
    );
    assert_eq!(v["cross_validation"]["trees_checked"]["6"], 6);
}

#[test]
fn stdin_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_vedom"))
        .args(["analyze", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(P6.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(stdout(&out).contains("gamma_ve 2"));
}
