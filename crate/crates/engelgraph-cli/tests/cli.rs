//! End-to-end tests of the `engelgraph` binary: report shapes, exit codes,
//! determinism across worker counts, and the DOT round trip.

use std::collections::BTreeSet;
use std::process::{Command, Output};

fn engelgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_engelgraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn analyze_s4_json() {
    let out = engelgraph(&["analyze", "--group", "S4", "--format", "json"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["order"], 24);
    assert_eq!(report["gamma"]["vertex_count"], 23);
    assert_eq!(report["gamma"]["strongly_connected"], true);
    assert!(report["gamma"]["diameter"].as_u64().unwrap() <= 4);
    assert_eq!(report["flags"]["soluble"], true);
    assert_eq!(report["jstar_note"], "J = J*");
}

#[test]
fn analyze_d8_degenerate() {
    let out = engelgraph(&["analyze", "--group", "D8", "--format", "json"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["gamma"]["degenerate"], true);
    assert_eq!(report["gamma"]["vertex_count"], 0);
    assert_eq!(report["flags"]["nilpotent"], true);
}

#[test]
fn analyze_psl2_13_disconnected() {
    let out = engelgraph(&["analyze", "--group", "PSL2(13)", "--format", "json"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["gamma"]["strongly_connected"], false);
    assert!(report["gamma"]["diameter"].is_null());
}

#[test]
fn analyze_unknown_group_is_usage_error() {
    let out = engelgraph(&["analyze", "--group", "NoSuchGroup"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn analyze_budget_exceeded_is_usage_error() {
    let out = engelgraph(&["analyze", "--group", "S6", "--budget", "100"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("budget"), "stderr: {err}");
    assert!(err.contains("516961"), "required budget missing: {err}");
}

#[test]
fn budget_env_var_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_engelgraph"))
        .args(["analyze", "--group", "S4", "--format", "json"])
        .env("ENGELGRAPH_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_unknown_suite_is_usage_error() {
    let out = engelgraph(&["verify", "--suite", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_classification_passes_and_is_deterministic_across_jobs() {
    let one = engelgraph(&[
        "verify",
        "--suite",
        "classification",
        "--tier",
        "fast",
        "--format",
        "json",
        "--jobs",
        "1",
    ]);
    assert!(one.status.success());
    let four = engelgraph(&[
        "verify",
        "--suite",
        "classification",
        "--tier",
        "fast",
        "--format",
        "json",
        "--jobs",
        "4",
    ]);
    assert!(four.status.success());
    assert_eq!(stdout(&one), stdout(&four));
}

#[test]
fn verify_diameter_exits_with_claim_failure() {
    // the sharpness claim fails by design: exit code must be 1
    let out = engelgraph(&["verify", "--suite", "diameter", "--tier", "fast"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("soluble-attains-4"));
}

#[test]
fn engel_path_examples() {
    let out = engelgraph(&[
        "engel-path",
        "--group",
        "S3",
        "--from",
        "(1,2)",
        "--to",
        "(1,2,3)",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("length 1"), "{text}");
    assert!(text.contains("depth 2"), "{text}");

    let out = engelgraph(&[
        "engel-path",
        "--group",
        "S3",
        "--from",
        "(1,2,3)",
        "--to",
        "(1,2)",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("unreachable"));
}

#[test]
fn engel_path_rejects_hypercentral_elements() {
    // the central involution of C2xS4 is not a vertex
    let out = engelgraph(&[
        "engel-path",
        "--group",
        "C2xS4",
        "--from",
        "(1,2)",
        "--to",
        "(3,4)",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("hypercenter"), "stderr: {err}");
}

#[test]
fn trace_proof_s4() {
    let out = engelgraph(&["trace-proof", "--group", "S4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("J = J*"), "{text}");
    assert!(text.contains("branch bound: 4"), "{text}");
    assert!(text.contains("bound holds"), "{text}");
}

#[test]
fn export_dot_round_trip() {
    let dir = std::env::temp_dir().join("engelgraph-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("s3.dot");
    let out = engelgraph(&[
        "export-dot",
        "--group",
        "S3",
        "--kind",
        "gamma",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();

    // re-parse the arc list and compare against a fresh build
    let mut parsed: BTreeSet<(u32, u32)> = BTreeSet::new();
    let mut nodes = 0usize;
    for line in text.lines() {
        let line = line.trim().trim_end_matches(';');
        if let Some((a, b)) = line.split_once(" -> ") {
            parsed.insert((a.parse().unwrap(), b.parse().unwrap()));
        } else if line.contains("[label=") {
            nodes += 1;
        }
    }
    assert_eq!(nodes, 5);

    let entry = engelgraph_core::catalog::catalog_entry("S3").unwrap();
    let g = engelgraph_core::catalog::build(&entry.spec).unwrap();
    let gamma = engelgraph_core::engel::build_gamma(
        &g,
        &engelgraph_core::engel::BuildOptions::default(),
    )
    .unwrap();
    let mut expected: BTreeSet<(u32, u32)> = BTreeSet::new();
    for (i, &x) in gamma.vertex_ids().iter().enumerate() {
        for j in gamma.row(i).iter_ones() {
            expected.insert((x, gamma.vertex_ids()[j]));
        }
    }
    assert_eq!(parsed, expected);
}

#[test]
fn export_dot_gamma_n_kind() {
    let dir = std::env::temp_dir().join("engelgraph-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("s3_gamma2.dot");
    let out = engelgraph(&[
        "export-dot",
        "--group",
        "S3",
        "--kind",
        "gamma_n:2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("digraph gamma_2"));
}

#[test]
fn export_dot_commuting_a5_has_59_nodes() {
    let dir = std::env::temp_dir().join("engelgraph-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("a5_commuting.dot");
    let out = engelgraph(&[
        "export-dot",
        "--group",
        "A5",
        "--kind",
        "commuting",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("graph commuting"));
    let nodes = text.lines().filter(|l| l.contains("[label=")).count();
    assert_eq!(nodes, 59);
}

#[test]
fn analyze_reports_are_byte_identical_across_runs() {
    let a = engelgraph(&["analyze", "--group", "S5", "--format", "json"]);
    let b = engelgraph(&["analyze", "--group", "S5", "--format", "json", "--jobs", "2"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn export_dot_degenerate_graph_warns() {
    let dir = std::env::temp_dir().join("engelgraph-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("d8.dot");
    let out = engelgraph(&[
        "export-dot",
        "--group",
        "D8",
        "--kind",
        "gamma",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("degenerate"), "stderr: {err}");
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().filter(|l| l.contains("[label=")).count(), 0);
}

#[test]
fn claim_ids_are_unique_and_anchored() {
    use engelgraph_cli::{suites, Context};
    use engelgraph_core::catalog::Tier;
    use std::collections::BTreeMap;

    let ctx = Context::new();
    let results = suites::run_all_suites(&ctx, Tier::Fast).unwrap();
    let mut anchor_of: BTreeMap<String, &str> = BTreeMap::new();
    for suite in &results {
        for c in &suite.claims {
            let prior = anchor_of.insert(c.id.clone(), c.anchor);
            assert!(prior.is_none(), "duplicate claim id {}", c.id);
            assert!(!c.anchor.is_empty());
        }
    }
}

#[test]
fn analyze_group_file_from_disk() {
    let dir = std::env::temp_dir().join("engelgraph-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c5.json");
    std::fs::write(
        &path,
        "{\"name\":\"C5\",\"degree\":5,\"generators\":[[1,2,3,4,0]],\"expected_order\":5,\"simple\":false}",
    )
    .unwrap();
    let out = engelgraph(&["analyze", "--group", path.to_str().unwrap(), "--format", "json"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["order"], 5);
    assert_eq!(report["flags"]["nilpotent"], true);
}
