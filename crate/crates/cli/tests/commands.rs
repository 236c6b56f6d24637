use std::process::{Command, Output};

use lollipop_cli::decode_graph6;
use lollipop_core::constructions::lollipop;
use lollipop_core::containment::subgraph_contains;
use lollipop_core::graph::complete;
use serde_json::Value;

fn lollipop_cmd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lollipop"))
        .args(args)
        .env("LOLLIPOP_THREADS", "1")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn construct_graph6() {
    let o = lollipop_cmd(&["construct", "--variant", "H", "--n", "10", "--p", "2", "--q", "3", "--format", "graph6"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 1);
    let g = decode_graph6(out.trim()).unwrap();
    assert_eq!(g.edge_count(), 33);
    assert!(String::from_utf8_lossy(&o.stderr).contains("33 edges"));
}

#[test]
fn construct_predicted_json() {
    let o = lollipop_cmd(&["construct", "--variant", "predicted", "--k", "4", "--l", "3", "--p", "2", "--n", "20"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v[0]["spec"]["variant"], "HPrime");
    assert_eq!(v[0]["edges"], v[0]["formula_edges"]);
}

#[test]
fn ex_brute_triangle() {
    let o = lollipop_cmd(&["ex-brute", "--n", "5", "--pattern-graph6", "Bw"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["max_edges"], 6);
    assert_eq!(v["exact"], true);
    for w in v["witnesses"].as_array().unwrap() {
        let g = decode_graph6(w.as_str().unwrap()).unwrap();
        assert!(subgraph_contains(&g, &complete(3).unwrap()).is_absent());
    }
}

#[test]
fn blowup_and_contains() {
    let o = lollipop_cmd(&["blowup", "--k", "3", "--l", "2", "--p", "2"]);
    let v = json(&o);
    assert_eq!((v["order"].as_u64(), v["edges"].as_u64()), (Some(10), Some(15)));
    let host = v["graph6"].as_str().unwrap().to_string();
    let o = lollipop_cmd(&["contains", "--host", &host, "--k", "3", "--l", "2", "--p", "2", "--format", "graph6"]);
    assert_eq!(stdout(&o).trim(), "found");
    let o = lollipop_cmd(&["contains", "--host", "Bw", "--k", "3", "--l", "2", "--p", "2"]);
    assert_eq!(json(&o)["outcome"], "absent");
}

#[test]
fn vertex_cover_and_families() {
    let o = lollipop_cmd(&["vc", "--k", "3", "--l", "4"]);
    assert_eq!(json(&o)["size"], 4);
    let o = lollipop_cmd(&["split-family", "--k", "3", "--l", "2", "--mode", "independent", "--format", "graph6"]);
    assert!(o.status.success());
    let members: Vec<_> = stdout(&o).lines().map(|l| decode_graph6(l).unwrap()).collect();
    assert!(members.iter().all(|g| g.edge_count() == lollipop(3, 2).unwrap().edge_count()));
    let o = lollipop_cmd(&["split-family", "--k", "3", "--l", "2", "--mode", "chi"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn decomposition_family() {
    let o = lollipop_cmd(&["decomp-family", "--k", "3", "--l", "2", "--p", "2", "--max-order", "6", "--t-max", "10"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["partial"], false);
    assert_eq!(v["members"].as_array().unwrap().len(), 3);
}

#[test]
fn bad_input_is_a_usage_error() {
    let o = lollipop_cmd(&["contains", "--host", "B!", "--pattern-graph6", "Bw"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("byte 1"));
    let o = lollipop_cmd(&["construct", "--variant", "H", "--n", "10"]);
    assert_eq!(o.status.code(), Some(2));
    let o = lollipop_cmd(&["verify", "--suite", "formulas", "--k", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_single_freeness_cell() {
    let o = lollipop_cmd(&["verify", "--suite", "freeness", "--k", "3", "--l", "2", "--p", "2", "--n", "40"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["schema_version"], 1);
    let case = &v["suites"][0]["cases"][0];
    assert_eq!(case["outcome"], "pass");
    assert_eq!(case["evidence"]["search"], "absent");
    assert!(case["evidence"]["certificate"].is_object());
    assert!(case["wall_time_ms"].is_number());
    let host = decode_graph6(case["evidence"]["host_graph6"].as_str().unwrap()).unwrap();
    assert_eq!(host.order(), 40);
}

#[test]
fn verify_reports_are_reproducible() {
    let args = ["verify", "--suite", "formulas", "--suite", "families", "--suite", "oracle-equivalence", "--no-timing"];
    let a = lollipop_cmd(&args);
    let b = lollipop_cmd(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["summary"]["fail"], 0);
    assert_eq!(v["suites"][2]["cases"].as_array().unwrap().len(), 200);
}

#[test]
fn verify_config_drives_grid_and_failures_set_exit_code() {
    let dir = std::env::temp_dir().join(format!("lollipop-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let mut cfg: Value = serde_json::from_str(lollipop_cli::DEFAULT_CONFIG).unwrap();
    cfg["saturation"]["cells"] = serde_json::json!([]);
    cfg["freeness"]["cells"] = serde_json::json!([{ "k": 3, "l": 2, "p": 2, "n": 12 }]);
    let path = dir.join("suites.json");
    std::fs::write(&path, cfg.to_string()).unwrap();
    let out = dir.join("report.json");
    let o = lollipop_cmd(&[
        "verify",
        "--suite",
        "freeness",
        "--config",
        path.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let v: Value = serde_json::from_slice(&std::fs::read(&out).unwrap()).unwrap();
    assert_eq!(v["suites"][0]["cases"][0]["params"]["cell"]["n"], 12);

    // a cell outside every stated range is reported as a failure
    cfg["freeness"]["cells"] = serde_json::json!([{ "k": 3, "l": 2, "p": 1, "n": 12 }]);
    std::fs::write(&path, cfg.to_string()).unwrap();
    let o = lollipop_cmd(&["verify", "--suite", "freeness", "--config", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    std::fs::remove_dir_all(&dir).ok();
}
