use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn hconvex(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hconvex")).current_dir(dir).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("artifact is JSON")
}

fn write(dir: &Path, name: &str, text: &str) {
    fs::write(dir.join(name), text).unwrap();
}

const CROWN5: &str = "bipartite 5 5
e a1 b2\ne a1 b3\ne a1 b4\ne a1 b5
e a2 b1\ne a2 b3\ne a2 b4\ne a2 b5
e a3 b1\ne a3 b2\ne a3 b4\ne a3 b5
e a4 b1\ne a4 b2\ne a4 b3\ne a4 b5
e a5 b1\ne a5 b2\ne a5 b3\ne a5 b4
";

#[test]
fn crown_is_circular_not_convex() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "crown.graph", CROWN5);
    let out = hconvex(dir.path(), &["recognize", "circular", "crown.graph"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["kind"], "cycle");
    assert_eq!(code(&hconvex(dir.path(), &["recognize", "convex", "crown.graph"])), 1);
    assert_eq!(code(&hconvex(dir.path(), &["recognize", "tdelta(0,2)", "crown.graph"])), 1);
    // Every A-vertex would have to be a leaf of the host tree.
    assert_eq!(code(&hconvex(dir.path(), &["recognize", "tdelta(2,4)", "crown.graph"])), 1);
}

#[test]
fn errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let out = hconvex(dir.path(), &["recognize", "convex", "missing.graph"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("missing.graph"));
    write(dir.path(), "bad.graph", "bipartite 2 2\ne a1 a2\n");
    let out = hconvex(dir.path(), &["recognize", "convex", "bad.graph"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(code(&hconvex(dir.path(), &["recognize", "tdelta(1)", "bad.graph"])), 2);
    assert_eq!(code(&hconvex(dir.path(), &["frobnicate"])), 2);
}

#[test]
fn oracles() {
    let dir = TempDir::new().unwrap();
    assert_eq!(code(&hconvex(dir.path(), &["gen", "gk:k=2"])), 0);
    let out = hconvex(dir.path(), &["oracle", "pthin", "gk_k2.graph"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["pthin"], 2);

    write(dir.path(), "tree.graph", "graph 6\ne 1 2\ne 2 3\ne 2 4\ne 4 5\ne 4 6\n");
    let out = hconvex(dir.path(), &["oracle", "mimw", "tree.graph"]);
    assert_eq!(stdout_json(&out)["mimw"], 1);
    let out = hconvex(dir.path(), &["oracle", "widths", "tree.graph"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["simw"], 1);

    write(dir.path(), "c6.graph", "graph 6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 6 1\n");
    let out = hconvex(dir.path(), &["oracle", "mim-cut", "c6.graph", "--side", "1,2,3"]);
    assert_eq!(stdout_json(&out)["value"], 2);

    let out = hconvex(dir.path(), &["--guard", "3", "oracle", "mimw", "c6.graph"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn convert_rejects_bad_bags() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "p4.graph", "graph 4\ne 1 2\ne 2 3\ne 3 4\n");
    write(dir.path(), "good.pd", "bag 1 2\nbag 2 3\nbag 3 4\n");
    write(dir.path(), "missing_edge.pd", "bag 1 2\nbag 3 4\n");
    write(dir.path(), "broken.pd", "bag 1 2 3\nbag 4\nbag 2 4\n");
    let out = hconvex(dir.path(), &["convert", "p4.graph", "good.pd"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["strong"], true);
    assert_eq!(code(&hconvex(dir.path(), &["convert", "p4.graph", "missing_edge.pd"])), 2);
    assert_eq!(code(&hconvex(dir.path(), &["convert", "p4.graph", "broken.pd"])), 2);
    assert_eq!(code(&hconvex(dir.path(), &["verify", "pathdecomp", "p4.graph", "broken.pd"])), 1);
    assert_eq!(code(&hconvex(dir.path(), &["verify", "pathdecomp", "p4.graph", "good.pd"])), 0);
}

#[test]
fn gen_gk() {
    let dir = TempDir::new().unwrap();
    let out = hconvex(dir.path(), &["--format", "json", "gen", "gk:k=3"]);
    assert_eq!(code(&out), 0);
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["measured"]["vertices"], 13);
    let text = fs::read_to_string(dir.path().join("gk_k3.graph")).unwrap();
    assert!(text.starts_with("bipartite "));
    assert!(!dir.path().join("gk_k3.witness.json").exists());
}

#[test]
fn pipeline() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    let spec = "random_hconvex:kind=tree,t=1,delta=3,a=10,b=8";
    assert_eq!(code(&hconvex(d, &["--seed", "4", "gen", spec])), 0);
    let stem = "random_hconvex_a10_b8_delta3_kindtree_t1_s4";
    let graph = format!("{stem}.graph");
    let witness = format!("{stem}.witness.json");
    assert_eq!(code(&hconvex(d, &["verify", "support", &graph, &witness])), 0);

    let out = hconvex(d, &["--out", "run", "recognize", "tdelta(1,3)", &graph]);
    assert_eq!(code(&out), 0);
    let found = format!("run/{stem}.witness.json");
    assert_eq!(code(&hconvex(d, &["verify", "support", &graph, &found])), 0);

    let out = hconvex(d, &["--out", "run", "--format", "json", "decompose", "tdelta(1,3)", &graph, "--witness", &found]);
    assert_eq!(code(&out), 0);
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
    let decomposition = format!("run/{stem}.decomposition.json");
    assert_eq!(code(&hconvex(d, &["verify", "decomposition", &graph, &decomposition])), 0);

    let out = hconvex(d, &["width", &graph, &decomposition]);
    assert_eq!(code(&out), 0);
    let width = stdout_json(&out)["value"].as_u64().unwrap();
    let decomposed = report["checks"].as_array().unwrap().iter().find(|c| c["name"] == "mim width").unwrap();
    assert_eq!(decomposed["measured"].as_u64(), Some(width));

    let out = hconvex(d, &["--out", "run", "thin", "tdelta(1,3)", &graph]);
    assert_eq!(code(&out), 0);
    let thin = format!("run/{stem}.thin.json");
    assert_eq!(code(&hconvex(d, &["verify", "thin", &graph, &thin])), 0);

    let log = fs::read_to_string(d.join("run/runs.jsonl")).unwrap();
    assert_eq!(log.lines().count(), 3);
    for line in log.lines() {
        let entry: Value = serde_json::from_str(line).unwrap();
        assert_eq!(entry["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
    }
}

#[test]
fn verify_rejects_false_claims() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    assert_eq!(code(&hconvex(d, &["gen", "crown:n=4"])), 0);
    let witness = fs::read_to_string(d.join("crown_n4.witness.json")).unwrap();
    let mut w: Value = serde_json::from_str(&witness).unwrap();
    w["host_edges"][0] = serde_json::json!(["a1", "a3"]);
    write(d, "wrong.json", &w.to_string());
    assert_eq!(code(&hconvex(d, &["verify", "support", "crown_n4.graph", "wrong.json"])), 1);
    write(d, "junk.json", "{\"kind\":");
    assert_eq!(code(&hconvex(d, &["verify", "support", "crown_n4.graph", "junk.json"])), 2);
}

#[test]
fn augmented_instances() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    assert_eq!(code(&hconvex(d, &["gen", "grid:r=2,c=3", "--augment", "star"])), 0);
    let out = hconvex(d, &["verify", "support", "grid_c3_r2_star.graph", "grid_c3_r2_star.witness.json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(code(&hconvex(d, &["decompose", "star", "grid_c3_r2_star.graph"])), 0);
    assert_eq!(code(&hconvex(d, &["gen", "crown:n=3", "--augment", "comb"])), 0);
    let out = hconvex(d, &["verify", "support", "crown_n3_comb.graph", "crown_n3_comb.witness.json"]);
    assert_eq!(code(&out), 0);
}
