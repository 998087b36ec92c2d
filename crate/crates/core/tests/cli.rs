use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn sandtile(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sandtile"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn ok_json(args: &[&str]) -> Value {
    let out = sandtile(args);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn code(args: &[&str]) -> i32 {
    sandtile(args).status.code().unwrap()
}

#[test]
fn analyze_running_example() {
    let v = ok_json(&["analyze", &data("running.json")]);
    assert_eq!(v["group_order"], json!(14));
    assert_eq!(v["sum_of_squares"], json!(14));
    assert_eq!(v["matrix_tree_check"], json!(true));
    let bases: Vec<Value> = v["bases"].as_array().unwrap().iter().map(|b| b["basis"].clone()).collect();
    assert_eq!(bases, vec![json!([1, 2]), json!([1, 3]), json!([2, 3])]);
}

#[test]
fn reps_to_stdout_and_file() {
    let s = data("running.json");
    let stdout = sandtile(&["reps", &s, "--shifting", "1,1,1"]);
    assert_eq!(stdout.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&stdout.stdout).unwrap();
    let sizes: Vec<usize> = v["fibers"].as_array().unwrap().iter().map(|f| f["points"].as_array().unwrap().len()).collect();
    assert_eq!(sizes, vec![1, 4, 9]);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("reps.json");
    let p = path.to_string_lossy().into_owned();
    let out = sandtile(&["reps", &s, "--shifting", "1,1,1", "--out", &p]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), stdout.stdout);
}

#[test]
fn projected_reps_preserve_counts() {
    let v = ok_json(&["reps", &data("running.json"), "--shifting", "1,1,1", "--project", "first"]);
    assert_eq!(v["projection"], json!("prime"));
    for f in v["fibers"].as_array().unwrap() {
        for p in f["points"].as_array().unwrap() {
            assert_eq!(p[2], json!(0));
        }
    }
}

#[test]
fn exit_codes() {
    let s = data("running.json");
    // not in general position
    assert_eq!(code(&["reps", &s, "--shifting", "1,1,0"]), 2);
    assert_eq!(code(&["reps", &s, "--shifting", "1,1"]), 2);
    assert_eq!(code(&["reps", &s, "--shifting", "1,x,1"]), 3);
    assert_eq!(code(&["reps", &s, "--shifting", "1,1/0,1"]), 3);
    assert_eq!(code(&["tile-svg", &s, "--shifting", "1,1,1", "--kind", "full"]), 2);
    assert_eq!(code(&["reps", "/nonexistent.json", "--shifting", "1"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["--help"]), 0);

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"r\": 2,\n").unwrap();
    let out = sandtile(&["analyze", &bad.to_string_lossy()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("sandtile: "));
    let wrong = dir.path().join("wrong.json");
    std::fs::write(&wrong, r#"{"r": 2, "n": 3, "M": [[3]]}"#).unwrap();
    assert_eq!(code(&["analyze", &wrong.to_string_lossy()]), 2);
}

#[test]
fn svg_matches_golden() {
    let out = sandtile(&["tile-svg", &data("running.json"), "--shifting", "1,1,1"]);
    assert_eq!(out.status.code(), Some(0));
    let golden = std::fs::read(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/running_prime.svg")).unwrap();
    assert_eq!(out.stdout, golden);
}

#[test]
fn full_tile_grid_in_the_plane() {
    let out = sandtile(&["tile-svg", &data("one_by_two.json"), "--shifting", "1,1", "--kind", "full", "--grid"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.matches("<polygon").count(), 18);
}

#[test]
fn graph_with_and_without_bijection() {
    let g = data("square_graph.json");
    let v = ok_json(&["graph", &g]);
    assert_eq!(v["D"], json!([[1, 0, 0, -1, -1], [0, 1, 0, 1, 1], [0, 0, 1, 1, 0]]));
    assert_eq!(v["spanning_trees"], json!(8));
    assert_eq!(v["group_order"], json!(8));
    assert!(v.get("bijection").is_none());

    let v = ok_json(&["graph", &g, "--shifting", "1,2,4,8,16"]);
    let trees = v["bijection"]["trees"].as_array().unwrap();
    assert_eq!(trees.len(), 8);
    assert!(trees.iter().all(|t| t["points"].as_array().unwrap().len() == 1));
    assert_eq!(code(&["graph", &g, "--shifting", "1,1,1,1,1"]), 2);
}

#[test]
fn chambers_and_equivalent_fibers() {
    let s = data("running.json");
    let v = ok_json(&["chambers", &s, "--shifting", "1,1,1", "--against", "1,2,5"]);
    assert_eq!(v["equivalent"], json!(true));
    let v = ok_json(&["chambers", &s, "--shifting", "1,1,1", "--against", "2,1,1"]);
    assert_eq!(v["equivalent"], json!(false));

    let a = ok_json(&["reps", &s, "--shifting", "1,1,1"]);
    let b = ok_json(&["reps", &s, "--shifting", "1,2,5"]);
    assert_eq!(a["fibers"], b["fibers"]);
}

#[test]
fn lower_double_prime() {
    let v = ok_json(&["lower", &data("running.json"), "--shifting", "1,1,1", "--kind", "double-prime"]);
    assert_eq!(v["kind"], json!("double-prime"));
    let volume: i64 = v["pieces"].as_array().unwrap().iter().map(|p| p["volume"].as_i64().unwrap()).sum();
    assert_eq!(volume, 14);
    let points: usize = v["fibers"].as_array().unwrap().iter().map(|f| f["points"].as_array().unwrap().len()).sum();
    assert_eq!(points, 14);
}

#[test]
fn corners_are_equivalent_to_their_zero_one_form() {
    let v = ok_json(&["corners", &data("two_by_five.json"), "--shifting", "1,3,9,27,81"]);
    let corners = v["corners"].as_array().unwrap();
    assert!(!corners.is_empty());
    assert!(corners.iter().all(|c| c["equivalent"] == json!(true)));
}

#[test]
fn output_is_deterministic() {
    let args = ["lower", &data("two_by_six.json"), "--shifting", "1,2,4,8,16,32"];
    let a = sandtile(&args);
    let b = sandtile(&args);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
}
