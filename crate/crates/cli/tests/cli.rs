use std::path::Path;
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::TempDir;

fn stasheff(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stasheff"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &TempDir, name: &str, v: &Value) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, v.to_string()).unwrap();
    path.to_str().unwrap().to_string()
}

fn stdout_json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

// l1 and l4 of the pentagon, snake coordinates (-1, 0) and (1, 0).
fn l1() -> Value {
    json!({"n_gon": 5, "weights": [[1, 2, -1], [2, 3, 1], [3, 4, -1], [1, 4, 1]]})
}

fn l4() -> Value {
    json!({"n_gon": 5, "weights": [[2, 5, 1], [3, 4, 1], [2, 3, -1], [4, 5, -1]]})
}

fn worked_spec() -> Value {
    json!({"format": 1, "n_gon": 5, "c": [[1, 3, 20], [1, 4, 10], [2, 4, 20], [3, 5, 20], [2, 5, 30]]})
}

#[test]
fn triangulations_of_the_pentagon() {
    let v = stdout_json(&stasheff(&["triangulations", "--n", "2"]));
    assert_eq!(v["format"], 1);
    assert_eq!(v["triangulations"].as_array().unwrap().len(), 5);
    let v = stdout_json(&stasheff(&["triangulations", "--n", "3"]));
    assert_eq!(v["triangulations"].as_array().unwrap().len(), 14);
}

#[test]
fn verify_on_l1_l4() {
    let dir = TempDir::new().unwrap();
    let points = write(&dir, "points.json", &json!([l1(), l4()]));
    let out = stasheff(&["verify-mthm", "--in", &points]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "support = lattice points, 2 elements");
}

#[test]
fn check_stasheff_on_the_worked_example() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "spec.json", &worked_spec());
    let out = stasheff(&["check-stasheff", "--in", &spec, "--strict"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().lines().any(|l| l == "stasheff: true"));

    // (1,2,3,4): c_13 + c_24 = 0 < c_14 + c_23 = 10.
    let bad = json!({"n_gon": 5, "c": [[1, 3, -20], [1, 4, 10], [2, 4, 20], [3, 5, 20], [2, 5, 30]]});
    let bad = write(&dir, "bad.json", &bad);
    let out = stasheff(&["check-stasheff", "--in", &bad]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("stasheff: false"));
    assert_eq!(stasheff(&["check-stasheff", "--in", &bad, "--strict"]).status.code(), Some(2));
}

#[test]
fn minkowski_then_lattice_points_matches_support() {
    let dir = TempDir::new().unwrap();
    let points = write(&dir, "points.json", &json!({"format": 1, "points": [l1(), l4(), l4()]}));
    let spec = stdout_json(&stasheff(&["minkowski", "--in", &points]));
    let spec = write(&dir, "spec.json", &spec);
    let lattice = stdout_json(&stasheff(&["lattice-points", "--in", &spec, "--chart", "2-4,2-5"]));
    let support = stdout_json(&stasheff(&["support", "--in", &points]));
    assert_eq!(lattice["points"], support["points"]);
    assert_eq!(lattice["coordinates"].as_array().unwrap().len(), lattice["points"].as_array().unwrap().len());
}

#[test]
fn support_with_coefficients() {
    let dir = TempDir::new().unwrap();
    let points = write(&dir, "points.json", &json!([l1(), l4()]));
    let v = stdout_json(&stasheff(&["support", "--in", &points, "--coeffs"]));
    let terms = v["expansion"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    assert!(terms.iter().all(|t| t["coeff"] == 1));
}

#[test]
fn vertices_and_csv_export() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "spec.json", &worked_spec());
    let v = stdout_json(&stasheff(&["vertices", "--in", &spec]));
    assert_eq!(v["vertices"].as_array().unwrap().len(), 5);

    let out = stasheff(&["export-chart", "--in", &spec, "--chart", "1-3,1-4", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("a_1_3,a_1_4,vertex"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.iter().filter(|r| r.ends_with(",true")).count(), 5);
    // The snake-chart vertex is (c_13, c_14).
    assert!(rows.contains(&"20,10,true"));
}

#[test]
fn mutate_a_seed() {
    let dir = TempDir::new().unwrap();
    let seed = write(&dir, "seed.json", &json!({"epsilon": [[0, -1], [1, 0]]}));
    let v = stdout_json(&stasheff(&["mutate", "--seed", &seed, "--word", "1"]));
    assert_eq!(v["epsilon"], json!([[0, 1], [-1, 0]]));
    // Five mutations around the pentagon return to the seed up to a swap.
    let v = stdout_json(&stasheff(&["mutate", "--seed", &seed, "--word", "1,2,1,2,1"]));
    assert_eq!(v["epsilon"], json!([[0, 1], [-1, 0]]));
    assert_eq!(stasheff(&["mutate", "--seed", &seed, "--word", "0"]).status.code(), Some(1));
}

#[test]
fn output_file_and_determinism() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "spec.json", &worked_spec());
    let out_path = dir.path().join("points.json");
    let out_str = out_path.to_str().unwrap();
    let a = stasheff(&["lattice-points", "--in", &spec, "--out", out_str]);
    assert!(a.status.success());
    let first = std::fs::read(Path::new(out_str)).unwrap();
    assert!(stasheff(&["lattice-points", "--in", &spec, "--out", out_str]).status.success());
    assert_eq!(std::fs::read(Path::new(out_str)).unwrap(), first);
}

#[test]
fn input_errors_exit_with_one() {
    let dir = TempDir::new().unwrap();
    let missing = dir.path().join("nope.json");
    assert_eq!(stasheff(&["minkowski", "--in", missing.to_str().unwrap()]).status.code(), Some(1));
    let garbled = dir.path().join("garbled.json");
    std::fs::write(&garbled, "{").unwrap();
    assert_eq!(stasheff(&["minkowski", "--in", garbled.to_str().unwrap()]).status.code(), Some(1));
    let negative = write(&dir, "neg.json", &json!([{"n_gon": 5, "weights": [[1, 3, -1]]}]));
    assert_eq!(stasheff(&["support", "--in", &negative]).status.code(), Some(1));
    let unbalanced = write(&dir, "unbalanced.json", &json!([{"n_gon": 5, "weights": [[1, 3, 1]]}]));
    assert_eq!(stasheff(&["support", "--in", &unbalanced]).status.code(), Some(1));
    let wrong_format = write(&dir, "v2.json", &json!({"format": 2, "points": [l1()]}));
    assert_eq!(stasheff(&["support", "--in", &wrong_format]).status.code(), Some(1));
}

#[test]
fn budget_exhaustion_exits_with_three() {
    let dir = TempDir::new().unwrap();
    let points = write(&dir, "points.json", &json!([l1(), l4(), l1(), l4()]));
    let out = stasheff(&["--budget", "2", "support", "--in", &points]);
    assert_eq!(out.status.code(), Some(3));
}
