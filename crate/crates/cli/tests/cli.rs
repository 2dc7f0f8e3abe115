//! End-to-end tests of the `g2roll` binary: worked examples, exit-code
//! contract, output round-trips, determinism, and the CSV export format.

use serde_json::Value;
use std::process::{Command, Output};

fn g2roll(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_g2roll"))
        .args(args)
        .env_remove("G2ROLL_SEED")
        .output()
        .expect("binary runs")
}

fn g2roll_with_seed_env(seed: &str, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_g2roll"))
        .args(args)
        .env("G2ROLL_SEED", seed)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "expected success, got {:?}; stderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

const X: &str = "[1,0,0,0,1,0,0]";
const Y: &str = "[0,1,0,0,0,1,0]";
const Y_NEG: &str = "[0,1,0,0,0,-1,0]";

#[test]
fn distance_matches_the_worked_example() {
    let v = stdout_json(&g2roll(&["distance", X, Y]));
    assert_eq!(v, serde_json::json!({ "distance": 2 }));
}

#[test]
fn triple_completion_prints_the_exact_third_vector() {
    let v = stdout_json(&g2roll(&["triple", "complete", X, Y]));
    assert_eq!(
        v["triple"][2],
        serde_json::json!([0, 0, "1/8", 0, 0, 0, "1/8"])
    );
}

#[test]
fn completed_triples_feed_back_through_validate() {
    let v = stdout_json(&g2roll(&["triple", "complete", X, Y]));
    let entry = |i: usize| v["triple"][i].to_string();
    let again = stdout_json(&g2roll(&[
        "triple",
        "validate",
        &entry(0),
        &entry(1),
        &entry(2),
    ]));
    assert_eq!(again["valid"], serde_json::json!(true));
    assert_eq!(again["triple"], v["triple"]);
}

#[test]
fn midpoint_and_classify_agree_with_the_incidence_examples() {
    let v = stdout_json(&g2roll(&["midpoint", X, Y]));
    assert_eq!(v["midpoint"], serde_json::json!([0, 0, 1, 0, 0, 0, -1]));
    let v = stdout_json(&g2roll(&["classify", X, Y_NEG]));
    assert_eq!(v["class"], "X1");
    assert_eq!(v["distance"], 1);
}

#[test]
fn domain_errors_exit_one_with_code_and_message() {
    // Distance-2 points span no line.
    let out = g2roll(&["line", X, Y]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).expect("error JSON");
    assert_eq!(v["code"], "NotCollinear");
    assert!(v["message"].as_str().unwrap().contains("roll distance 2"));

    // Distance-1 points have no middle point.
    let out = g2roll(&["midpoint", X, Y_NEG]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).expect("error JSON");
    assert_eq!(v["code"], "NotTwoRolls");

    // A non-null vector defines no point.
    let out = g2roll(&["distance", "[1,0,0,0,0,0,0]", Y]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).expect("error JSON");
    assert_eq!(v["code"], "NotNull");
}

#[test]
fn transport_rejects_pairs_from_different_orbits() {
    let out = g2roll(&["g2", "transport", X, Y, X, Y_NEG]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).expect("error JSON");
    assert_eq!(v["code"], "DifferentOrbits");
}

#[test]
fn transport_carries_the_first_pair_onto_the_second() {
    let m = stdout_json(&g2roll(&["g2", "transport", X, Y, Y, X]));
    let image = stdout_json(&g2roll(&["g2", "apply", &m.to_string(), X]));
    assert_eq!(image["image"].to_string(), Y);
}

#[test]
fn extension_case_one_hits_the_prescribed_cross_product() {
    let w = "[0,0,1,0,0,0,-1]";
    let v = stdout_json(&g2roll(&["triple", "extend", "--case", "1", w, X]));
    assert!(
        !v["scale"].is_null(),
        "case 1 rescales and reports the scalar"
    );
    let cross = stdout_json(&g2roll(&[
        "cross",
        &v["triple"][0].to_string(),
        &v["triple"][1].to_string(),
    ]));
    assert_eq!(cross["cross"].to_string(), w);
}

#[test]
fn malformed_payloads_and_unknown_suites_exit_two() {
    // Well-formed JSON of the wrong shape.
    let out = g2roll(&["dot", "[1,0,0,0,1,0]", Y]);
    assert_eq!(out.status.code(), Some(2));
    // Not JSON and not a file.
    let out = g2roll(&["dot", "[1,2", Y]);
    assert_eq!(out.status.code(), Some(2));
    // Unknown verification suite (rejected by argument parsing).
    let out = g2roll(&["verify", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_is_deterministic_for_a_fixed_seed() {
    let args = ["verify", "incidence", "--seed", "9", "--samples", "20"];
    let first = g2roll(&args);
    let second = g2roll(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout, "same argv, same bytes");
    let v: Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(v["suite"], "incidence");
    assert_eq!(v["seed"], 9);
    for check in v["checks"].as_array().unwrap() {
        assert_eq!(check["status"], "pass", "{}", check["check"]);
    }
}

#[test]
fn seed_comes_from_the_environment_unless_overridden() {
    let out = g2roll_with_seed_env("7", &["verify", "algebra", "--samples", "5"]);
    let v = stdout_json(&out);
    assert_eq!(v["seed"], 7);
    let out = g2roll_with_seed_env(
        "7",
        &["verify", "algebra", "--samples", "5", "--seed", "11"],
    );
    let v = stdout_json(&out);
    assert_eq!(v["seed"], 11);
}

#[test]
fn pretty_format_indents_the_same_value() {
    let compact = g2roll(&["distance", X, Y]);
    let pretty = g2roll(&["--format", "pretty", "distance", X, Y]);
    assert_ne!(compact.stdout, pretty.stdout);
    let a: Value = serde_json::from_slice(&compact.stdout).unwrap();
    let b: Value = serde_json::from_slice(&pretty.stdout).unwrap();
    assert_eq!(a, b);
}

#[test]
fn csv_export_has_the_fixed_header_and_null_rows() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("traj.csv");
    let steps = 6;
    let out = g2roll(&[
        "roll",
        "simulate",
        "--ratio",
        "3",
        "--steps",
        &steps.to_string(),
        "--out",
        path.to_str().unwrap(),
    ]);
    let summary = stdout_json(&out);
    assert_eq!(summary["rows"], steps + 1);
    assert_eq!(summary["path"], path.to_str().unwrap());

    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "theta,contact_x,contact_y,contact_z,q_w,q_x,q_y,q_z,n1,n2,n3,n4,n5,n6,n7"
    );
    let rows: Vec<Vec<f64>> = lines
        .map(|l| l.split(',').map(|f| f.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), steps + 1);
    for row in &rows {
        assert_eq!(row.len(), 15);
        // Null 7-vector: n1²+n2²+n3² = n4²+...+n7².
        let n = &row[8..15];
        let q: f64 =
            n[..3].iter().map(|c| c * c).sum::<f64>() - n[3..].iter().map(|c| c * c).sum::<f64>();
        assert!(q.abs() < 1e-12, "row not null: Q = {q}");
        // Orientation stays a unit quaternion.
        let norm: f64 = row[4..8].iter().map(|c| c * c).sum();
        assert!((norm - 1.0).abs() < 1e-12);
    }
    assert_eq!(rows[0][0], 0.0);
    assert!((rows[steps][0] - std::f64::consts::PI).abs() < 1e-15);

    // Zero steps is rejected as usage.
    let out = g2roll(&[
        "roll",
        "simulate",
        "--ratio",
        "3",
        "--steps",
        "0",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn payloads_load_from_files_as_well_as_inline() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("x.json");
    std::fs::write(&path, X).unwrap();
    let v = stdout_json(&g2roll(&["distance", path.to_str().unwrap(), Y]));
    assert_eq!(v["distance"], 2);
}
