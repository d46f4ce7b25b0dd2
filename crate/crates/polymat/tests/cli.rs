//! Black-box tests of the binary: exit codes, output formats, determinism.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn polymat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polymat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn polymat_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_polymat"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn kpoly_both_routes_on_the_example() {
    let out = polymat(&[
        "kpoly",
        "paper-example",
        "--via",
        "both",
        "--format",
        "pretty",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("t1^2*t2^2*t3^3"), "got {text:?}");
    // 17 signed terms: 16 separators.
    let separators = text.matches(" + ").count() + text.matches(" - ").count();
    assert_eq!(separators, 16, "got {text:?}");
}

#[test]
fn cave_of_rank_zero_is_one() {
    let out = polymat(&["cave", "rank-zero"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn hs_index_one_has_six_generators() {
    let out = polymat(&[
        "hs",
        "paper-example",
        "--index",
        "1",
        "--via",
        "both",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let gens = value["generators"].as_array().unwrap();
    assert_eq!(gens.len(), 6);
    for g in gens {
        let sum: i64 = g
            .as_array()
            .unwrap()
            .iter()
            .map(|c| c.as_i64().unwrap())
            .sum();
        assert_eq!(sum, 6);
    }
}

#[test]
fn dual_lists_the_printed_points() {
    let out = polymat(&["dual", "paper-example", "--format", "pretty"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for pt in ["(2,0,1)", "(0,2,1)", "(1,1,1)", "(0,0,3)"] {
        assert!(text.contains(pt), "missing {pt} in {text:?}");
    }
}

#[test]
fn malformed_input_exits_2() {
    let out = polymat_stdin(&["validate", "-", "--format", "json"], "{not json");
    assert_eq!(out.status.code(), Some(2));
    let err: serde_json::Value =
        serde_json::from_str(String::from_utf8_lossy(&out.stderr).trim()).unwrap();
    assert_eq!(err["code"], "malformed");
    assert!(err["message"].is_string());
}

#[test]
fn axiom_violation_exits_1() {
    // Submodularity fails: rk{1}+rk{2} < rk{1,2}+rk{}.
    let bad = r#"{"p":2,"rank":{"1":1,"2":1,"1,2":3}}"#;
    let out = polymat_stdin(&["validate", "-", "--format", "json"], bad);
    assert_eq!(out.status.code(), Some(1));
    let err: serde_json::Value =
        serde_json::from_str(String::from_utf8_lossy(&out.stderr).trim()).unwrap();
    assert_eq!(err["code"], "axiom-violation");
}

#[test]
fn unknown_fixture_exits_2() {
    let out = polymat(&["cave", "no-such-fixture"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn csv_is_reserved_for_tables() {
    let out = polymat(&["base-points", "u12", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(2));
    let out = polymat(&["betti", "u12", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("i,b1,b2,beta"));
    let out = polymat(&["mobius", "u12", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("n1,n2,mu"));
}

#[test]
fn fixtures_list_and_emit_round_trip() {
    let out = polymat(&["fixtures", "list"]);
    assert_eq!(out.status.code(), Some(0));
    let names = stdout(&out);
    assert!(names.lines().count() >= 20);
    assert!(names.lines().any(|l| l == "paper-example"));

    let out = polymat(&["fixtures", "emit", "u12"]);
    assert_eq!(out.status.code(), Some(0));
    let emitted = stdout(&out);
    let validated = polymat_stdin(&["validate", "-", "--format", "json"], &emitted);
    assert_eq!(validated.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&validated)).unwrap();
    assert_eq!(value["valid"], true);
    assert_eq!(value["rank"], 1);
}

#[test]
fn uniform_family_fixture_names() {
    let out = polymat(&["base-points", "U(2;1,1,1)", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["points"].as_array().unwrap().len(), 3);
}

#[test]
fn json_polynomial_output_reparses() {
    let out = polymat(&[
        "kpoly",
        "paper-example",
        "--via",
        "cave",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["vars"].as_array().unwrap().len(), 3);
    assert_eq!(value["terms"].as_array().unwrap().len(), 17);
}

#[test]
fn output_is_stable_across_parallelism() {
    let one = polymat(&[
        "betti",
        "paper-example",
        "--format",
        "csv",
        "--parallel",
        "1",
    ]);
    let four = polymat(&[
        "betti",
        "paper-example",
        "--format",
        "csv",
        "--parallel",
        "4",
    ]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(four.status.code(), Some(0));
    assert_eq!(stdout(&one), stdout(&four));
}

#[test]
fn split_with_valuative_check() {
    let out = polymat(&[
        "split",
        "paper-example-dual",
        "--subset",
        "3",
        "--threshold",
        "1",
        "--check-valuative",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["below"].as_array().unwrap().len(), 5);
    assert_eq!(value["above"].as_array().unwrap().len(), 6);
    assert_eq!(value["on"].as_array().unwrap().len(), 3);
    assert_eq!(value["valuative_residual_zero"], true);
}

#[test]
fn seeded_split_is_deterministic() {
    let a = polymat(&["split", "paper-example", "--seed", "7", "--format", "json"]);
    let b = polymat(&["split", "paper-example", "--seed", "7", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn lorentzian_verdicts() {
    for target in ["kpoly", "cave-dual"] {
        let out = polymat(&[
            "lorentzian",
            "paper-example",
            "--target",
            target,
            "--format",
            "json",
        ]);
        assert_eq!(out.status.code(), Some(0), "target {target}");
        let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(value["denormalized_lorentzian"], true, "target {target}");
    }
}

#[test]
fn permuted_cave_matches_plain_cave() {
    let plain = polymat(&["cave", "paper-example-dual"]);
    let permuted = polymat(&["cave", "paper-example-dual", "--permute", "3,1,2"]);
    assert_eq!(plain.status.code(), Some(0));
    assert_eq!(permuted.status.code(), Some(0));
    assert_eq!(stdout(&plain), stdout(&permuted));
    let bad = polymat(&["cave", "paper-example-dual", "--permute", "1,1,2"]);
    assert_eq!(bad.status.code(), Some(2));
}
