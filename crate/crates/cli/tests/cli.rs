use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hjlc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

#[test]
fn check_passing_and_sabotaged() {
    for f in [
        "three_generator_delta_plus.json",
        "three_generator_delta_minus.json",
        "cur_g11.json",
    ] {
        assert_eq!(code(&run(&["check", &fixture(f)])), 0, "{f}");
    }
    let out = run(&["check", &fixture("three_generator_sabotaged.json")]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stdout).contains("(e1, e2, e2)"));
}

#[test]
fn json_report_shape() {
    let out = run(&["--format", "json", "check", &fixture("three_generator_delta_plus.json")]);
    let v = json(&out);
    assert_eq!(v["passed"], Value::Bool(true));
    assert!(v["report"]["checks"].as_array().is_some_and(|c| !c.is_empty()));
}

#[test]
fn delta_override_breaks_plus_algebra() {
    let out = run(&[
        "--delta-override",
        "-1",
        "check",
        &fixture("three_generator_delta_plus.json"),
    ]);
    assert_eq!(code(&out), 1);
}

#[test]
fn input_errors_exit_with_two() {
    assert_eq!(code(&run(&["check", "/nonexistent.json"])), 2);
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"delta\": 1, \"delta\": 1}").unwrap();
    let out = run(&["check", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("duplicate field `delta`"));
}

#[test]
fn current_algebra_construction() {
    assert_eq!(code(&run(&["construct", "cur", &fixture("g11.json")])), 0);
    assert_eq!(code(&run(&["construct", "cur", &fixture("g11_jordan_sign.json")])), 2);
    assert_eq!(
        code(&run(&[
            "construct",
            "cur",
            "--unchecked",
            &fixture("g11_jordan_sign.json")
        ])),
        1
    );
}

#[test]
fn constructed_algebra_round_trips_through_a_file() {
    let out = run(&["--format", "json", "construct", "cur", &fixture("g_jordan.json")]);
    assert_eq!(code(&out), 0);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cur.json");
    std::fs::write(&path, json(&out)["result"].to_string()).unwrap();
    assert_eq!(code(&run(&["check", path.to_str().unwrap()])), 0);
}

#[test]
fn representation_check() {
    let args = ["--strict-rep", "rep", "check"];
    let out = run(&[&args[..], &[&fixture("cur_g11.json"), &fixture("adjoint_cur_g11.json")]].concat());
    assert_eq!(code(&out), 0);
}

#[test]
fn differential_of_gamma() {
    let out = run(&[
        "--format",
        "json",
        "cohomology",
        "d1",
        &fixture("three_generator_delta_plus.json"),
        &fixture("gamma_e1.json"),
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let value = &v["result"]["values"]["e2|e3"][0];
    assert_eq!(value["target"], "e1");
    assert_eq!(value["poly"][0]["coeff"], "-1");
}

#[test]
fn d2_after_d1_with_bounds_and_oracle() {
    let out = run(&[
        "--seed",
        "3",
        "--degree-bounds",
        "1,1",
        "cohomology",
        "d2d1",
        &fixture("three_generator_delta_minus.json"),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn deformation_commands() {
    let e = fixture("three_generator_delta_plus.json");
    assert_eq!(code(&run(&["deform", "conditions", &e, &fixture("psi_e2e3.json")])), 0);
    assert_eq!(
        code(&run(&[
            "deform",
            "nijenhuis",
            &e,
            &fixture("f_alpha_three_generator.json")
        ])),
        1
    );
    let out = run(&[
        "deform",
        "trivial",
        &fixture("cur_g11.json"),
        &fixture("f_2id_cur_g11.json"),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn derivation_solver() {
    let out = run(&[
        "--format",
        "json",
        "derivations",
        "solve",
        &fixture("cur_g11.json"),
        "--k",
        "1",
        "--lmax",
        "1",
        "--dmax",
        "1",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["result"].as_array().map(Vec::len), Some(3), "{v}");
}
