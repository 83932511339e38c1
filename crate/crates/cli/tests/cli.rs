use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name);
    root.to_str().unwrap().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dagkern")).args(args).output().unwrap()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn finite_instances_pass_every_law() {
    for f in ["finrel.json", "finpinj.json", "boolhat.json"] {
        let out = run(&["check", &data(f), "--max-size", "2"]);
        assert_eq!(code(&out), 0, "{f}: {}", String::from_utf8_lossy(&out.stdout));
        assert!(String::from_utf8_lossy(&out.stdout).contains("0 failed: PASS"));
    }
}

#[test]
fn fdhilb_reports_non_distributivity() {
    let out = run(&["check", &data("fdhilb_c2.json"), "--laws", "dist", "--seed", "3", "--max-size", "2", "--format", "json"]);
    assert_eq!(code(&out), 1);
    let v = stdout_json(&out);
    assert_eq!(v["pass"], false);
    let checks = v["checks"].as_array().unwrap();
    let failing: Vec<_> = checks.iter().filter(|c| c["pass"] == false).collect();
    assert_eq!(failing.len(), 1);
    assert_eq!(failing[0]["object"], "2");
    assert!(failing[0]["witness"].is_object());
}

#[test]
fn fdhilb_orthomodularity_holds() {
    let out = run(&["check", &data("fdhilb_c2.json"), "--laws", "omod,sasaki", "--seed", "1", "--max-size", "2"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn fdhilb_needs_a_seed() {
    let out = run(&["check", &data("fdhilb_c2.json")]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("--seed"));
}

#[test]
fn json_report_is_deterministic_for_a_seed() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for p in [&a, &b] {
        run(&["check", &data("fdhilb_c2.json"), "--laws", "omod,dist", "--seed", "9", "--max-size", "2", "--samples", "20", "--out", p.to_str().unwrap()]);
    }
    let (ta, tb) = (std::fs::read_to_string(&a).unwrap(), std::fs::read_to_string(&b).unwrap());
    assert_eq!(ta, tb);
    let v: Value = serde_json::from_str(&ta).unwrap();
    for key in ["instance", "seed", "max_size", "pass", "checks"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["seed"], 9);
}

#[test]
fn lattice_dot_is_a_diamond() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("x.dot");
    let out = run(&["lattice", &data("finrel.json"), "--object", "X", "--dot", dot.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = std::fs::read_to_string(&dot).unwrap();
    assert_eq!(text.matches(" -> ").count(), 4);
    assert_eq!(text.matches("[label=").count(), 4);
}

#[test]
fn fdhilb_lattice_needs_generators() {
    let out = run(&["lattice", &data("fdhilb_c2.json"), "--object", "C2"]);
    assert_eq!(code(&out), 2);
    let out = run(&["lattice", &data("fdhilb_c2.json"), "--object", "C2", "--elements", "k1", "k2", "delta"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["elements"].as_array().unwrap().len(), 6);
}

#[test]
fn factor_flags_identity_middle() {
    let out = run(&["factor", &data("finpinj.json"), "--morphism", "f"]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["middle"]["identity"], true);
    let out = run(&["factor", &data("finrel.json"), "--morphism", "r"]);
    assert_eq!(stdout_json(&out)["middle"]["identity"], false);
}

#[test]
fn kck_composes_partial_injections() {
    let out = run(&["kck", &data("finrel.json"), "--compose", "q", "p"]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    // q ∘ p = {(1, 0)}.
    assert_eq!(v["projection"]["data"], serde_json::json!([[0, 1], [0, 0]]));
    let out = run(&["kck", &data("finrel.json"), "--compose", "q", "r"]);
    assert_eq!(code(&out), 2);
    let out = run(&["kck", &data("fdhilb_c2.json"), "--compose", "half", "half"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn parse_errors_carry_a_position() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\n  \"category\": \"finrel\",\n  \"objects\": [\n}").unwrap();
    let out = run(&["check", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 4"), "{err}");
}

#[test]
fn unknown_law_is_an_error() {
    let out = run(&["check", &data("finrel.json"), "--laws", "nonsense"]);
    assert_eq!(code(&out), 2);
}
