//! End-to-end tests of the `valmat` binary: exit-code contract, witness
//! output, document round trips, and deterministic search reports.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_valmat"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("valmat_cli_test_{}_{name}", std::process::id()));
    p
}

fn write(path: &Path, text: &str) {
    std::fs::write(path, text).unwrap();
}

#[test]
fn check_passes_on_generated_fixture() {
    let fixture = tmp("fano.json");
    let gen = run(&["gen", "fano", "-o", fixture.to_str().unwrap()]);
    assert!(gen.status.success());
    let out = run(&["check", fixture.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["verdict"], "pass");
}

#[test]
fn check_fails_with_witness_on_non_matroid() {
    let path = tmp("bad.json");
    write(
        &path,
        r#"{"format_version":1,"type":"valuated_matroid","ground":["1","2","3","4"],"rank":2,
            "values":[{"set":["1","2"],"val":0},{"set":["3","4"],"val":0}]}"#,
    );
    let out = run(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["verdict"], "fail");
    assert_eq!(v["witness"]["axiom"], "valuated_exchange");
    assert_eq!(v["witness"]["pivot"], "1");
}

#[test]
fn truncated_json_exits_two() {
    let path = tmp("trunc.json");
    write(&path, "{\"format_version\":1");
    let out = run(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["seq", "/nonexistent.json", "--kind", "ik", "--q", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = bin().arg("definitely-not-a-command").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn q_zero_is_rejected() {
    let fixture = tmp("u42.json");
    assert!(
        run(&["gen", "uniform(4,2)", "-o", fixture.to_str().unwrap()])
            .status
            .success()
    );
    let out = run(&["seq", fixture.to_str().unwrap(), "--kind", "ik", "--q", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn fano_ulc_sequence_report() {
    let fixture = tmp("fano_seq.json");
    assert!(run(&["gen", "fano", "-o", fixture.to_str().unwrap()])
        .status
        .success());
    let out = run(&[
        "seq",
        fixture.to_str().unwrap(),
        "--kind",
        "ik",
        "--q",
        "1",
        "--check",
        "ulc",
        "--N",
        "7",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["classification"], "conjecture");
    let terms: Vec<String> = v["sequence"]["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t.as_str().unwrap().to_owned())
        .collect();
    assert_eq!(terms, vec!["1", "7", "21", "28"]);
}

#[test]
fn round_trip_on_generated_documents() {
    for name in ["fano", "vamos", "nonpappus", "uniform(5,2)"] {
        let path = tmp(&format!("rt_{}.json", name.replace(['(', ')', ','], "_")));
        assert!(run(&["gen", name, "-o", path.to_str().unwrap()])
            .status
            .success());
        let text = std::fs::read_to_string(&path).unwrap();
        let doc = valmat_cli::io::parse_document(&text).unwrap();
        assert_eq!(valmat_cli::io::serialize_document(&doc), text);
    }
}

#[test]
fn extend_writes_checkable_documents() {
    let fixture = tmp("u12.json");
    assert!(
        run(&["gen", "uniform(2,1)", "-o", fixture.to_str().unwrap()])
            .status
            .success()
    );
    let extended = tmp("u12_ext.json");
    let out = run(&[
        "extend",
        fixture.to_str().unwrap(),
        "--new-elements",
        "x",
        "--verify",
        "-o",
        extended.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let check = run(&["check", extended.to_str().unwrap()]);
    assert_eq!(check.status.code(), Some(0));
    // U_{1,2} extended by one free element is U_{1,3}
    let text = std::fs::read_to_string(&extended).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["ground"].as_array().unwrap().len(), 3);
    assert_eq!(v["values"].as_array().unwrap().len(), 3);
}

#[test]
fn extend_rejects_label_collisions() {
    let fixture = tmp("u31.json");
    assert!(
        run(&["gen", "uniform(3,1)", "-o", fixture.to_str().unwrap()])
            .status
            .success()
    );
    let out = run(&["extend", fixture.to_str().unwrap(), "--new-elements", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bimatroid_free_extension_needs_enough_rows() {
    let fixture = tmp("u42b.json");
    assert!(
        run(&["gen", "uniform(4,2)", "-o", fixture.to_str().unwrap()])
            .status
            .success()
    );
    let out = run(&[
        "extend",
        fixture.to_str().unwrap(),
        "--mode",
        "bimatroid-free",
        "--new-elements",
        "x1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn lift_produces_a_valid_matroid_document() {
    let source = tmp("mc.json");
    write(
        &source,
        r#"{"format_version":1,"type":"m_convex","ground":["a","b"],"rank":2,
            "values":[{"alpha":[2,0],"val":0},{"alpha":[1,1],"val":1},{"alpha":[0,2],"val":2}]}"#,
    );
    let lifted = tmp("mc_lift.json");
    let out = run(&[
        "lift",
        source.to_str().unwrap(),
        "-o",
        lifted.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let check = run(&["check", lifted.to_str().unwrap()]);
    assert_eq!(check.status.code(), Some(0));
}

#[test]
fn lorentzian_on_positive_linear_form() {
    let fixture = tmp("u12_lin.json");
    assert!(
        run(&["gen", "uniform(2,1)", "-o", fixture.to_str().unwrap()])
            .status
            .success()
    );
    let out = run(&["lorentzian", fixture.to_str().unwrap(), "--q", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["strictly_lorentzian"], true);
}

#[test]
fn search_reports_are_job_count_invariant() {
    let report1 = tmp("search1.json");
    let report8 = tmp("search8.json");
    for (jobs, path) in [("1", &report1), ("8", &report8)] {
        let out = run(&[
            "search-ulc",
            "--trials",
            "60",
            "--n",
            "9",
            "--r",
            "4",
            "--seed",
            "11",
            "--jobs",
            jobs,
            "--report",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    let v1: Value = serde_json::from_str(&std::fs::read_to_string(&report1).unwrap()).unwrap();
    let v8: Value = serde_json::from_str(&std::fs::read_to_string(&report8).unwrap()).unwrap();
    assert_eq!(v1["digest"], v8["digest"]);
    assert_eq!(v1["violations"], v8["violations"]);
    assert_eq!(v1["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn search_with_zero_trials_is_clean() {
    let out = run(&["search-ulc", "--trials", "0", "--jobs", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn shipped_fixtures_parse_and_certify() {
    let root = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../..")
        .join("fixtures");
    for (name, bases) in [("fano", 28), ("vamos", 65), ("nonpappus", 76)] {
        let path = root.join(format!("{name}.json"));
        let text = std::fs::read_to_string(&path)
            .unwrap_or_else(|e| panic!("fixture {name} missing: {e}"));
        let doc = valmat_cli::io::parse_document(&text).unwrap();
        // byte-stable against the current serializer
        assert_eq!(valmat_cli::io::serialize_document(&doc), text);
        let valmat_cli::io::Document::Matroid(p) = doc else {
            panic!("fixture {name} is not a matroid document");
        };
        assert_eq!(p.num_bases(), bases);
        assert!(p.check_valuated_exchange().unwrap().is_pass());
    }
}

#[test]
fn rk_sequence_on_a_bimatroid_document() {
    // the all-zero 2×2 Stiefel bimatroid: R = (1, 4, 1)
    let path = tmp("bim.json");
    write(
        &path,
        r#"{"format_version":1,"type":"bimatroid","rows":["r1","r2"],"cols":["c1","c2"],
            "values":[
              {"rows":["r1"],"cols":["c1"],"val":0},
              {"rows":["r1"],"cols":["c2"],"val":0},
              {"rows":["r2"],"cols":["c1"],"val":0},
              {"rows":["r2"],"cols":["c2"],"val":0},
              {"rows":["r1","r2"],"cols":["c1","c2"],"val":0}]}"#,
    );
    let out = run(&[
        "seq",
        path.to_str().unwrap(),
        "--kind",
        "rk",
        "--q",
        "1/2",
        "--check",
        "ulc",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["classification"], "theorem");
    let terms: Vec<&str> = v["sequence"]["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t.as_str().unwrap())
        .collect();
    assert_eq!(terms, vec!["1", "4", "1"]);
}

#[test]
fn relaxed_mode_is_required_for_float_valuations() {
    let path = tmp("float.json");
    write(
        &path,
        r#"{"format_version":1,"type":"valuated_matroid","ground":["a","b"],"rank":1,
            "values":[{"set":["a"],"val":"0.5"},{"set":["b"],"val":0}]}"#,
    );
    // exact mode refuses and names the remedy
    let out = run(&["seq", path.to_str().unwrap(), "--kind", "ik", "--q", "1/2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--relaxed"));
    // relaxed mode computes
    let out = run(&[
        "seq",
        path.to_str().unwrap(),
        "--kind",
        "ik",
        "--q",
        "1/2",
        "--relaxed",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["verdict"], "pass");
}

#[test]
fn vml_jobs_env_is_honored() {
    // Smoke test: the variable must parse and the run stays deterministic.
    let out = bin()
        .env("VML_JOBS", "2")
        .args([
            "search-ulc",
            "--trials",
            "12",
            "--n",
            "6",
            "--r",
            "3",
            "--seed",
            "5",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let with_env = stdout_json(&out)["digest"].clone();
    let out2 = run(&[
        "search-ulc",
        "--trials",
        "12",
        "--n",
        "6",
        "--r",
        "3",
        "--seed",
        "5",
        "--jobs",
        "1",
    ]);
    assert_eq!(stdout_json(&out2)["digest"], with_env);
}
