use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn nilgeo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nilgeo")).args(args).env("NILGEO_THREADS", "2").output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

const ABELIAN4: &str = r#"{"dim": 4, "omega": [{"i": 1, "j": 2, "value": "1"}, {"i": 3, "j": 4, "value": "1"}]}"#;

#[test]
fn list_prints_every_entry() {
    let out = nilgeo(&["list"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 17);
    assert!(text.lines().any(|l| l.starts_with("G5.2 ")));
}

#[test]
fn show_displays_form_coefficients() {
    let out = nilgeo(&["show", "G5.2"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("- 2 e1^e5"), "{text}");
    assert!(text.contains("psi12 must be nonzero"), "{text}");
}

#[test]
fn show_json_embeds_a_computable_document() {
    let out = nilgeo(&["show", "G3", "--json"]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["format_version"], 1);
    assert_eq!(v["id"], "G3");
    assert_eq!(v["reference"]["J"].as_array().unwrap().len(), 6);
}

#[test]
fn unknown_entry_is_a_usage_error() {
    let out = nilgeo(&["show", "Gxx"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("known_entry"));
}

#[test]
fn verify_one_group() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g8.json");
    let out = nilgeo(&["verify", "--group", "G8", "--samples", "5", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["reports"].as_array().unwrap().len(), 5);
    assert_eq!(v["failures"], 0);
    assert_eq!(v["format_version"], 1);
}

#[test]
fn verify_rejects_zero_samples() {
    assert_eq!(code(&nilgeo(&["verify", "--samples", "0"])), 2);
}

#[test]
fn verify_reports_unwritable_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("out.json");
    let out = nilgeo(&["verify", "--group", "G19", "--samples", "1", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 3);
}

#[test]
fn compute_catalog_document() {
    let dir = tempfile::tempdir().unwrap();
    let shown = stdout_json(&nilgeo(&["show", "G3", "--json"]));
    let input = dir.path().join("g3.json");
    fs::write(&input, shown["reference"].to_string()).unwrap();
    let out = nilgeo(&["compute", "--input", input.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["scalar"], "0");
    assert_eq!(v["RR"], "0");
}

#[test]
fn compute_flat_abelian_structure() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("ab.json");
    fs::write(&input, r#"{"dim": 2, "omega": [{"i": 1, "j": 2, "value": "1"}], "J": [["0", "-1"], ["1", "0"]]}"#)
        .unwrap();
    let report = dir.path().join("report.json");
    let out = nilgeo(&["compute", "--input", input.to_str().unwrap(), "--out", report.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert!(v["gamma"].as_array().unwrap().is_empty());
    assert!(v["riemann_nonzero"].as_array().unwrap().is_empty());
}

#[test]
fn compute_names_the_violated_invariant() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("bad.json");
    fs::write(&input, r#"{"dim": 2, "omega": [{"i": 1, "j": 2, "value": "1"}], "J": [["0", "-1"], ["2", "0"]]}"#)
        .unwrap();
    let out = nilgeo(&["compute", "--input", input.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("acs_square"));
}

#[test]
fn compute_reports_parse_position() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("broken.json");
    fs::write(&input, "{\n  \"dim\": 2,\n  \"omega\": [\n}").unwrap();
    let out = nilgeo(&["compute", "--input", input.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 4"));
}

#[test]
fn compute_missing_file() {
    assert_eq!(code(&nilgeo(&["compute", "--input", "/nonexistent/input.json"])), 3);
}

#[test]
fn solve_abelian() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("ab.json");
    fs::write(&input, ABELIAN4).unwrap();
    let out = nilgeo(&["solve", "--input", input.to_str().unwrap(), "--seed", "3"]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["converged"], true);
    assert!(v["residual_norm"].as_f64().unwrap() < 1e-12);
}

#[test]
fn solve_abelian_probe_is_flat() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("ab.json");
    fs::write(&input, ABELIAN4).unwrap();
    let out = nilgeo(&["solve", "--input", input.to_str().unwrap(), "--probe"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["status"], "pass");
}

#[test]
fn solve_infeasible_pattern_exits_4() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("ab.json");
    fs::write(&input, ABELIAN4).unwrap();
    let p = input.to_str().unwrap();
    // J(e1) = 0 cannot square to -e1.
    let out = nilgeo(&["solve", "--input", p, "--zero", "1,1", "--zero", "2,1", "--zero", "3,1", "--zero", "4,1"]);
    assert_eq!(code(&out), 4);
    assert_eq!(stdout_json(&out)["converged"], false);
}

#[test]
fn solve_catalog_pattern() {
    let out = nilgeo(&["solve", "--group", "G3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["converged"], true);
}

#[test]
fn repeated_fix_needs_probe() {
    let out = nilgeo(&["solve", "--group", "G1", "--fix", "6,1=0", "--fix", "6,1=0.5"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn solve_needs_a_source() {
    assert_eq!(code(&nilgeo(&["solve"])), 2);
}
