use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn algebroid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_algebroid")).args(args).env_remove("ALGEBROID_REPORT_DIR").output().expect("binary runs")
}

fn json_report(args: &[&str]) -> (Value, i32) {
    let out = algebroid(&[args, &["--format", "json"]].concat());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stderr)));
    (v, out.status.code().unwrap())
}

fn task<'a>(report: &'a Value, name: &str) -> &'a Value {
    report["tasks"].as_array().unwrap().iter().find(|t| t["name"] == name).unwrap_or_else(|| panic!("no task {name}"))
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn e1_all_tasks_pass() {
    let (r, code) = json_report(&["builtin", "e1"]);
    assert_eq!(code, 0);
    for name in ["d2", "bialgebroids", "hopf-galois", "lu-antipode", "coring-correspondence", "sugano"] {
        assert_eq!(task(&r, name)["status"], "pass", "{name}: {}", task(&r, name)["summary"]);
    }
    assert_eq!(task(&r, "hsep")["status"], "none-found");
    assert_eq!(r["field"], "rational");
}

#[test]
fn e1_over_gf2_has_no_separability_element_or_cointegral() {
    let (r, code) = json_report(&["builtin", "e1", "--field", "gf:2", "--tasks", "coring-correspondence"]);
    assert_eq!(code, 0);
    let t = task(&r, "coring-correspondence");
    assert_eq!(t["status"], "pass");
    assert_eq!(t["detail"]["separable"], "none-found");
    assert_eq!(t["detail"]["cointegral"], "none-found");
    assert_eq!(r["tasks"].as_array().unwrap().len(), 1);
}

#[test]
fn e2_dimensions_and_swap() {
    let (r, code) = json_report(&["builtin", "e2", "--tasks", "bialgebroids,hopf-galois"]);
    assert_eq!(code, 0);
    let b = &task(&r, "bialgebroids")["detail"];
    assert_eq!((b["dim_r"].as_u64(), b["dim_s"].as_u64(), b["dim_t"].as_u64()), (Some(4), Some(8), Some(8)));
    assert_eq!(task(&r, "hopf-galois")["status"], "pass");
}

#[test]
fn e4_passes_without_coaction() {
    let (r, code) = json_report(&["builtin", "e4"]);
    assert_eq!(code, 0);
    assert_eq!(task(&r, "hopf-galois")["status"], "not-applicable");
    assert_eq!(task(&r, "hsep")["status"], "pass");
    assert_eq!(task(&r, "sugano")["status"], "pass");
    assert_eq!(task(&r, "bialgebroids")["detail"]["dim_s"], 16);
}

#[test]
fn e5_sugano_correspondence() {
    let (r, code) = json_report(&["builtin", "e5", "--tasks", "sugano"]);
    assert_eq!(code, 0);
    let t = task(&r, "sugano");
    assert_eq!(t["status"], "pass", "{}", t["summary"]);
    assert_eq!(t["detail"]["intermediates"][0]["centralizer"]["v_dim"], 4);
}

#[test]
fn reports_are_byte_identical() {
    let a = algebroid(&["builtin", "e2", "--format", "json"]);
    let b = algebroid(&["builtin", "e2", "--format", "json"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn report_file_and_directory() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("out/e3.json");
    let out = algebroid(&["builtin", "e3", "--tasks", "d2", "--report", file.to_str().unwrap()]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(v["scenario"], "e3");

    let out = Command::new(env!("CARGO_BIN_EXE_algebroid"))
        .args(["builtin", "e1", "--tasks", "d2"])
        .env("ALGEBROID_REPORT_DIR", dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(dir.path().join("e1.json").exists());
}

#[test]
fn timing_is_opt_in() {
    let (r, _) = json_report(&["builtin", "e1", "--tasks", "d2"]);
    assert!(task(&r, "d2").get("timing_ms").is_none());
    let (r, _) = json_report(&["builtin", "e1", "--tasks", "d2", "--timing"]);
    assert!(task(&r, "d2")["timing_ms"].is_u64());
}

#[test]
fn scenario_file_from_structure_constants() {
    let dir = tempfile::tempdir().unwrap();
    // k × k with idempotent basis, over k
    let path = write(
        dir.path(),
        "kk.json",
        r#"{
  "name": "kxk",
  "field": {"kind": "rational"},
  "algebra": {"structure_constants": {"constants": [[[1, 0], [0, 0]], [[0, 0], [0, 1]]], "unit": [1, 1]}},
  "subalgebra": "unit",
  "tasks": ["d2", "bialgebroids", "coring-correspondence"]
}"#,
    );
    let (r, code) = json_report(&["verify", &path]);
    assert_eq!(code, 0, "{r}");
    assert_eq!(task(&r, "bialgebroids")["detail"]["dim_s"], 4);
    assert_eq!(task(&r, "coring-correspondence")["detail"]["separable"], "found");
}

#[test]
fn explicit_hopf_with_matrix_coaction() {
    let dir = tempfile::tempdir().unwrap();
    // k[C2] coacting on itself, spelled out: ρ(e_a) = e_a ⊗ h_a
    let path = write(
        dir.path(),
        "c2.json",
        r#"{
  "field": {"kind": "rational"},
  "algebra": {"group": {"cyclic": 2}},
  "subalgebra": "unit",
  "hopf": {"explicit": {
    "algebra": {"group": {"cyclic": 2}},
    "coproduct": [[1, 0], [0, 0], [0, 0], [0, 1]],
    "counit": [1, 1],
    "antipode": [[1, 0], [0, 1]]}},
  "coaction": {"matrix": [[1, 0], [0, 0], [0, 0], [0, 1]]},
  "tasks": ["hopf-galois", "lu-antipode"]
}"#,
    );
    let (r, code) = json_report(&["verify", &path]);
    assert_eq!(code, 0, "{r}");
    assert_eq!(task(&r, "hopf-galois")["status"], "pass");
    assert_eq!(task(&r, "lu-antipode")["status"], "pass");
}

#[test]
fn parse_errors_carry_line_and_column() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "bad.json", "{\n  \"field\": {\"kind\": \"rational\"},\n  \"algebra\": {\"matrix\": 2,\n}");
    let out = algebroid(&["verify", &path]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3, column 25"));
}

#[test]
fn validation_errors_name_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(
        dir.path(),
        "bad.json",
        r#"{"field": {"kind": "rational"}, "algebra": {"group": {"cyclic": 2}}, "subalgebra": {"basis": [[1, "1/0"]]}, "tasks": ["d2"]}"#,
    );
    let out = algebroid(&["verify", &path]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("subalgebra.basis[0][1]"));
}

#[test]
fn unknown_task_and_missing_coaction_are_rejected() {
    let out = algebroid(&["builtin", "e4", "--tasks", "d3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown task"));
    let out = algebroid(&["builtin", "e4", "--tasks", "lu-antipode"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("needs a coaction"));
}

#[test]
fn intermediate_must_contain_the_base() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(
        dir.path(),
        "d.json",
        r#"{"field": {"kind": "rational"}, "algebra": {"group": {"symmetric": 3}}, "subalgebra": {"group_elements": ["(123)"]},
            "intermediate": ["unit"], "tasks": ["sugano"]}"#,
    );
    let out = algebroid(&["verify", &path]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("intermediate[0]"));
}

#[test]
fn list_shows_metadata() {
    let out = algebroid(&["list", "--format", "json"]);
    assert!(out.status.success());
    let cat: Value = serde_json::from_slice(&out.stdout).unwrap();
    let cat = cat.as_array().unwrap();
    assert!(cat.len() >= 5);
    let e2 = cat.iter().find(|e| e["name"] == "e2").unwrap();
    assert_eq!(e2["dim_r"], 4);
    let e4 = cat.iter().find(|e| e["name"] == "e4").unwrap();
    assert_eq!(e4["casimir_dim"], 4);
}

#[test]
fn explain_tasks() {
    let out = algebroid(&["explain", "lu-antipode"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("τ(r ⋊ h)"));
    let out = algebroid(&["explain", "d2"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("a ⊗ a' = Σ_i t_i β_i(a) a'"));
    assert_eq!(algebroid(&["explain", "d7"]).status.code(), Some(2));
}

#[test]
fn invalid_hopf_algebra_is_a_validation_error() {
    let dir = tempfile::tempdir().unwrap();
    // a non-coassociative "coproduct" on k[C2]: Δ(g) = g ⊗ 1
    let path = write(
        dir.path(),
        "broken.json",
        r#"{
  "field": {"kind": "rational"},
  "algebra": {"group": {"cyclic": 2}},
  "subalgebra": "unit",
  "hopf": {"explicit": {
    "algebra": {"group": {"cyclic": 2}},
    "coproduct": [[1, 0], [0, 0], [0, 1], [0, 0]],
    "counit": [1, 1],
    "antipode": [[1, 0], [0, 1]]}},
  "coaction": "trivial",
  "tasks": ["d2"]
}"#,
    );
    let out = algebroid(&["verify", &path]);
    assert_eq!(out.status.code(), Some(2), "{}", String::from_utf8_lossy(&out.stderr));
}
