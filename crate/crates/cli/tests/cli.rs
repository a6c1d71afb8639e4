//! End-to-end runs of the `antilinear` binary: exit statuses, reports and
//! sidecar files.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn antilinear(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_antilinear")).args(args).env_remove("ANTILINEAR_REPORT_DIR").output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn num(v: &Value) -> f64 {
    v.as_f64().unwrap()
}

fn without_timestamp(mut v: Value) -> Value {
    v["provenance"]["timestamp"] = Value::Null;
    v
}

#[test]
fn wph_member_has_real_pair() {
    let out = antilinear(&["twolevel", "--family", "wph", "--a1", "0", "--a2", "1", "--q", "1"]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert_eq!(r["schema_version"], 1);
    assert_eq!(r["classification"]["verdict"], "AllReal");
    let s = &r["spectrum"];
    assert!((num(&s[0]["re"]) + 3f64.sqrt()).abs() < 1e-12);
    assert!((num(&s[1]["re"]) - 3f64.sqrt()).abs() < 1e-12);
}

#[test]
fn wph_scan_finds_exceptional_point() {
    let out = antilinear(&["twolevel", "--family", "wph", "--a1", "0", "--a2", "1", "--q", "3", "--ep-scan", "1:3"]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert!((num(&r["exceptional_point"]["location"]) - 2.0).abs() < 1e-10);
    assert_eq!(r["classification"]["verdict"], "PseudoRealWithPairs");
}

#[test]
fn jordan_block_is_defective_with_null_condition() {
    let out = antilinear(&["twolevel", "--family", "qt-real", "--a", "1", "--c", "1"]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert_eq!(r["defectiveness"]["defective"], true);
    assert_eq!(r["certificate"]["status"], "refused");
}

#[test]
fn negative_parameters_parse() {
    let out = antilinear(&["twolevel", "--family", "qt-imag", "--a", "-1.5", "--b", "2", "--c", "-0.5", "--d", "0.25", "--q", "-1"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(code(&antilinear(&["twolevel", "--family", "bogus"])), 64);
    assert_eq!(code(&antilinear(&["twolevel"])), 64);
    assert_eq!(code(&antilinear(&["frobnicate"])), 64);
    assert_eq!(code(&antilinear(&["twolevel", "--family", "wph", "--q", "0", "--a2", "1"])), 64);
    assert_eq!(code(&antilinear(&["twolevel", "--family", "qt-imag", "--q", "1+1i"])), 64);
    assert_eq!(code(&antilinear(&["fock", "--reduced", "--N", "2000"])), 64);
    assert_eq!(code(&antilinear(&["periodic", "--preset", "missing"])), 64);
    assert_eq!(code(&antilinear(&["--help"])), 0);
}

#[test]
fn preset_verifies_and_writes_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("sin-cos.json");
    let out = antilinear(&["periodic", "--preset", "paper-sin-cos", "--report", report.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert!(out.stdout.is_empty());
    let r: Value = serde_json::from_slice(&std::fs::read(&report).unwrap()).unwrap();
    assert!(num(&r["residuals"]["wph"]) <= 1e-10);
    assert!(num(&r["residuals"]["q_squared"]) <= 1e-12);
    assert_ne!(r["classification"]["verdict"], "NotPseudoReal");
    let csv = std::fs::read_to_string(dir.path().join("sin-cos.csv")).unwrap();
    assert_eq!(csv.lines().next(), Some("index,re,im"));
    assert_eq!(csv.lines().count(), 129);
}

fn write_config(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

#[test]
fn scalar_only_config_has_equal_residuals() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        "sym.toml",
        r#"
family = "wph"
[grid]
points = 64
ell = 1.0
[scalar]
kind = "fourier"
assignment = "real-periodic"
periodic = [[0.2, 0.0], [0.5, -0.3]]
antiperiodic = [[0.7, 0.1], [0.0, 0.4]]
"#,
    );
    let out = antilinear(&["periodic", &cfg]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert!(num(&r["residuals"]["qt_wph_gap"]) <= 1e-12);
    assert_eq!(num(&r["residuals"]["symmetric_defect"]), 0.0);
}

#[test]
fn parity_violation_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        "bad.toml",
        r#"
family = "wph"
[grid]
points = 32
ell = 1.0
[scalar]
kind = "fourier"
assignment = "real-antiperiodic"
periodic = [[0.0, 0.0], [0.8, 0.0]]
"#,
    );
    let out = antilinear(&["periodic", &cfg]);
    assert_eq!(code(&out), 2);
    assert!(!json(&out)["violations"].as_array().unwrap().is_empty());
}

#[test]
fn config_errors_exit_64_and_name_the_key() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "typo.toml", "family = \"wph\"\n[grid]\npoints = 32\nel = 1.0\n[scalar]\nkind = \"zero\"\n");
    let out = antilinear(&["periodic", &cfg]);
    assert_eq!(code(&out), 64);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("el"), "{err}");
    assert_eq!(code(&antilinear(&["periodic", "/nonexistent/config.toml"])), 64);
}

#[test]
fn reduced_fock_reports_exact_spectrum() {
    let out = antilinear(&["fock", "--reduced", "--gamma", "1", "--alpha", "1", "--mu", "2", "--q", "1", "--N", "16"]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    let re: Vec<f64> = r["spectrum"].as_array().unwrap().iter().map(|e| num(&e["re"])).collect();
    let want: Vec<f64> = (0..16).map(|n| (2 * n + 1) as f64).collect();
    assert_eq!(re, want);
    assert_eq!(r["certificate"]["status"], "passed");
    assert!((num(&r["eigenvectors"]["psi1"][1]["re"]) - 0.8).abs() < 1e-12);
}

#[test]
fn general_fock_constraints() {
    let ok = antilinear(&["fock", "--general", "--alpha", "1", "--beta", "0", "--gamma", "1", "--m", "2+1i", "--n", "0", "--qfr", "0+1i"]);
    assert_eq!(code(&ok), 0);
    let r = json(&ok);
    for key in ["alpha", "beta", "gamma", "m", "n", "nq"] {
        assert_eq!(num(&r["residuals"][format!("constraint_{key}")]), 0.0);
    }

    let bad = antilinear(&["fock", "--general", "--alpha", "1", "--gamma", "1", "--m", "2+1i", "--n", "1", "--qfr", "0+1i"]);
    assert_eq!(code(&bad), 2);
    let r = json(&bad);
    assert_eq!(num(&r["residuals"]["constraint_nq"]), 1.0);
    assert!(r["violations"].as_array().unwrap().iter().any(|v| v.as_str().unwrap().contains("nq")));
}

#[test]
fn reports_are_deterministic_modulo_timestamp() {
    let args = ["periodic", "--preset", "paper-sin-cos"];
    let a = without_timestamp(json(&antilinear(&args)));
    let b = without_timestamp(json(&antilinear(&args)));
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());

    let args = ["scan", "--family", "wph", "--random", "50", "--seed", "9"];
    let a = without_timestamp(json(&antilinear(&args)));
    let b = without_timestamp(json(&antilinear(&args)));
    assert_eq!(a, b);
    let c = without_timestamp(json(&antilinear(&["scan", "--family", "wph", "--random", "50", "--seed", "10"])));
    assert_ne!(a["provenance"]["config_hash"], c["provenance"]["config_hash"]);
}

#[test]
fn tolerance_override_can_fail_a_run() {
    let out = antilinear(&["--tol", "1e-30", "twolevel", "--family", "wph", "--a1", "0.3", "--a2", "1.1", "--q", "0.7+0.2i"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn report_directory_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_antilinear"))
        .args(["fock", "--reduced", "--N", "8"])
        .env("ANTILINEAR_REPORT_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let r: Value = serde_json::from_slice(&std::fs::read(dir.path().join("fock.json")).unwrap()).unwrap();
    assert_eq!(r["model"]["tag"], "fock/reduced");
}

#[test]
fn scan_table_and_random_mode() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("scan.csv");
    let out = antilinear(&["scan", "--family", "qt-imag", "--a", "1", "--b", "1", "--d", "1", "--q", "1", "--param", "c", "--range", "-1:1", "--points", "11", "--csv", csv.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert!((num(&r["exceptional_point"]["location"]) - 0.25).abs() < 1e-10);
    let text = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().count(), 12);

    let out = antilinear(&["scan", "--family", "hermitian", "--random", "200", "--seed", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(num(&json(&out)["residuals"]["not_pseudo_real"]), 0.0);
    assert_eq!(code(&antilinear(&["scan", "--family", "wph"])), 64);
}
