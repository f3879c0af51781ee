use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(name: &str) -> String {
    let p: PathBuf = Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/data").join(format!("{name}.json"));
    p.to_str().unwrap().to_string()
}

fn hq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hq")).args(args).output().unwrap()
}

fn hq_env(args: &[&str], threads: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hq")).env("HQ_THREADS", threads).args(args).output().unwrap()
}

fn write_tmp(name: &str, text: &str) -> String {
    let p = Path::new(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn validate_bundled() {
    for name in ["a2_cell", "b3_cell", "one_vertex", "asymptotic_b3", "six_vertex"] {
        let out = hq(&["validate", &data(name)]);
        assert_eq!(out.status.code(), Some(0), "{name}");
    }
}

#[test]
fn validate_tampered_mu() {
    let text = std::fs::read_to_string(data("a2_cell")).unwrap().replacen("\"mu\": \"1\"", "\"mu\": \"3\"", 1);
    let out = hq(&["validate", "--format", "json", &write_tmp("a2_tampered.json", &text)]);
    assert_eq!(out.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["pass"], false);
    let witnesses = report["witnesses"].as_array().unwrap();
    assert!(witnesses.iter().any(|w| w["kind"] == "braid" && w["pair"] == serde_json::json!(["r1", "r2"])));
}

#[test]
fn input_errors_exit_2() {
    let cox = r#"{"generators":["r"],"matrix":[[1]]}"#;
    let undeclared = format!(r#"{{"coxeter":{cox},"vertices":[{{"id":"a"}}],"edges":[{{"target":"a","source":"b"}}]}}"#);
    let out = hq(&["validate", &write_tmp("undeclared.json", &undeclared)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown vertex"));
    assert_eq!(hq(&["validate", &write_tmp("broken.json", "{")]).status.code(), Some(2));
    assert_eq!(hq(&["validate", "/no/such/file.json"]).status.code(), Some(2));
    assert_eq!(hq(&["validate", "--no-such-flag", &data("a2_cell")]).status.code(), Some(2));
    assert_eq!(hq(&["check-dgraph", &data("six_vertex")]).status.code(), Some(2));
    assert_eq!(hq(&["examples", "missing"]).status.code(), Some(2));
    assert_eq!(hq(&["universal", "--m", "1"]).status.code(), Some(2));
}

#[test]
fn universal_m3() {
    let out = hq(&["universal", "--m", "3", "--format", "json"]);
    assert!(out.status.success());
    let bodies: Vec<String> = String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()["body"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(bodies, ["r.s.r - r", "s.r.s - s", "∅.s.℘ - ∅.r.℘", "∅.s.r.℘ - ∅.r.s.℘"]);
}

#[test]
fn universal_from_coxeter_file() {
    let cox = write_tmp("b3_cox.json", r#"{"generators":["r1","r2","r3"],"matrix":[[1,3,2],[3,1,4],[2,4,1]]}"#);
    let out = hq(&["universal", "--coxeter", &cox, "--pair", "r2,r3", "--verify"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).ends_with("MATCH\n"));
    let free = write_tmp("free_cox.json", r#"{"generators":["a","b"],"matrix":[[1,"inf"],["inf",1]]}"#);
    assert_eq!(hq(&["universal", "--coxeter", &free, "--pair", "a,b"]).status.code(), Some(2));
}

#[test]
fn one_vertex_gives_x() {
    let out = hq(&["generators", "--format", "json", &data("one_vertex")]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(text.lines().count(), 1);
    assert!(text.contains(r#""body":"x""#));
}

#[test]
fn dual_involution_and_report() {
    let out = hq(&["dual", "--format", "json", &data("b3_cell")]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["report"]["pass"], true);
    let dual = write_tmp("b3_dual.json", &v["dual"].to_string());
    let labels: Vec<_> = v["dual"]["vertices"].as_array().unwrap().iter().map(|x| x["labels"].clone()).collect();
    assert_eq!(labels[0], serde_json::json!(["r1", "r3"]));
    let back = hq(&["dual", "--format", "json", &dual]);
    let w: serde_json::Value = serde_json::from_slice(&back.stdout).unwrap();
    let original: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(data("b3_cell")).unwrap()).unwrap();
    assert_eq!(w["dual"], original);
}

#[test]
fn dual_without_mu_skips_matrix_checks() {
    let out = hq(&["dual", &data("six_vertex")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("skipped"));
}

#[test]
fn deterministic_output() {
    let args = ["dual", "--format", "json", "--seed", "17", &data("b3_cell")];
    assert_eq!(hq(&args).stdout, hq(&args).stdout);
    let gens = ["generators", "--format", "json", &data("asymptotic_b3")];
    let one = hq_env(&gens, "1").stdout;
    assert_eq!(one, hq_env(&gens, "4").stdout);
    assert_eq!(one, hq(&["--threads", "3", "generators", "--format", "json", &data("asymptotic_b3")]).stdout);
}

#[test]
fn examples_round_trip() {
    let out = hq(&["examples", "b3_cell"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout), std::fs::read_to_string(data("b3_cell")).unwrap());
    assert_eq!(String::from_utf8_lossy(&hq(&["examples"]).stdout).lines().count(), 5);
}
