use std::process::Command;

use adskit::cli::run;
use adskit::report::{Report, Status};

fn call(args: &[&str]) -> (u8, String, String) {
    let mut argv = vec!["adskit".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(&argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn temp_json(tag: &str) -> std::path::PathBuf {
    std::env::temp_dir().join(format!("adskit-{tag}-{}.json", std::process::id()))
}

fn verify_json(tag: &str, args: &[&str]) -> (u8, Report) {
    let path = temp_json(tag);
    let mut all = vec!["verify"];
    all.extend_from_slice(args);
    let p = path.to_str().unwrap().to_string();
    all.extend(["--json", &p]);
    let (code, _, _) = call(&all);
    let report: Report = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let _ = std::fs::remove_file(&path);
    (code, report)
}

#[test]
fn liealg_suite_has_one_check_per_commutator_pair() {
    let (code, report) = verify_json("liealg", &["liealg"]);
    assert_eq!(code, 0);
    assert_eq!(report.schema, 1);
    assert_eq!(report.checks.iter().filter(|c| c.name.starts_with("liealg/bracket/")).count(), 45);
    assert_eq!(report.checks.iter().filter(|c| c.name.starts_with("liealg/so33/")).count(), 105);
    let names: Vec<&str> = report.checks.iter().map(|c| c.name.as_str()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let (code, _, err) = call(&["verify", "bogus"]);
    assert_eq!(code, 2);
    assert!(err.contains("possible values"), "{err}");
}

#[test]
fn generator_limits_are_usage_errors() {
    assert_eq!(call(&["verify", "geometry", "--degree", "4"]).0, 2);
    assert_eq!(call(&["verify", "geometry", "--active", "t,x,y,z,a"]).0, 2);
    assert_eq!(call(&["verify", "geometry", "--active", "t,q"]).0, 2);
}

#[test]
fn reports_are_deterministic_apart_from_timing() {
    let args = ["dirac", "geometry", "--seed", "2", "--degree", "1", "--active", "t,y"];
    let (c1, r1) = verify_json("det1", &args);
    let (c2, r2) = verify_json("det2", &args);
    assert_eq!(c1, c2);
    assert_eq!(r1.without_timing().to_json(), r2.without_timing().to_json());
}

#[test]
fn framework_seed_fails_only_the_printed_christoffel_relations() {
    let (code, report) = verify_json("seed1", &["geometry", "--seed", "1", "--degree", "2", "--active", "t,x,a"]);
    assert_eq!(code, 1);
    let failed: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
    assert_eq!(failed, ["geometry/christoffel_ricci", "geometry/christoffel_riemann", "geometry/christoffel_scalar"]);
    assert!(report.failures().all(|c| c.witness.is_some()));
    assert!(report.checks.iter().any(|c| c.name == "geometry/christoffel_ricci_opposite" && c.status == Status::Pass));
}

#[test]
fn dumps_are_byte_deterministic() {
    let a = call(&["dump", "tables", "--format", "json"]);
    let b = call(&["dump", "tables", "--format", "json"]);
    assert_eq!(a.0, 0);
    assert_eq!(a.1, b.1);
    let t: serde_json::Value = serde_json::from_str(&a.1).unwrap();
    assert_eq!(t["rows"][0][1], "A");
}

#[test]
fn weight_dump_for_the_adjoint() {
    let (code, out, _) = call(&["dump", "weights", "--highest", "1,1", "--format", "json"]);
    assert_eq!(code, 0);
    let d: serde_json::Value = serde_json::from_str(&out).unwrap();
    let ws = d["weights"].as_array().unwrap();
    // eight roots and the zero weight twice
    assert_eq!(ws.len(), 9);
    assert_eq!(ws.iter().map(|w| w["multiplicity"].as_u64().unwrap()).sum::<u64>(), 10);
    assert_eq!(d["dimension"], 10);
    assert_eq!(call(&["dump", "weights", "--highest", "0,1"]).0, 2);
    assert_eq!(call(&["dump", "weights"]).0, 2);
}

#[test]
fn so33_text_dump_is_fifteen_by_fifteen() {
    let (code, out, _) = call(&["dump", "so33", "--format", "text"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 16);
    assert!(lines.iter().all(|l| l.split_whitespace().count() == 15 || l.split_whitespace().count() == 16));
}

#[test]
fn cosmo_demo_juxtaposes_both_values() {
    let (code, out, _) = call(&["demo", "cosmo", "--lambda", "1.0e-52"]);
    assert_eq!(code, 0);
    assert!(out.contains("8.170e17"), "{out}");
    assert!(out.contains("2.600e17"), "{out}");
    assert!(out.contains("discrepancy"));
    assert_eq!(call(&["demo", "cosmo", "--lambda", "-1"]).0, 2);
}

#[test]
fn dirac_demo_on_the_time_axis() {
    let (code, out, _) = call(&["demo", "dirac", "--p", "1,0,0,0,0,0,0,0,0,0"]);
    assert_eq!(code, 0);
    let d: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(d["spectrum"]["eigenvalues"], serde_json::json!(["1/2", "1/2", "-1/2", "-1/2"]));
    assert_eq!(d["solutions"].as_array().unwrap().len(), 4);
    assert_eq!(call(&["demo", "dirac", "--p", "1,0"]).0, 2);
    let (code, out, _) = call(&["demo", "dirac", "--p", "1,1,0,0,0,0,0,0,0,0"]);
    assert_eq!(code, 0);
    assert!(out.contains("char_poly"));
}

#[test]
fn flat_geometry_demo_is_all_zero() {
    let (code, out, _) = call(&["demo", "geometry", "--seed", "0"]);
    assert_eq!(code, 0);
    let d: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(d["flat"], true);
    assert!(d["field"].as_array().unwrap().is_empty());
    assert!(d["reduced"].as_array().unwrap().is_empty());
}

#[test]
fn binary_exit_codes_and_thread_cap() {
    let bin = env!("CARGO_BIN_EXE_adskit");
    let ok = Command::new(bin).args(["verify", "enveloping"]).env("ADSKIT_THREADS", "2").output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let bad = Command::new(bin).args(["verify", "enveloping"]).env("ADSKIT_THREADS", "zero").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let help = Command::new(bin).arg("--help").output().unwrap();
    assert_eq!(help.status.code(), Some(0));
    let none = Command::new(bin).output().unwrap();
    assert_eq!(none.status.code(), Some(2));
}
