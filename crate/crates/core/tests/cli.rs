use std::fs;
use std::path::Path;

use hypersmith::cli::{run, EXIT_PARSE, EXIT_PRECONDITION, EXIT_REFUTED};
use serde_json::Value;

fn json(out: &hypersmith::cli::Outcome) -> Value {
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    serde_json::from_str(&out.stdout).expect("JSON output")
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

#[test]
fn gen_then_classify_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    for (spec, rank, verdict) in [
        ("F(1,4,8)", 3, "Equal"),
        ("G(1,1:6:1,3)", 3, "Equal"),
        ("Btilde(9)", 3, "Equal"),
        ("D(6)", 3, "Below"),
        ("H4(1,1,2,2)", 4, "Equal"),
        ("F(1,3,15)", 3, "Above"),
    ] {
        let path = dir.path().join("h.json");
        let out = run(["hypersmith", "gen", spec, "--rank", &rank.to_string(), "-o", path.to_str().unwrap()]);
        assert_eq!(out.code, 0, "{spec}: {}", out.stderr);
        let v = json(&run(["hypersmith", "classify", path.to_str().unwrap()]));
        assert_eq!(v["verdict"], verdict, "{spec}");
    }
}

#[test]
fn classify_reports_the_family() {
    let v = json(&run(["hypersmith", "classify", "--family", "F:1,4,8"]));
    assert_eq!(v["verdict"], "Equal");
    assert_eq!(v["family"], "F");
    assert_eq!(v["params"], serde_json::json!([1, 4, 8]));
    assert!(v["witness"].is_string());
}

#[test]
fn classify_is_seed_independent() {
    let a = run(["hypersmith", "--seed", "1", "classify", "--family", "G(1,1:2:1,3)"]);
    let b = run(["hypersmith", "--seed", "99", "classify", "--family", "G(1,1:2:1,3)"]);
    assert_eq!(a, b);
}

#[test]
fn text_input_is_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c3.txt");
    fs::write(&path, "# a triangle of 3-edges\n3 6 3\n0 1 3\n1 2 4\n2 0 5\n").unwrap();
    let v = json(&run(["hypersmith", "spectrum", path.to_str().unwrap()]));
    let rho = v["rho"].as_f64().unwrap();
    assert!((rho - 2.0 * 4f64.cbrt()).abs() < 1e-8);
    assert!(v["lower"].as_f64().unwrap() <= v["upper"].as_f64().unwrap());
}

#[test]
fn fixtures_verify_exactly() {
    for name in ["tilde-e-6-r3.json", "f-1-3-14-r3.json", "spine-three-branches-r3.json", "h4-1-1-1-4-r4.json"] {
        let out = run(["hypersmith", "check-cert", "--exact", &fixture(name)]);
        let v = json(&out);
        assert_eq!(v["verified"], true, "{name}");
    }
}

#[test]
fn refuted_claim_exits_three() {
    let out = run(["hypersmith", "check-cert", "--exact", "--claim", "normal", &fixture("f-3-3-3-r3.json")]);
    assert_eq!(out.code, EXIT_REFUTED);
    let out = run(["hypersmith", "check-cert", "--claim", "subnormal", &fixture("edge-star-r5.json")]);
    assert_eq!(out.code, EXIT_REFUTED);
}

#[test]
fn separate_certificate_file() {
    let dir = tempfile::tempdir().unwrap();
    let h = dir.path().join("a2.txt");
    let c = dir.path().join("a2.cert.json");
    fs::write(&h, "3 5 2\n0 1 2\n2 3 4\n").unwrap();
    let entries: Vec<String> = [(0, 0, "1"), (1, 0, "1"), (2, 0, "1/2"), (2, 1, "1/2"), (3, 1, "1"), (4, 1, "1")]
        .iter()
        .map(|(v, e, val)| format!(r#"{{"v":{v},"e":{e},"val":"{val}"}}"#))
        .collect();
    fs::write(&c, format!(r#"{{"alpha":"1/4","entries":[{}]}}"#, entries.join(","))).unwrap();
    let args = ["hypersmith", "check-cert", "--exact", h.to_str().unwrap(), "--cert", c.to_str().unwrap()];
    let mut with_claim = args.to_vec();
    with_claim.extend(["--claim", "strictly-subnormal"]);
    let v = json(&run(with_claim));
    assert_eq!(v["kind"], "strictly-subnormal");
    assert_eq!(v["edge_products"], serde_json::json!(["1/2", "1/2"]));
}

#[test]
fn structural_commands() {
    let ext = json(&run(["hypersmith", "extend", "--family", "A(3)", "--rank", "3", "--times", "2"]));
    assert_eq!(ext["r"], 5);
    let red = json(&run(["hypersmith", "reduce", "--family", "A(3)", "--rank", "3"]));
    assert_eq!(red["r"], 2);
    let con = json(&run(["hypersmith", "contract", "--family", "A(3)", "--rank", "3", "--edge", "1"]));
    assert_eq!(con["edges"].as_array().unwrap().len(), 2);
    let bad = run(["hypersmith", "contract", "--family", "A(3)", "--rank", "3", "--edge", "0"]);
    assert_eq!(bad.code, EXIT_PRECONDITION);
}

#[test]
fn malformed_input_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    fs::write(&path, "3 x 1\n").unwrap();
    assert_eq!(run(["hypersmith", "classify", path.to_str().unwrap()]).code, EXIT_PARSE);
    assert_eq!(run(["hypersmith", "classify", "/nonexistent/file"]).code, EXIT_PARSE);
    assert_eq!(run(["hypersmith", "frobnicate"]).code, EXIT_PARSE);
}

#[test]
fn disconnected_input_is_a_precondition_violation() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("two.txt");
    fs::write(&path, "3 6 2\n0 1 2\n3 4 5\n").unwrap();
    assert_eq!(run(["hypersmith", "classify", path.to_str().unwrap()]).code, EXIT_PRECONDITION);
}

#[test]
fn limit_table_rows() {
    let v = json(&run(["hypersmith", "limit-table", "--rank", "3", "--n", "50"]));
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 50);
    let rho3 = v["rho_r"].as_f64().unwrap();
    let rhos: Vec<f64> = rows.iter().map(|r| r["rho"].as_f64().unwrap()).collect();
    assert!(rhos.windows(2).all(|w| w[0] < w[1]));
    assert!(rhos.iter().all(|&x| x < rho3));
}

#[test]
fn atlas_lists_equal_members_with_certificates() {
    let v = json(&run(["hypersmith", "atlas", "--rank", "3", "--max-edges", "9"]));
    let rows = v.as_array().unwrap();
    let equal: Vec<&Value> = rows.iter().filter(|r| r["verdict"] == "Equal").collect();
    assert!(!equal.is_empty());
    assert!(equal.iter().all(|r| r["certificate"]["alpha"] == "1/4"));
    assert!(rows.iter().any(|r| r["alias"] == "~E_6"));
}

#[test]
fn zero_tolerance_is_rejected() {
    let out = run(["hypersmith", "--tol", "0", "spectrum", "--family", "A(2)"]);
    assert_eq!(out.code, EXIT_PRECONDITION);
}

#[test]
fn binary_reads_tolerance_from_environment() {
    let bin = env!("CARGO_BIN_EXE_hypersmith");
    let status = std::process::Command::new(bin)
        .args(["spectrum", "--family", "A(2)"])
        .env("HYPERSMITH_TOL", "0")
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(EXIT_PRECONDITION));
    let ok = std::process::Command::new(bin)
        .args(["spectrum", "--family", "A(2)"])
        .env("HYPERSMITH_TOL", "1e-6")
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert!(v["rho"].as_f64().unwrap() > 0.0);
}
