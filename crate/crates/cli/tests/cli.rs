use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn gtg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gtg")).args(args).env_remove("GTG_JOBS").output().expect("gtg runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = gtg(&all);
    let v = serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(&o)));
    (o.status.code().unwrap(), v)
}

#[test]
fn trace_of_a_table_word() {
    let o = gtg(&["trace", "--case", "232", "uvuvuvuv2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("tau: l^4-3*l^2+1"), "{text}");
    assert!(text.contains("form: (0,0,1)"), "{text}");

    let (code, v) = json(&["trace", "uvuvuvuv2"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema_version"], "1");
    assert_eq!(v["command"], "trace");
    assert_eq!(v["case"], "232");
    assert_eq!(v["payload"]["tau"]["coefficients"], serde_json::json!([1, 0, -3, 0, 1]));
    assert_eq!(v["payload"]["tau"]["form"]["c"], 1);
}

#[test]
fn csv_flattens_polynomials() {
    let o = gtg(&["trace", "xyxy2", "--format", "csv"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("word,coefficients,tau,form"));
    assert_eq!(lines.next(), Some("xyxy2,\"[-1,-1,1]\",l^2-l-1,\"(0,0,1)\""));
}

#[test]
fn pretty_output_uses_carets() {
    let o = gtg(&["canon", "--pretty", "x2y2"]);
    assert_eq!(stdout(&o).trim(), "xy");
    let o = gtg(&["canon", "--pretty", "xyx2y2xyxy2"]);
    assert!(stdout(&o).contains("^2"));
}

#[test]
fn equivalence_of_words() {
    assert_eq!(stdout(&gtg(&["equiv", "uvuv", "uv2uv2"])).trim(), "equivalent");
    assert_eq!(stdout(&gtg(&["equiv", "xy", "xyxy2"])).trim(), "not equivalent");
    assert_eq!(gtg(&["equiv", "xy", "uvuv"]).status.code(), Some(2));
}

#[test]
fn classify_reports_citations() {
    let (_, v) = json(&["classify", "xyx2y2"]);
    let c = &v["payload"]["classification"];
    assert_eq!(c["kind"], "Catalog");
    assert_eq!(c["status"]["kind"], "Finite");
    assert_eq!(c["status"]["order"], 288);
    assert_eq!(c["cited"], true);
    assert!(!c["source"].as_str().unwrap().is_empty());

    // degree 8 with constant term -1 is none of the target forms
    let (_, v) = json(&["classify", "uvuvuvuv2uvuv2uv2uv2"]);
    assert_eq!(v["payload"]["classification"]["kind"], "FreeSubgroupByTrace");
    assert_eq!(v["payload"]["classification"]["tau"], serde_json::json!([-1, 0, -5, 0, 11, 0, -6, 0, 1]));

    let (_, v) = json(&["classify", "uvuvuvuv2uv2"]);
    assert_eq!(v["payload"]["classification"]["kind"], "OutOfScope");
}

#[test]
fn certificate_round_trip_and_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let (code, v) = json(&["sc-cert", "--case", "332", "xyxyxy2x2y2xyx2yx2y2"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["ell"], 4);
    assert_eq!(v["payload"]["certified"], true);
    let cert = &v["payload"]["certificate"];
    assert_eq!(cert["N"], 20 * 28 * 4 + 1);
    for s in cert["segments"].as_array().unwrap() {
        assert!(s.as_str().unwrap().len() >= 4);
    }

    let good = dir.path().join("good.json");
    std::fs::write(&good, serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(gtg(&["sc-cert", "--verify", good.to_str().unwrap()]).status.code(), Some(0));

    let bare = dir.path().join("bare.json");
    std::fs::write(&bare, serde_json::to_string(cert).unwrap()).unwrap();
    assert_eq!(gtg(&["sc-cert", "--verify", bare.to_str().unwrap()]).status.code(), Some(0));

    let mut bad = cert.clone();
    bad["N"] = serde_json::json!(100);
    let badp = dir.path().join("bad.json");
    std::fs::write(&badp, serde_json::to_string(&bad).unwrap()).unwrap();
    let o = gtg(&["sc-cert", "--verify", badp.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("INVALID"));

    let missing = dir.path().join("missing.json");
    assert_eq!(gtg(&["sc-cert", "--verify", missing.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn short_word_has_no_certificate() {
    let (code, v) = json(&["sc-cert", "xyxyx2y2"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["certified"], false);
    assert!(v["payload"]["certificate"].is_null());
}

#[test]
fn supplied_subdivisions() {
    let o = gtg(&["sc-cert", "--case", "332", "--subdivision", "(xyxyx)(y2x2y2x)(yx2yx2y2)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("cuts: [0, 5, 9]"));
    let o = gtg(&["sc-cert", "--subdivision=0,5,9", "xyxyxy2x2y2xyx2yx2y2"]);
    assert_eq!(o.status.code(), Some(0));
    let o = gtg(&["sc-cert", "--subdivision=0,1,2", "xyxyxy2x2y2xyx2yx2y2"]);
    assert_eq!(o.status.code(), Some(1));
    let o = gtg(&["sc-cert", "--subdivision", "xyxyxy2x2y2xyx2yx2y2"]);
    assert_eq!(o.status.code(), Some(2));

    let (_, v) = json(&["sc-cert", "--all", "xyxyxy2x2y2xyx2yx2y2"]);
    let subs = v["payload"]["subdivisions"].as_array().unwrap();
    assert!(subs.iter().any(|s| s["cuts"] == serde_json::json!([0, 5, 9])));
}

#[test]
fn usage_and_parse_errors_exit_2() {
    assert_eq!(gtg(&["trace", "xq"]).status.code(), Some(2));
    assert_eq!(gtg(&["trace", "xu"]).status.code(), Some(2));
    assert_eq!(gtg(&["trace", "--case", "232", "xy"]).status.code(), Some(2));
    assert_eq!(gtg(&["search", "--max-c", "1"]).status.code(), Some(2));
    assert_eq!(gtg(&["search", "--case", "232", "--form", "2,0,1"]).status.code(), Some(2));
    assert_eq!(gtg(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(gtg(&["--help"]).status.code(), Some(0));
}

#[test]
fn three_three_table_verifies() {
    // every row of the (3,3) table has c <= 6
    let o = gtg(&["verify-tables", "--case", "332", "--max-c", "7"]);
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{text}");
    assert!(text.starts_with("19/19 classes matched"), "{text}");
    assert!(text.contains("not verified here (cited statuses):"));
    assert!(text.contains("finite of order 288"));
}

fn search_json(dir: &Path, name: &str, args: &[&str]) -> (std::path::PathBuf, String) {
    let o = gtg(args);
    assert_eq!(o.status.code(), Some(0));
    let path = dir.join(name);
    std::fs::write(&path, &o.stdout).unwrap();
    (path, stdout(&o))
}

#[test]
fn search_results_round_trip_into_verify() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["search", "--case", "232", "--max-c", "3", "--format", "json"];
    let (path, text) = search_json(dir.path(), "r.json", &args);
    let doc: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["command"], "search");
    let o = gtg(&["verify-tables", "--case", "232", "--results", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("classes matched"));

    // results of the wrong case are rejected
    let o = gtg(&["verify-tables", "--case", "332", "--results", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_does_not_depend_on_jobs() {
    let base = ["search", "--case", "232", "--max-c", "5", "--format", "json"];
    let one = gtg(&[&base[..], &["--jobs", "1"]].concat());
    let three = gtg(&[&base[..], &["--jobs", "3"]].concat());
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, three.stdout);
    let env = Command::new(env!("CARGO_BIN_EXE_gtg")).args(base).env("GTG_JOBS", "2").output().unwrap();
    assert_eq!(env.stdout, one.stdout);
}

#[test]
fn audit_and_oracle() {
    let (code, v) = json(&["search", "--case", "232", "--form", "1,1,3", "--audit", "300", "--seed", "7"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"][0]["rejected_matches"], 0);
    let (_, again) = json(&["search", "--case", "232", "--form", "1,1,3", "--audit", "300", "--seed", "7"]);
    assert_eq!(v, again);

    let o = gtg(&["oracle", "--case", "232", "--max-k", "8", "--compare"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("search agrees on"));
}

#[test]
fn checkpointed_search_resumes() {
    let dir = tempfile::tempdir().unwrap();
    let ck = dir.path().join("ck");
    let ck = ck.to_str().unwrap();
    let first = gtg(&["search", "--case", "232", "--form", "1,1,4", "--checkpoint", ck, "--format", "json"]);
    assert_eq!(first.status.code(), Some(0));
    let line = std::fs::read_to_string(ck).unwrap();
    assert!(line.starts_with("form=1,1,4 idx="), "{line}");
    let resumed = gtg(&["search", "--case", "232", "--form", "1,1,4", "--checkpoint", ck, "--resume", "--format", "json"]);
    assert_eq!(resumed.status.code(), Some(0));
    let a: Value = serde_json::from_slice(&first.stdout).unwrap();
    let b: Value = serde_json::from_slice(&resumed.stdout).unwrap();
    assert_eq!(a["payload"][0]["classes"], b["payload"][0]["classes"]);
    assert_eq!(gtg(&["search", "--case", "232", "--resume"]).status.code(), Some(2));
}

#[test]
fn catalog_export() {
    let (code, v) = json(&["catalog"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"].as_array().unwrap().len(), 45);
    let o = gtg(&["catalog", "--case", "332", "--format", "csv"]);
    assert_eq!(stdout(&o).lines().count(), 20);
}
