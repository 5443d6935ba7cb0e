use std::process::{Command, Output};

use serde_json::Value;

fn bsymbol(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bsymbol"))
        .args(args)
        .env_remove("BSYMBOL_ENUMERATION_LIMIT")
        .env_remove("BSYMBOL_SUBSPACE_LIMIT")
        .env_remove("BSYMBOL_TOLERANCE")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn weight_of_worked_word() {
    let out = bsymbol(&["weight", "--q", "2", "--b", "3", "--word", "0,0,1,0,0,0,1,0,0,0,0,1,0,1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "11");
}

#[test]
fn weight_accepts_vectors_and_logs() {
    // over F_4, 2 = 0:1 and the same word written by discrete logs
    let a = bsymbol(&["weight", "--q", "4", "--b", "1,2", "--word", "0:1,0,1:1", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    let v = json(&a);
    assert_eq!(v["word"], serde_json::json!([2, 0, 3]));
    assert_eq!(v["weights"]["1"], 2);
    assert_eq!(v["weights"]["2"], 3);
    let b = bsymbol(&["weight", "--q", "4", "--b", "2", "--word", "1,-,2", "--alpha-log"]);
    assert_eq!(stdout(&b).trim(), "3");
}

#[test]
fn table1_first_row() {
    let out = bsymbol(&["table1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("Q,q,b,N,N1,#U"));
    assert_eq!(lines.next(), Some("16,2,3,5,5,3"));
    assert_eq!(lines.count(), 11);
}

#[test]
fn table2_all_griesmer() {
    let out = bsymbol(&["table2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 16);
    assert!(text.lines().skip(1).all(|l| l.ends_with(",true,pass")));
}

#[test]
fn enumerate_embeds_config_and_counts_q() {
    let out = bsymbol(&["enumerate", "--p", "2", "--s", "1", "--m", "4", "--N", "5", "--b", "2", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["total"], 16);
    assert_eq!(v["config"]["seed"], 7);
    assert_eq!(v["config"]["field"]["modulus"], serde_json::json!([1, 1, 0, 0, 1]));
    assert_eq!(v["config"]["args"]["code"]["N"], 5);
    let closed =
        json(&bsymbol(&["enumerate", "--p", "2", "--s", "1", "--m", "4", "--N", "5", "--b", "2", "--mode", "closed"]));
    assert_eq!(closed["weights"], v["weights"]);
}

#[test]
fn modes_agree_on_larger_code() {
    let base = ["enumerate", "--p", "3", "--s", "1", "--m", "4", "--N", "4", "--b", "3"];
    let weights: Vec<Value> = ["full", "per-class", "orbits", "closed"]
        .iter()
        .map(|mode| {
            let mut args = base.to_vec();
            args.extend(["--mode", mode]);
            json(&bsymbol(&args))["weights"].clone()
        })
        .collect();
    assert!(weights.windows(2).all(|w| w[0] == w[1]), "{weights:?}");
}

#[test]
fn field_config_file_and_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("field.json");
    std::fs::write(&cfg, r#"{"p": 2, "e": 4, "modulus": [1, 0, 0, 1, 1]}"#).unwrap();
    let out_path = dir.path().join("uset.json");
    let cfg_s = cfg.to_str().unwrap();
    let out = bsymbol(&[
        "uset",
        "--p",
        "2",
        "--s",
        "1",
        "--m",
        "4",
        "--N",
        "5",
        "--b",
        "3",
        "--field-config",
        cfg_s,
        "--output",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(v["config"]["field"]["modulus"], serde_json::json!([1, 0, 0, 1, 1]));

    // the config must describe the requested field
    let bad = bsymbol(&["uset", "--p", "3", "--s", "1", "--m", "4", "--N", "5", "--b", "3", "--field-config", cfg_s]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn usage_and_input_errors_exit_2() {
    assert_eq!(bsymbol(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(bsymbol(&["weight", "--q", "2", "--word", "1,0"]).status.code(), Some(2));
    assert_eq!(bsymbol(&["weight", "--q", "6", "--b", "1", "--word", "1,0"]).status.code(), Some(2));
    assert_eq!(bsymbol(&["uset", "--p", "2", "--s", "1", "--m", "4", "--N", "7", "--b", "2"]).status.code(), Some(2));
    assert_eq!(bsymbol(&["field", "--p", "2", "--e", "3", "--modulus", "1,1,1,1"]).status.code(), Some(2));
}

#[test]
fn enumeration_limit_from_env() {
    let out = Command::new(env!("CARGO_BIN_EXE_bsymbol"))
        .args(["enumerate", "--p", "2", "--s", "1", "--m", "8", "--N", "3", "--b", "2"])
        .env("BSYMBOL_ENUMERATION_LIMIT", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let ok = bsymbol(&["enumerate", "--p", "2", "--s", "1", "--m", "8", "--N", "3", "--b", "2"]);
    assert_eq!(ok.status.code(), Some(0));
}

#[test]
fn hierarchy_formats() {
    let args = ["hierarchy", "--p", "2", "--s", "1", "--m", "4", "--N", "5", "--ghw"];
    let v = json(&bsymbol(&args));
    assert!(v["config"].is_object());
    let mut csv = args.to_vec();
    csv.extend(["--format", "csv"]);
    let out = bsymbol(&csv);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("b,d_b,"));
}

#[test]
fn shorten_simplex_is_griesmer() {
    let v = json(&bsymbol(&["shorten", "--p", "2", "--s", "1", "--m", "4", "--N", "1", "--b", "3", "--simplex"]));
    assert_eq!(v["params"], serde_json::json!([14, 3, 8]));
    assert_eq!(v["griesmer"], true);
    assert_eq!(v["T"].as_array().unwrap().len(), 1);
}

#[test]
fn periods_exact_and_closed() {
    let exact = json(&bsymbol(&["periods", "--p", "2", "--s", "1", "--m", "4", "--k", "5"]));
    assert_eq!(exact["eta"], serde_json::json!([3, -1, -1, -1, -1]));
    assert_eq!(exact["sum_is_minus_one"], true);
    let closed = bsymbol(&["periods", "--p", "2", "--s", "1", "--m", "4", "--k", "5", "--closed"]);
    assert_eq!(closed.status.code(), Some(0));
    assert_eq!(json(&closed)["eta"], exact["eta"]);
    let conflict = bsymbol(&["periods", "--p", "2", "--s", "1", "--m", "4", "--k", "5", "--closed", "--exact"]);
    assert_eq!(conflict.status.code(), Some(2));
}

#[test]
fn field_element_traces() {
    let v = json(&bsymbol(&["field", "--p", "2", "--e", "4", "--element", "1"]));
    assert_eq!(v["order"], 16);
    assert_eq!(v["element"]["log"], 0);
    // Tr_{16/2}(1) = 4 mod 2 = 0
    assert_eq!(v["element"]["traces"]["1"], 0);
}

#[test]
fn scan_csv_header() {
    let out = bsymbol(&["conjecture15-scan", "--max-order", "16"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("Q,k,min_abs_eval,verdict\n"));
}

#[test]
fn verify_is_deterministic() {
    let a = bsymbol(&["verify", "--seed", "3"]);
    let b = bsymbol(&["verify", "--seed", "3"]);
    assert_eq!(a.status.code(), Some(0));
    let (mut va, mut vb) = (json(&a), json(&b));
    // wall-clock measurements are the only permitted difference
    for v in [&mut va, &mut vb] {
        v["checks"].as_array_mut().unwrap().retain(|c| !c["name"].as_str().unwrap().contains("runtime"));
    }
    assert_eq!(va, vb);
    assert_eq!(va["schema_version"], 1);
    let csv = bsymbol(&["verify", "--format", "csv"]);
    assert!(stdout(&csv).starts_with("suite,name,reference,status,expected,measured,informational\n"));
}
