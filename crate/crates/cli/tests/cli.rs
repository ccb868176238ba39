use std::process::{Command, Output};

use serde_json::Value;
use sgr_core::{FractionalIdeal, NumericalSemigroup};

fn sgr_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_sgr"));
    cmd.args(args).env_remove("SGR_MAX_POSET");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("run sgr")
}

fn sgr(args: &[&str]) -> Output {
    sgr_env(args, &[])
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = sgr(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), v)
}

fn ints(v: &Value) -> Vec<i64> {
    serde_json::from_value(v.clone()).unwrap()
}

#[test]
fn analyze() {
    let (code, doc) = json(&["analyze", "3,4"]);
    assert_eq!(code, 0);
    assert_eq!(doc["schema_version"], "1");
    assert_eq!(doc["command"], "analyze");
    assert_eq!(ints(&doc["input"]["generators"]), vec![3, 4]);
    let r = &doc["result"];
    assert_eq!(r["frobenius"], 5);
    assert_eq!(r["conductor"], 6);
    assert_eq!(r["symmetric"], true);
    assert_eq!(r["type"], 1);

    let (_, doc) = json(&["analyze", "1"]);
    assert_eq!(doc["result"]["conductor"], 0);
    assert_eq!(doc["result"]["symmetric"], true);

    let (_, doc) = json(&["analyze", "3,4,5"]);
    assert_eq!(doc["result"]["symmetric"], false);
    assert_eq!(doc["result"]["type"], 2);
}

#[test]
fn generator_syntax() {
    let (_, a) = json(&["analyze", "3,4,4"]);
    let (_, b) = json(&["analyze", "3", "4"]);
    let (_, c) = json(&["analyze", "4 3"]);
    assert_eq!(a["result"]["minimal_generators"], b["result"]["minimal_generators"]);
    assert_eq!(b["result"], c["result"]);
}

#[test]
fn invalid_input_exits_2() {
    for args in [
        &["analyze", "4,6"][..],
        &["analyze", "0,3"],
        &["analyze", "x"],
        &["analyze"],
        &["catalog", "3,4,5"],
        &["verify", "3,4,5"],
        &["iso", "3,4,5"],
        &["threegen", "2", "3", "7", "1"],
        &["threegen", "3", "4", "5", "2"],
        &["glue", "--h1", "2,3", "--h2", "1", "--d1", "7", "--d2", "3"],
        &["verify", "3,4", "--slack", "-1"],
    ] {
        let out = sgr(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
    let out = sgr(&["verify", "3,4,5"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("NotSymmetric"));
}

#[test]
fn catalog_counts() {
    for (gens, rows) in [("3,4", 6), ("4,6,7", 10), ("1", 0)] {
        let (code, doc) = json(&["catalog", gens]);
        assert_eq!(code, 0);
        assert_eq!(doc["result"]["entries"].as_array().unwrap().len(), rows);
        assert_eq!(doc["result"]["count"], rows);
    }
}

#[test]
fn catalog_table_has_one_row_per_entry() {
    let out = sgr(&["catalog", "3,4"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let rows = text.lines().filter(|l| l.contains("(t^")).count();
    assert_eq!(rows, 6);
    assert!(text.lines().nth(2).unwrap().contains("below"));
}

#[test]
fn catalog_json_round_trips() {
    let out = sgr(&["catalog", "4,6,7", "--format", "json"]);
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    let h = NumericalSemigroup::new(&ints(&doc["input"]["generators"])).unwrap();
    let mut rebuilt = doc.clone();
    for e in rebuilt["result"]["entries"].as_array_mut().unwrap() {
        let ideal = FractionalIdeal::new(&h, &ints(&e["generators"])).unwrap();
        e["generators"] = serde_json::to_value(ideal.generators()).unwrap();
        e["mu"] = ideal.mu().into();
        e["a_quotient"] = ideal.quotient_profile().unwrap().a_invariant.into();
    }
    assert_eq!(rebuilt, doc);
}

#[test]
fn json_output_is_deterministic() {
    for args in [
        &["catalog", "3,5", "--format", "json"][..],
        &["verify", "4,6,7", "--format", "json"],
        &["iso", "3,7", "--format", "json"],
    ] {
        assert_eq!(sgr(args).stdout, sgr(args).stdout);
    }
}

#[test]
fn verify_passes() {
    let (code, doc) = json(&["verify", "3,5"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["verdict"], "PASS");
    assert_eq!(doc["result"]["counts"]["oracle"], 8);
    assert_eq!(doc["result"]["counts"]["formula"], 8);
    assert_eq!(doc["result"]["counts"]["conductor"], 8);

    let (code, doc) = json(&["verify", "2,5", "--slack", "3"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["counts"]["oracle"], 4);
    assert_eq!(doc["result"]["bound"], 9);
    assert_eq!(doc["input"]["slack"], 3);
}

#[test]
fn poset_guard() {
    // ⟨3,5⟩ at bound 14 has 11 poset elements
    let out = sgr_env(&["verify", "3,5"], &[("SGR_MAX_POSET", "10")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--force"));
    let out = sgr_env(&["verify", "3,5", "--force"], &[("SGR_MAX_POSET", "10")]);
    assert_eq!(out.status.code(), Some(0));
    let out = sgr_env(&["verify", "3,5"], &[("SGR_MAX_POSET", "11")]);
    assert_eq!(out.status.code(), Some(0));

    // ⟨5,8⟩ at bound 54 has 41 elements, one over the default
    assert_eq!(sgr(&["verify", "5,8"]).status.code(), Some(2));
    assert_eq!(sgr(&["verify", "5,8", "--force"]).status.code(), Some(0));
    assert_eq!(sgr(&["verify", "5,7"]).status.code(), Some(0));

    let out = sgr_env(&["verify", "3,5"], &[("SGR_MAX_POSET", "lots")]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn colon_command() {
    let (code, doc) = json(&["colon", "3,4", "--m", "2"]);
    assert_eq!(code, 0);
    let rows = doc["result"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(ints(&rows[0]["generators"]), vec![4, 6]);
    assert_eq!(rows[0]["a_quotient"], 3);

    let (_, doc) = json(&["colon", "4,6,7"]);
    let ms: Vec<i64> = doc["result"]["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["m"].as_i64().unwrap())
        .collect();
    assert_eq!(ms, vec![1, 2, 3, 5, 9]);

    // m in H gives the unit ideal, whose quotient is empty
    let (_, doc) = json(&["colon", "3,4", "--m", "3"]);
    assert_eq!(doc["result"]["rows"][0]["a_quotient"], Value::Null);
}

#[test]
fn iso_command() {
    let (code, doc) = json(&["iso", "3,4"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["count"], 3);
    let first = &doc["result"]["classes"][0]["members"];
    assert_eq!(ints(&first[0]), vec![3, 8]);
    assert_eq!(ints(&first[1]), vec![4, 9]);
    let (_, doc) = json(&["iso", "1"]);
    assert_eq!(doc["result"]["count"], 0);
}

#[test]
fn glue_and_threegen() {
    let (code, doc) = json(&["glue", "--h1", "2,3", "--h2", "1", "--d1", "2", "--d2", "7"]);
    assert_eq!(code, 0);
    assert_eq!(ints(&doc["result"]["glued"]), vec![4, 6, 7]);
    assert_eq!(doc["result"]["symmetric"], true);

    let (code, doc) = json(&["threegen", "2", "3", "7", "2"]);
    assert_eq!(code, 0);
    let r = &doc["result"];
    assert_eq!(r["predicted"], 10);
    assert_eq!(r["actual"], 10);
    assert_eq!(r["presentation"], "k[X,Y,Z]/(X^3 - Y^2, Z^2 - X^2 Y^1)");
}

#[test]
fn value_semigroup_matches_catalog() {
    for gens in ["3,4", "1", "4,6,7"] {
        let (code, cat) = json(&["catalog", gens]);
        let (code2, val) = json(&["value-semigroup", gens]);
        assert_eq!((code, code2), (0, 0));
        assert_eq!(val["command"], "value-semigroup");
        assert!(val["result"]["note"].as_str().unwrap().contains("c(H_A)"));
        let mut stripped = val["result"].clone();
        stripped.as_object_mut().unwrap().remove("note");
        assert_eq!(stripped, cat["result"]);
    }
}
