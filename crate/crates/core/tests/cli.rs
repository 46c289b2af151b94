use std::process::Command;

use serde_json::Value;

use eqhorn::{Partition, TPolynomial};

fn run(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_eqhorn"))
        .args(args)
        .output()
        .expect("binary runs");
    let stdout = String::from_utf8(out.stdout).expect("utf-8 output");
    let doc = serde_json::from_str(stdout.trim()).unwrap_or_else(|e| panic!("{args:?}: {e}: {stdout}"));
    (out.status.code().expect("exit code"), doc)
}

fn ok(args: &[&str]) -> Value {
    let (code, doc) = run(args);
    assert_eq!(code, 0, "{args:?}: {doc}");
    assert_eq!(doc["status"], "ok", "{args:?}: {doc}");
    assert!(doc["timing_ms"].is_number());
    doc
}

#[test]
fn equivariant_point_class() {
    let doc = ok(&["coef", "equivariant", "-l", "1", "-m", "1", "-n", "1", "--rows", "1"]);
    let (p, graham) = TPolynomial::from_json_value(&doc["result"]).unwrap();
    assert_eq!(p, TPolynomial::binomial(1, 2));
    assert_eq!(graham, Some(TPolynomial::var(1)));
    assert_eq!(doc["result"]["text"], "t_1 - t_2");
}

#[test]
fn equivariant_rows_default_to_the_outer_length() {
    let doc = ok(&["coef", "equivariant", "-l", "1", "-m", "1", "-n", "1,1"]);
    assert_eq!(doc["result"]["rows"], 2);
    let (p, _) = TPolynomial::from_json_value(&doc["result"]).unwrap();
    assert_eq!(p, TPolynomial::one());
}

#[test]
fn classical_coefficients() {
    assert_eq!(ok(&["coef", "classical", "-l", "3", "-m", "2,1,1", "-n", "3,2,1,1"])["result"], 1);
    assert_eq!(ok(&["coef", "classical", "-l", "3", "-m", "1", "-n", "2,1,1"])["result"], 0);
    assert_eq!(ok(&["coef", "classical", "-l", "2,1", "-m", "2,1", "-n", "3,2,1"])["result"], 2);
}

#[test]
fn malformed_partitions_exit_2() {
    for args in [
        &["coef", "classical", "-l", "1,2", "-m", "1", "-n", "1"][..],
        &["nonzero", "-l", "x", "-m", "1", "-n", "1"][..],
        &["coef", "equivariant", "-l", "1", "-m", "1", "-n", "1,1", "--rows", "1"][..],
    ] {
        let (code, doc) = run(args);
        assert_eq!(code, 2, "{args:?}");
        assert_eq!(doc["status"], "error");
    }
}

#[test]
fn usage_errors_exit_2() {
    let (code, doc) = run(&["coef"]);
    assert_eq!(code, 2);
    assert_eq!(doc["error"]["kind"], "usage");
    assert_eq!(run(&["verify", "saturation", "--box", "3by3"]).0, 2);
}

#[test]
fn nonvanishing_examples() {
    assert_eq!(ok(&["nonzero", "-l", "4,2,1", "-m", "3,2", "-n", "4,3,1"])["result"], true);
    assert_eq!(ok(&["nonzero", "-l", "4,2,1", "-m", "3,3", "-n", "4,3,1"])["result"], true);
    let doc = ok(&["nonzero", "-l", "1", "-m", "", "-n", "2"]);
    assert_eq!(doc["result"], false);
    assert!(doc.get("certificate").is_none());
}

#[test]
fn witness_certificate() {
    let doc = ok(&["nonzero", "-l", "4,1", "-m", "3,2,1", "-n", "4,2,2", "--witness"]);
    assert_eq!(doc["result"], true);
    let cert = &doc["certificate"];
    let t = eqhorn::EdgeLabeledTableau::parse(cert["tableau"].as_str().unwrap()).unwrap();
    assert!(t.is_witness());
    assert_eq!(t.content(), vec![3, 2, 1]);
    assert_eq!(cert["weight_factors"].as_array().unwrap().len(), 3);
    let (w, _) = TPolynomial::from_json_value(&cert["weight"]).unwrap();
    assert_eq!(w, t.weight().unwrap());
}

#[test]
fn feasibility_examples() {
    let doc = ok(&["feasible", "majorized", "-x", "1", "-y", "0", "-z", "0"]);
    assert_eq!(doc["result"]["feasible"], true);

    let doc = ok(&["feasible", "classical", "-x", "2,0", "-y", "0,0", "-z", "1,1"]);
    assert_eq!(doc["result"]["feasible"], false);
    let triple = &doc["certificate"]["triple"];
    assert_eq!(triple["i"]["elements"], serde_json::json!([2]));
    assert_eq!(triple["j"]["elements"], serde_json::json!([1]));
    assert_eq!(triple["k"]["elements"], serde_json::json!([2]));

    let doc = ok(&["feasible", "classical", "-x", "1,0", "-y", "1,0", "-z", "1,1"]);
    assert_eq!(doc["result"]["feasible"], true);

    let (code, _) = run(&["feasible", "classical", "-x", "0,1", "-y", "0,0", "-z", "1,1"]);
    assert_eq!(code, 2);
}

#[test]
fn triple_lists() {
    assert_eq!(ok(&["triples", "-d", "1", "-r", "2"])["result"]["count"], 3);
    assert_eq!(ok(&["triples", "-d", "1", "-r", "3"])["result"]["count"], 6);
    let key = |t: &Value| format!("{}|{}|{}", t["i"]["elements"], t["j"]["elements"], t["k"]["elements"]);
    let lr = ok(&["triples", "-d", "2", "-r", "3"]);
    let sdr = ok(&["triples", "-d", "2", "-r", "3", "--family", "sdr"]);
    let sdr_keys: Vec<String> = sdr["result"]["triples"].as_array().unwrap().iter().map(key).collect();
    for t in lr["result"]["triples"].as_array().unwrap() {
        assert!(sdr_keys.contains(&key(t)));
    }
}

#[test]
fn verify_suites_pass() {
    for args in [
        &["verify", "saturation", "--box", "2x2", "--stretch", "2"][..],
        &["verify", "horn", "--rows", "2", "--max-part", "2"][..],
        &["verify", "oracle", "--box", "1x2", "--trials", "2"][..],
    ] {
        let doc = ok(args);
        assert_eq!(doc["result"]["passed"], true, "{args:?}");
    }
}

#[test]
fn human_output_is_plain_text() {
    let out = Command::new(env!("CARGO_BIN_EXE_eqhorn"))
        .args(["--human", "coef", "equivariant", "-l", "1", "-m", "1", "-n", "1", "--rows", "2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("t_2 - t_3"));
}

#[test]
fn deterministic_results() {
    let args = ["verify", "oracle", "--box", "1x1", "--seed", "7"];
    assert_eq!(ok(&args)["result"], ok(&args)["result"]);
    let args = ["nonzero", "-l", "2,1", "-m", "2,1", "-n", "3,2,1", "--witness"];
    assert_eq!(ok(&args)["certificate"], ok(&args)["certificate"]);
}

#[test]
fn partitions_round_trip_through_json() {
    let doc = ok(&["nonzero", "-l", "2,1", "-m", "1", "-n", "2,1", "--witness"]);
    let t = eqhorn::EdgeLabeledTableau::parse(doc["certificate"]["tableau"].as_str().unwrap()).unwrap();
    let outer: Partition = t.shape().outer().to_string().parse().unwrap();
    assert_eq!(&outer, t.shape().outer());
}
