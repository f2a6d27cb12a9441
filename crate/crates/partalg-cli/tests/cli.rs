//! End-to-end tests of the binary: output formats, worked examples, exit
//! codes, and determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_partalg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn table_reference_values() {
    let out = run(&["table"]);
    assert!(out.status.success());
    let text = stdout(&out);
    // Row k = 4, column n = 6 and the unrestricted column of row 6.
    let row4: Vec<&str> = text
        .lines()
        .find(|l| l.starts_with("4,"))
        .expect("row 4 present")
        .split(',')
        .collect();
    assert_eq!(row4[5], "4111");
    assert_eq!(row4[8], "4140");
    let row6: Vec<&str> = text
        .lines()
        .find(|l| l.starts_with("6,"))
        .expect("row 6 present")
        .split(',')
        .collect();
    assert_eq!(row6[8], "4213597");
    // Half-integer rows hold the constant 1 at k = 1/2.
    let half: Vec<&str> = text
        .lines()
        .find(|l| l.starts_with("1/2,"))
        .expect("row 1/2 present")
        .split(',')
        .collect();
    assert!(half[1..].iter().all(|&v| v == "1"));
    // 12 rows of 8 entries each.
    let data_rows = text
        .lines()
        .filter(|l| !l.starts_with('#') && !l.starts_with('k'))
        .count();
    assert_eq!(data_rows, 12);
}

#[test]
fn table_output_is_deterministic() {
    let a = run(&["table", "--format", "json"]);
    let b = run(&["table", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn mult_worked_product() {
    let out = run(&[
        "mult",
        "--n",
        "3",
        "1,3|2|4,9,11|5,7|6,16|8,14|10|12,13,15",
        "1,2,3|4,5,11|6,8|7,16|9,12|10|13,15|14",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(
        text.contains("9 d[1,2,3|4,5,9,11|6,8|7,14|10|12,13,15|16]"),
        "{text}"
    );
}

#[test]
fn mult_identity_norms_p_generator() {
    // p_1^2 = p_1 shows up as coefficient 1/3 on the gap diagram at n = 3.
    let out = run(&["mult", "--n", "3", "--k", "2", "1|3|2,4", "1|3|2,4"]);
    assert!(out.status.success());
    // Unnormalized inputs: d * d = n^1 d.
    assert!(stdout(&out).contains("3 d[1|2,4|3]"), "{}", stdout(&out));
}

#[test]
fn convert_expands_orbit_element() {
    let out = run(&["convert", "--n", "3", "--basis", "orbit", "1|2,3|4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("2 d[1,2,3,4]"));
    assert!(text.contains("-1 d[1,2,3|4]"));
    assert!(text.contains("-1 d[1,4|2,3]"));
    assert!(text.contains("-1 d[1|2,3,4]"));
    assert!(text.contains("1 d[1|2,3|4]"));
}

#[test]
fn convert_round_trips_through_json() {
    let orbit = run(&["convert", "--n", "3", "--format", "json", "1|2,3|4"]);
    assert!(orbit.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&orbit)).unwrap();
    assert_eq!(v["basis"], "orbit");
    assert_eq!(v["terms"].as_array().unwrap().len(), 5);
    // Feed the JSON element back to convert and recover the single diagram.
    let back = run(&["convert", &v.to_string()]);
    assert!(back.status.success());
    assert!(stdout(&back).contains("1 d[1|2,3|4]"));
}

#[test]
fn phi_emits_coordinate_triples() {
    let out = run(&["phi", "--n", "2", "--k", "1", "--basis", "orbit", "1,2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("0 0 1"));
    assert!(text.contains("1 1 1"));
    let json = run(&[
        "phi", "--n", "2", "--k", "1", "--basis", "orbit", "--format", "json", "1,2",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v["dim"], 2);
}

#[test]
fn bratteli_dot_and_text() {
    let dot = run(&["bratteli", "--n", "3", "--k", "2", "--format", "dot"]);
    assert!(dot.status.success());
    let text = stdout(&dot);
    assert!(text.contains("digraph bratteli"));
    assert!(text.contains("[2,1]:1"));
    let plain = run(&["bratteli", "--n", "3", "--k", "2"]);
    assert!(stdout(&plain).contains("k=2\t[1,1,1]:1 [2,1]:3 [3]:2"));
}

#[test]
fn bijection_worked_example() {
    let out = run(&["bijection", "--n", "5", "4|1,3,5|6,7|2,8"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("round trip: ok"));
    assert!(text.contains("set partition: 1,3,5|2,8|4|6,7"));
    assert!(text.contains("j=8\t[0][4][1 3 5][6 7][2 8]"));
    // JSON form carries the shape sequence.
    let json = run(&[
        "bijection",
        "--n",
        "5",
        "--format",
        "json",
        "4|1,3,5|6,7|2,8",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v["round_trip"], true);
    assert_eq!(v["vacillating"]["shapes"].as_array().unwrap().len(), 17);
}

#[test]
fn bijection_accepts_tableau_json() {
    let out = run(&[
        "bijection",
        "--n",
        "5",
        "--format",
        "json",
        "[[[0],[6]],[[2],[4,7]],[[1,3,5]]]",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["round_trip"], true);
    assert_eq!(v["vacillating"]["shapes"].as_array().unwrap().len(), 15);
    assert_eq!(v["vacillating"]["shapes"][14], serde_json::json!([2, 2, 1]));
}

#[test]
fn char_reports_multiplicity_on_identity() {
    // xi_lambda(I_k) with mu = [1^k] equals the multiplicity.
    let out = run(&[
        "char", "--lambda", "[3,1]", "--mu", "[1,1]", "--k", "2", "--n", "4",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("= 3"));
    // Out-of-range n < 2k is a usage error.
    let bad = run(&[
        "char", "--lambda", "[2,1]", "--mu", "[1]", "--k", "2", "--n", "3",
    ]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn char_table_csv() {
    let out = run(&["char", "--n", "3", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("\"[3]\",1,1,1"));
    assert!(text.contains("\"[2,1]\",-1,0,2"));
    assert!(text.contains("\"[1,1,1]\",1,-1,1"));
}

#[test]
fn dims_reports_squares_and_rank() {
    let out = run(&["dims", "--k", "2", "--n", "3", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["restricted_bell"], "14");
    assert_eq!(v["image_rank"], 14);
}

#[test]
fn verify_bases_reports_json() {
    let out = run(&["verify", "bases"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["failed"], 0);
    assert!(v["passed"].as_u64().unwrap() >= 4);
    assert_eq!(v["suite"], "bases");
}

#[test]
fn verify_all_exits_zero() {
    let out = run(&["verify", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["failed"], 0);
    assert_eq!(v["skipped"], 0);
}

#[test]
fn verify_budget_shortfall_skips_not_fails() {
    // A tiny matrix budget turns tensor-space checks into skips, never
    // failures, and the exit stays zero.
    let out = run(&["verify", "kernel", "--budget", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["failed"], 0);
    assert!(v["skipped"].as_u64().unwrap() >= 1);
}

#[test]
fn verify_is_seed_deterministic() {
    let a = run(&["verify", "homomorphism", "--seed", "7"]);
    let b = run(&["verify", "homomorphism", "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn exit_codes() {
    // Usage error.
    let out = run(&["mult", "--n", "3", "not a partition", "1,2"]);
    assert_eq!(out.status.code(), Some(2));
    // Budget exceeded.
    let out = run(&["phi", "--n", "5", "--k", "7", "1,2"]);
    assert_eq!(out.status.code(), Some(3));
    // Success.
    let out = run(&["table", "--max-k", "1"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn half_integer_k_forms() {
    for k in ["2.5", "5/2"] {
        let out = run(&["dims", "--k", k, "--n", "3", "--format", "json"]);
        assert!(out.status.success(), "k = {k}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(v["restricted_bell"], "41", "k = {k}");
    }
}
