//! End-to-end runs of the `fibform` binary.

use std::process::Command;

use serde_json::Value;

fn fibform(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_fibform"))
        .args(args)
        .env_remove("FIBFORM_ONLINE")
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exited normally"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (code, stdout, _) = fibform(&full);
    (code, serde_json::from_str(&stdout).expect("one JSON document"))
}

fn column(v: &Value, field: &str) -> Vec<String> {
    v[field].as_array().unwrap().iter().map(|x| x["value"].as_str().unwrap().to_string()).collect()
}

#[test]
fn eval_text_output() {
    let (code, out, _) = fibform(&["eval", "(2n+3)/5*F(n) - n/5*F(n-1)", "--from", "0", "--to", "6"]);
    assert_eq!(code, 0);
    assert_eq!(out, "0 0\n1 1\n2 1\n3 3\n4 5\n5 10\n6 18\n");
    let (_, out, _) = fibform(&["eval", "F(n)", "--from", "-4", "--to", "4"]);
    let vals: Vec<&str> = out.lines().map(|l| l.split(' ').nth(1).unwrap()).collect();
    assert_eq!(vals, ["-3", "2", "-1", "1", "0", "1", "1", "2", "3"]);
}

#[test]
fn eval_json_output() {
    let (code, v) = json(&["eval", "1/2", "--from", "0", "--to", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["command"], "eval");
    assert_eq!(column(&v, "values"), ["1/2", "1/2", "1/2"]);
    assert!(v["error"].is_null());
}

#[test]
fn parse_error_exit_code() {
    let (code, _, err) = fibform(&["eval", "F(n", "--to", "1"]);
    assert_eq!(code, 2);
    assert!(err.contains("error (parse)"), "{err}");
    let (code, v) = json(&["canon", "2*"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "parse");
    assert!(v["error"]["offset"].is_u64());
    assert_eq!(fibform(&["no-such-command"]).0, 2);
    assert_eq!(fibform(&["--help"]).0, 0);
}

#[test]
fn canon_and_rec() {
    let (_, out, _) = fibform(&["canon", "4n/5*F(n+1) + (3n+3)/5*F(n) + 1/2 + 1/2*(-1)^n"]);
    assert_eq!(out, "P0: 7/5*n + 3/5\nP1: 4/5*n\ne: 1/2\nf: 1/2\n");
    let (code, v) = json(&["rec", "(2n+3)/5*F(n) - n/5*F(n-1)", "--extend", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["order"], 4);
    assert_eq!(v["recurrence"], serde_json::json!(["2", "1", "-2", "-1"]));
    assert_eq!(v["initial"], serde_json::json!(["0", "1", "1", "3"]));
    assert_eq!(v["extended_forward"], serde_json::json!(["5", "10"]));
    let (_, out, _) = fibform(&["rec", "(5n^2-43n+88)/50*F(n) + (14n+50)/50*F(n-1)"]);
    assert!(out.contains("characteristic polynomial: x^6 - 3*x^5 + 5*x^3 - 3*x - 1"), "{out}");
    assert!(out.contains("w(n) = 3*w(n-1) - 5*w(n-3) + 3*w(n-5) + w(n-6)"), "{out}");
}

#[test]
fn check_exit_codes() {
    let (code, out, _) = fibform(&["check", "n/2*F(n)"]);
    assert_eq!(code, 3);
    assert_eq!(out, "NON-INTEGER\nwitness: n = 1, value 1/2\n");
    let (code, out, _) = fibform(&["check", "4n/5*F(n+1) + (3n+3)/5*F(n) + 1/2 + 1/2*(-1)^n"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("INTEGER\ncertificate: 1, 2, 6, 12, 26, 50"), "{out}");
}

#[test]
fn theorem_and_synth() {
    let (code, out, _) = fibform(&["theorem", "3", "--e", "1", "--z", "1,1,1,2"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("(1/10*n^2 - 43/50*n + 44/25)*F(n) + (7/25*n + 1)*F(n-1)"));
    let (_, out, _) = fibform(&["theorem", "1", "--d", "0", "--z", "1,1,3"]);
    assert!(out.starts_with("(2/5*n + 3/5)*F(n) + (-1/5*n)*F(n-1)\n"), "{out}");
    let (_, v) = json(&["theorem", "2", "--f", "0", "--z", "0,1,4,12,31"]);
    assert_eq!(v["expression"], "(1/5*n^2 - 1/25*n - 4/25)*F(n) + (1/10*n^2 + 1/50*n)*F(n-1)");
    let (code, v) = json(&["synth", "--p0-deg", "1", "--p1-deg", "1", "--const", "--alt", "--values", "0,1,2,6,12,26"]);
    assert_eq!(code, 0);
    assert_eq!(column(&v, "coefficients"), ["4/5", "-4/5", "3/5", "0", "1/2", "-1/2"]);
    // (an+b)F(n) vanishes at n = 0, so two values cannot pin it down
    let (code, v) = json(&["synth", "--p0-deg", "1", "--values", "1,-2"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "degenerate");
}

#[test]
fn oeis_offline_and_gated() {
    let (code, out, _) = fibform(&["oeis", "1,1,3,5,9,15"]);
    assert_eq!(code, 0);
    assert_eq!(out, "A001595 (match at n = 0)\n");
    let (_, out, _) = fibform(&["oeis", "1,1,2,2,4,7,15,32,69"]);
    assert_eq!(out, "no match\n");
    assert_eq!(fibform(&["oeis", "1,2"]).0, 2);
    // the flag alone is not enough without FIBFORM_ONLINE=1
    let (code, v) = json(&["oeis", "0,1,1,2,3", "--online"]);
    assert_eq!(code, 4);
    assert_eq!(v["error"]["kind"], "network-disabled");
}

#[test]
fn oracle_counts() {
    let (code, out, _) = fibform(&["oracle", "compositions", "--from", "3", "--to", "6"]);
    assert_eq!(code, 0);
    assert_eq!(out, "3 3\n4 5\n5 10\n6 18\n");
    let (_, out, _) = fibform(&["oracle", "leonardo", "--to", "5"]);
    assert_eq!(out, "0 1\n1 1\n2 3\n3 5\n4 9\n5 15\n");
    assert_eq!(fibform(&["oracle", "inversions", "--to", "40"]).0, 2);
}

#[test]
fn synth_output_reparses() {
    let (_, v) = json(&["synth", "--p0-deg", "2", "--p1-deg", "1", "--values", "3,-1,4,1,-5"]);
    let text = v["expression"].as_str().unwrap();
    let e = fibform::parse(text).unwrap();
    let vals: Vec<String> = e.values(0..=4).iter().map(ToString::to_string).collect();
    assert_eq!(vals, ["3", "-1", "4", "1", "-5"]);
}
