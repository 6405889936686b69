use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_c4sq")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    let out = stdout(o);
    serde_json::from_str(out.lines().last().expect("one json line")).unwrap()
}

#[test]
fn eval_examples() {
    let o = run(&["eval", "2", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "17");
    let o = run(&["eval", "1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"]);
    assert_eq!(stdout(&o).trim(), "1");
    let ones = ["1"; 16];
    let o = run(&[&["eval"][..], &ones[..]].concat());
    assert_eq!(stdout(&o).trim(), "0");
}

#[test]
fn eval_negative_coefficients_and_explain() {
    let mut args = vec!["eval", "--explain", "--json"];
    args.extend(["-5", "9", "-7", "-1", "-6", "6", "5", "6", "3", "-3", "-6", "6", "-9", "3", "4", "-9"]);
    let o = run(&args);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["value"], "229905160585318400000");
    assert_eq!(v["spectral"].as_array().unwrap().len(), 4);
}

#[test]
fn eval_usage_errors() {
    assert_eq!(run(&["eval", "1", "2", "3"]).status.code(), Some(2));
    let mut args = vec!["eval"];
    args.extend(["x"; 16]);
    assert_eq!(run(&args).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn classify_examples() {
    let o = run(&["classify", "17", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!((v["status"].as_str(), v["class"].as_str()), (Some("in_S"), Some("odd_16m_plus_1")));
    assert_eq!(v["params"]["m"], "1");

    let o = run(&["classify", "9", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["status"], "not_in_S");

    let o = run(&["classify", "-375", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["class"], "set_A");
    for key in ["j", "k", "p1", "p2", "p3"] {
        assert!(v["params"][key].is_string(), "{key}");
    }
}

#[test]
fn classify_errors() {
    assert_eq!(run(&["classify", "1000000000001"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "seventeen"]).status.code(), Some(2));
}

#[test]
fn witness_examples() {
    let o = run(&["witness", "17", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["verified"], true);
    assert_eq!(v["witness"].as_array().unwrap().len(), 16);

    let o = run(&["witness", "0", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let w: Vec<String> = json(&o)["witness"].as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect();
    let mut args = vec!["eval"];
    args.extend(w.iter().map(String::as_str));
    assert_eq!(stdout(&run(&args)).trim(), "0");

    let o = run(&["witness", "7", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["status"], "not_in_S");

    let o = run(&["witness", "-163840", "--json", "--no-verify"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["verified"], false);
}

#[test]
fn scan_examples() {
    let o = run(&["scan", "--support", "0", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!((v["tuples_checked"].as_str(), v["distinct_values"].as_str()), (Some("1"), Some("1")));

    let o = run(&["scan", "--support", "-1,0,1", "--limit", "5000", "--jobs", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["violations"], "0");

    let o = run(&["scan", "--random", "500", "--bound", "9", "--seed", "42", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1);

    assert_eq!(run(&["scan"]).status.code(), Some(2));
    assert_eq!(run(&["scan", "--random", "5", "--bound", "1000"]).status.code(), Some(2));
}

#[test]
fn selfcheck_passes_and_catches_faults() {
    let o = run(&["selfcheck", "--samples", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["selfcheck", "--samples", "200", "--seed", "1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["passed"], true);
    for fault in ["det4_sign", "det4_shift", "norms_swap_sign", "norms_drop_term"] {
        let o = run(&["selfcheck", "--samples", "200", "--inject-fault", fault, "--json"]);
        assert_eq!(o.status.code(), Some(1), "{fault}");
        let out = stdout(&o);
        assert!(out.lines().count() > 1, "{fault} printed no failure lines");
    }
}

#[test]
fn json_lines_are_deterministic() {
    let a = stdout(&run(&["scan", "--random", "300", "--seed", "5", "--jobs", "1", "--json"]));
    let b = stdout(&run(&["scan", "--random", "300", "--seed", "5", "--jobs", "3", "--json"]));
    assert_eq!(a, b);
}
