use std::process::{Command, Output};

use octacat::category::Morphism;
use octacat::poly::PolyQ;

fn octacat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_octacat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compose_cap_after_cup() {
    let o = octacat(&["compose", "--cat", "even", "2>0: {1,2}", "0>2: {1',2'}"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "t * (0>0:)\n");
}

#[test]
fn compose_specialized_and_json() {
    let o = octacat(&[
        "compose",
        "--cat",
        "even",
        "--t",
        "5/2",
        "--format",
        "json",
        "2>0: {1,2}",
        "0>2: {1',2'}",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let m = Morphism::from_json(stdout(&o).trim()).unwrap();
    assert_eq!(m.source(), 0);
    assert_eq!(m.terms().values().next().unwrap().to_string(), "5/2");
}

#[test]
fn words_and_trace() {
    let o = octacat(&[
        "trace",
        "--cat",
        "colored",
        "--weight2t",
        "(scale 1/2 (sum id (scale -1 (token -1))))",
    ]);
    assert_eq!(stdout(&o), "t\n");
    let o = octacat(&["trace", "--cat", "colored", "--weight2t", "1>1: {1,1'}"]);
    assert_eq!(
        stdout(&o).trim().parse::<PolyQ>().unwrap(),
        PolyQ::t().scale(&octacat::poly::qi(2))
    );
}

#[test]
fn tensor_and_dual() {
    let o = octacat(&["tensor", "2>0: {1,2}", "2>0: {1,2}"]);
    assert_eq!(stdout(&o), "(4>0: {1,2},{3,4})\n");
    let o = octacat(&["dual", "2>0: {1,2}"]);
    assert_eq!(stdout(&o), "(0>2: {1',2'})\n");
}

#[test]
fn suites_exit_zero() {
    for args in [
        &["verify", "--suite", "relations-parz2"][..],
        &["verify", "--suite", "relations-part"],
        &["verify", "--suite", "square", "--n", "2", "--kmax", "2"],
        &["verify", "--suite", "datum-hpp", "--n", "2"],
        &["verify", "--suite", "datum-gpp"],
    ] {
        let o = octacat(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert!(stdout(&o).lines().all(|l| l.starts_with("PASS ")));
    }
}

#[test]
fn reports_are_deterministic_json() {
    let a = octacat(&["verify", "--suite", "counting", "--format", "json"]);
    let b = octacat(&["verify", "--suite", "counting", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert!(v.as_array().unwrap().iter().all(|r| r["pass"] == true));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(octacat(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(octacat(&["compose", "2>0: {1,2"]).status.code(), Some(2));
    let o = octacat(&["compose", "--cat", "even", "2>0: {1,2}", "0>3: {1',2',3'}"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("0>3"));
    assert_eq!(
        octacat(&["compose", "--t", "x", "2>0: {1,2}", "0>2: {1',2'}"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        octacat(&["verify", "--suite", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(
        octacat(&["homdim", "1", "1", "--n", "5"]).status.code(),
        Some(2)
    );
}

#[test]
fn matrices_and_homdim() {
    let o = octacat(&[
        "matrix",
        "--cat",
        "colored",
        "--n",
        "1",
        "--format",
        "json",
        "1>1: {1,1':-1}",
    ]);
    assert_eq!(
        stdout(&o),
        "{\"rows\":2,\"cols\":2,\"triplets\":[[0,1,\"1\"],[1,0,\"1\"]]}\n"
    );
    let o = octacat(&["homdim", "1", "1", "--rep", "permutation", "--n", "3"]);
    assert_eq!(stdout(&o), "3\n");
}

#[test]
fn omega_of_identity() {
    let o = octacat(&["omega", "1>1: {1,1'}"]);
    assert_eq!(
        stdout(&o),
        "1/2 * (1>1: {1,1'}) + -1/2 * (1>1: {1,1':-1})\n"
    );
}
