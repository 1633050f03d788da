use std::collections::BTreeSet;
use std::process::{Command, Output};

use serde_json::Value;
use sudiag::ainf::{Element, ElementTerm};
use sudiag::oracle::{naive_delta_p, naive_tonks};
use sudiag::trees::PlanarTree;
use sudiag::SparseIntMatrix;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sudiag")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = run(&all);
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn delta_k_small_arities() {
    let o = run(&["delta-k", "--arity", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("(1 2) ⊗ (1 2)\n1 terms"));
    let three = stdout(&run(&["delta-k", "--arity", "3"]));
    assert_eq!(three.lines().filter(|l| l.contains('⊗')).count(), 2);
}

#[test]
fn delta_k_arity_four_matches_the_oracle() {
    let naive: BTreeSet<(PlanarTree, PlanarTree)> = naive_delta_p(3)
        .unwrap()
        .iter()
        .filter_map(|t| Some((naive_tonks(&t.left)?, naive_tonks(&t.right)?)))
        .collect();
    let v = json(&["delta-k", "--arity", "4"]);
    assert_eq!(v["count"].as_u64().unwrap() as usize, naive.len());
}

#[test]
fn tensor_op_examples() {
    let op = |arity: &str, args: &str| stdout(&run(&["tensor-op", "--n", "4", "--m", "4", "--arity", arity, "--args", args]));
    assert_eq!(op("4", "x1,x1,x1,x1"), "y1\n");
    assert_eq!(op("6", "x2,x2,x1*x2,x1*x2,x1,x1"), "y1*y2\n");
    assert_eq!(op("3", "x1,x1*x2,x2"), "0\n");
    assert_eq!(op("3", "z,x,w"), "0\n");
}

#[test]
fn usage_errors_exit_two() {
    let bad = run(&["tensor-op", "--n", "4", "--m", "4", "--arity", "2", "--args", "x1,q7"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("q7"));
    let short = run(&["tensor-op", "--n", "4", "--m", "4", "--arity", "3", "--args", "x1,x1"]);
    assert_eq!(short.status.code(), Some(2));
    assert_eq!(run(&["delta-k", "--arity", "12"]).status.code(), Some(2));
    assert_eq!(run(&["delta-k", "--arity", "5", "--max-arity-cap", "4"]).status.code(), Some(2));
    assert_eq!(run(&["snake", "--n", "3", "--m", "3", "--k", "1"]).status.code(), Some(2));
    assert_eq!(run(&["stasheff", "--n", "4", "--m", "4", "--max", "3", "--format", "dot"]).status.code(), Some(2));
}

#[test]
fn arity_support_on_c4_c4() {
    let o = run(&["arity-support", "--n", "4", "--m", "4", "--max", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("support: 2, 4, 6\n"));
}

#[test]
fn snake_witness_is_nonzero() {
    let o = run(&["snake", "--n", "4", "--m", "4", "--k", "2", "--variant", "full", "--mode", "snake-only"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("value: y1^2*y2^2"));
}

#[test]
fn stasheff_reports_no_violations() {
    let o = run(&["stasheff", "--n", "4", "--m", "4", "--max", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("no violations\n"));
}

#[test]
fn hidden_oracle_diff() {
    let o = run(&["oracle-diff", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let help = stdout(&run(&["--help"]));
    assert!(!help.contains("oracle-diff"));
}

#[test]
fn json_round_trips() {
    let v = json(&["delta-k", "--arity", "4"]);
    assert_eq!(v["schema"], "sudiag/1");
    for t in v["terms"].as_array().unwrap() {
        for side in ["left", "right"] {
            let s = t[side].as_str().unwrap();
            let tree: PlanarTree = s.parse().unwrap();
            assert_eq!(tree.to_string(), s);
        }
    }
    let s = json(&["snake", "--n", "5", "--m", "4", "--k", "1"]);
    let m: SparseIntMatrix = serde_json::from_value(s["matrix"].clone()).unwrap();
    assert_eq!(serde_json::to_value(&m).unwrap(), s["matrix"]);
    let terms: Vec<ElementTerm> = serde_json::from_value(s["value"].clone()).unwrap();
    let e = Element::from_terms(2, 2, &terms).unwrap();
    assert_eq!(e.to_string(), s["value_text"].as_str().unwrap());
}

#[test]
fn output_does_not_depend_on_threads() {
    let args = ["arity-support", "--n", "5", "--m", "4", "--max", "6", "--format", "json"];
    let one = run(&[&["--threads", "1"][..], &args].concat());
    let many = run(&[&["--threads", "4"][..], &args].concat());
    assert_eq!(one.stdout, many.stdout);
    assert_eq!(run(&args).stdout, one.stdout);
}
