use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_indexlab"))
        .args(args)
        .env_remove("INDEXLAB_CAP")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn invariants_json_for_the_classic_cubic() {
    let out = run(&["invariants", "x^3 - x^2 - 2*x - 8"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["field"]["disc"], "-503");
    assert_eq!(v["field"]["degree"], 3);
    assert_eq!(v["field"]["poly"], serde_json::json!(["-8", "-2", "-1", "1"]));
    assert_eq!(v["invariants"]["I_K"], "2");
    assert_eq!(v["invariants"]["i_K"], "2");
    assert_eq!(v["splitting"]["2"], serde_json::json!([[1, 1], [1, 1], [1, 1]]));
    assert_eq!(v["invariants"]["valuations"]["2"]["I"], 1);
    assert_eq!(out.stdout, run(&["invariants", "x^3 - x^2 - 2*x - 8"]).stdout);
}

#[test]
fn invariants_tsv_and_prime_selection() {
    let out = run(&["invariants", "x^2 - 17", "--format", "tsv", "--primes", "2,17"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("splitting\t2\t{(1,1),(1,1)}\n"));
    assert!(text.contains("splitting\t17\t{(2,1)}\n"));
    assert!(text.contains("i_K\t2\n"));
    assert!(text.contains("I_K\t1\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["invariants", "x^2 + x"]).status.code(), Some(3));
    assert_eq!(run(&["invariants", "2*x^2 + 1"]).status.code(), Some(3));
    assert_eq!(run(&["invariants", "x^8 + x + 1"]).status.code(), Some(3));
    assert_eq!(run(&["invariants", "x^^2"]).status.code(), Some(2));
    assert_eq!(run(&["invariants", "x^2 + 1", "--primes", "4"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "octic", "--range", "1..2"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "quadratic", "--range", "5..1"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["search-t1", "--degree", "3", "--prime", "2", "--budget", "0"]).status.code(), Some(4));
    assert_eq!(run(&["compare", "x^2 + 1", "x^3 + x + 1", "--prime", "2"]).status.code(), Some(2));
}

#[test]
fn verify_writes_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("quad.tsv");
    let out = run(&[
        "verify",
        "quadratic",
        "--range",
        "-10..10",
        "--format",
        "tsv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("family\tm\tapplicable\tI_pred\tI_exact\ti_pred_set\ti_exact\tpass"));
    assert!(text.contains("quadratic\t-7\ttrue\t1\t1\t{2}\t2\ttrue"));
    assert!(text.contains("quadratic\t4\tfalse\t"));
    assert_eq!(text.lines().count(), 22);
}

#[test]
fn verify_sextic_json_has_alpha_table() {
    let out = run(&["verify", "simplest-sextic", "--range", "4..5"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["family"], "simplest_sextic");
    assert_eq!(v["alpha_table"]["4"], 0);
    assert_eq!(v["discrepancies"], serde_json::json!([]));
}

#[test]
fn compare_fixtures() {
    let v = json(&run(&["compare", "x^2 - 17", "x^2 - 41", "--prime", "2"]));
    assert_eq!(v["same_splitting"], true);
    assert_eq!(v["first"]["splitting"], "{(1,1),(1,1)}");
    assert_eq!((v["first"]["v_p(I_K)"].clone(), v["first"]["v_p(i_K)"].clone()), (0.into(), 1.into()));
    assert_eq!(v["first"]["v_p(i_K)"], v["second"]["v_p(i_K)"]);
    assert_eq!(v["same_splitting_different_index"], false);

    let v = json(&run(&["compare", "x^2 - 2", "x^2 - 3", "--prime", "2"]));
    assert_eq!(v["same_splitting"], true);
    assert_eq!(v["first"]["splitting"], "{(2,1)}");

    let v = json(&run(&["compare", "x^3 - x + 3", "x^3 - x^2 - 2*x - 8", "--prime", "2"]));
    assert_eq!(v["same_splitting"], false);
}

#[test]
fn search_is_reproducible() {
    let a = run(&["search-t1", "--degree", "4", "--prime", "3", "--seed", "9"]);
    assert!(a.status.success());
    let v = json(&a);
    let i_k: u64 = v["report"]["invariants"]["i_K"].as_str().unwrap().parse().unwrap();
    assert_eq!(i_k % 3, 0);
    assert_eq!(a.stdout, run(&["search-t1", "--degree", "4", "--prime", "3", "--seed", "9"]).stdout);
}

#[test]
fn cap_override_surfaces_engine_error() {
    let out = run(&["--cap", "1", "invariants", "x^3 - x^2 - 2*x - 8"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeded cap"));
    let out = Command::new(env!("CARGO_BIN_EXE_indexlab"))
        .args(["invariants", "x^3 - x^2 - 2*x - 8"])
        .env("INDEXLAB_CAP", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}
