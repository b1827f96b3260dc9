use std::process::{Command, Output};

use proptest::prelude::*;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wildram")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let out = run(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout));
    });
    (v, out.status.code().unwrap())
}

#[test]
fn analyze_degree_15_example() {
    let (v, code) = json(&["--p", "5", "analyze", "--map", "(x^5*(x^10+x^7-2*x)+1)/(x^10+x^7-2*x)"]);
    assert_eq!(code, 0);
    let r = &v["result"];
    assert_eq!(r["degree"], 15);
    let pts = r["points"].as_array().unwrap();
    let inf = pts.iter().find(|p| p["point"] == "inf").unwrap();
    assert_eq!(inf["e"], 5);
    assert_eq!(inf["wild"], true);
    let simple: u64 = pts
        .iter()
        .filter(|p| p["point"] != "inf")
        .map(|p| {
            assert_eq!(p["e"], 2);
            p["degree"].as_u64().unwrap()
        })
        .sum();
    assert_eq!(simple, 6);
    assert_eq!(r["riemann_hurwitz_defect"], 0);
}

#[test]
fn deform_square_agrees() {
    let (v, code) = json(&["--p", "3", "deform", "--map", "x^2", "--cond", "0:2"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["agree"], true);
    assert_eq!(v["result"]["solver_dim"], v["result"]["formula_dim"]);
}

#[test]
fn verify_paper_passes() {
    let (v, code) = json(&["--p", "5", "verify-paper"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["all_passed"], true);
    assert_eq!(v["result"]["checks"].as_array().unwrap().len(), 5);
}

#[test]
fn parse_error_has_offset() {
    let (v, code) = json(&["--p", "5", "analyze", "--map", "x^^2"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["code"], "ParseError");
    assert_eq!(v["error"]["offset"], 1);
    assert!(v.get("result").is_none());
}

#[test]
fn constant_map_is_an_error() {
    let (v, code) = json(&["--p", "5", "analyze", "--map", "(x^2+1)/(x^2+1)"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["code"], "ConstantMap");
}

#[test]
fn usage_errors_exit_2() {
    let (v, code) = json(&["--p", "5", "analyze"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["code"], "UsageError");
    let out = run(&["analyze", "--map", "x"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--p"));
}

#[test]
fn json_is_byte_identical_across_runs() {
    let args = ["--format", "json", "--p", "5", "--seed", "7", "count", "--degree", "2", "--random", "2,2", "--tower", "2"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["config"]["seed"], 7);
}

#[test]
fn table_output_echoes_seed() {
    let out = run(&["--p", "5", "--seed", "11", "analyze", "--map", "x^2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("seed 11"));
}

#[test]
fn count_reports_tower_and_estimate() {
    let (v, code) = json(&["--p", "5", "count", "--degree", "2", "--cond", "inf:2", "--cond", "0:2", "--tower", "3"]);
    assert_eq!(code, 0);
    let r = &v["result"];
    let levels = r["levels"].as_array().unwrap();
    assert_eq!(levels.len(), 3);
    // x^2 up to PGL2 on both sides: exactly one class at every level.
    for l in levels {
        assert_eq!(l["mod_pgl2"], "1");
    }
    assert_eq!(r["estimate"]["value"], "0");
    assert_eq!(r["expected_dim"], 0);
    assert_eq!(v["warnings"].as_array().unwrap().len(), 0);
}

#[test]
fn fixed_branch_count() {
    let (v, code) = json(&["--p", "3", "count", "--degree", "2", "--branch", "0:2->0", "--branch", "inf:2->inf"]);
    assert_eq!(code, 0);
    // c*x^2 for the two nonzero c.
    assert_eq!(v["result"]["exact"], "2");
}

#[test]
fn reduce_lift_construct() {
    let (v, code) = json(&["--p", "5", "reduce", "--map", "x^5+x^2"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["result"], "x^2");
    assert_eq!(v["result"]["steps"][0]["op"], "subtract_inseparable");
    assert_eq!(v["result"]["replay_matches"], true);

    let (v, code) = json(&["--p", "5", "lift", "--map", "x^2", "--c", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["result"], "2*x^5+x^2");
    assert_eq!(v["result"]["e_infinity"], 5);

    let (v, code) = json(&["--p", "5", "construct", "--cond", "1:2"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["result"], "x^5-2*x^2-x");

    let (v, code) = json(&["--p", "5", "construct", "--cond", "1:3", "--cond", "2:3"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["code"], "TooMuchRamification");
}

#[test]
fn extension_field_modulus() {
    let (v, code) = json(&["--p", "3", "--k", "2", "--modulus", "x^2+1", "analyze", "--map", "x^2"]);
    assert_eq!(code, 0);
    assert_eq!(v["config"]["modulus"], "x^2+1");
    let (v, code) = json(&["--p", "3", "--k", "2", "--modulus", "x^2+2", "analyze", "--map", "x^2"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["code"], "NotIrreducible");
}

#[test]
fn expected_dim_needs_no_field() {
    let (v, code) = json(&["expected-dim", "--degree", "3", "--e", "2,2,2,2"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["expected_dim"], 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    // Garbage maps and conditions never crash: the exit code is 0 or 2 and
    // an error always comes with a code.
    #[test]
    fn malformed_inputs_exit_cleanly(map in "[x0-9^*+/() -]{0,12}", cond in "[a-z0-9:>-]{0,6}") {
        let (v, code) = json(&["--p", "5", "deform", "--map", &map, "--cond", &cond]);
        prop_assert!(code == 0 || code == 1 || code == 2, "exit {code}");
        if code == 2 {
            prop_assert!(v["error"]["code"].is_string());
        } else {
            prop_assert!(v["result"].is_object());
        }
    }
}
