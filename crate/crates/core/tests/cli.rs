use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn realism(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_realism")).args(args).env_remove("REALISM_REPORT_DIR").output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = realism(&full);
    let v = serde_json::from_slice(&out.stdout).expect("valid JSON on stdout");
    (out.status.code().expect("exit code"), v)
}

#[test]
fn verify_code_for_every_code() {
    for (code, order) in [("five", 32), ("mermin", 8), ("steane", 128)] {
        let (status, v) = json(&["verify-code", "--code", code]);
        assert_eq!(status, 0, "{code}");
        assert_eq!(v["verdict"], "pass");
        assert_eq!(v["command"], "verify-code");
        assert_eq!(v["code"], code);
        assert_eq!(v["details"]["group_order"], order);
    }
}

#[test]
fn unknown_code_is_a_usage_error() {
    assert_eq!(realism(&["verify-code", "--code", "shor"]).status.code(), Some(2));
    assert_eq!(realism(&["reality", "--code", "five", "--site", "6", "--letter", "x"]).status.code(), Some(2));
    assert_eq!(realism(&["reality", "--code", "five", "--site", "1", "--letter", "w"]).status.code(), Some(2));
}

#[test]
fn reality_counts() {
    let (status, v) = json(&["reality", "--code", "five", "--site", "1", "--letter", "x"]);
    assert_eq!(status, 0);
    assert_eq!(v["details"]["determinations"].as_array().unwrap().len(), 8);
    assert_eq!(v["details"]["compatible_pairs"].as_array().unwrap().len(), 5);

    let (_, v) = json(&["reality", "--code", "five", "--site", "3", "--letter", "y"]);
    assert_eq!(v["details"]["determinations"].as_array().unwrap().len(), 8);

    let (_, v) = json(&["reality", "--code", "mermin", "--site", "1", "--letter", "z"]);
    let witnesses: Vec<&str> =
        v["details"]["determinations"].as_array().unwrap().iter().map(|d| d["witness_label"].as_str().unwrap()).collect();
    assert!(witnesses.contains(&"σ2z"));
}

#[test]
fn paradox_commands_confirm() {
    for cmd in ["pentagon", "array", "ks"] {
        let (status, v) = json(&[cmd]);
        assert_eq!(status, 0, "{cmd}");
        assert_eq!(v["verdict"], "contradiction-confirmed", "{cmd}");
    }
    let (_, v) = json(&["ks"]);
    assert_eq!(v["details"]["vertices"], 104);
    assert_eq!(v["details"]["ratio"], 3.25);
    assert_eq!(v["details"]["edges"], 3084);
    assert_eq!(v["details"]["contexts"], 39);
    assert_eq!(v["details"]["verdict"]["verdict"], "unsat");
}

#[test]
fn steane_search_finds_size_ten() {
    let (status, v) = json(&["steane-search", "--max", "10"]);
    assert_eq!(status, 0);
    assert_eq!(v["details"]["largest_size_found"], 10);
    assert_eq!(v["details"]["outcome"]["min_size"], 4);
}

#[test]
fn budget_exhaustion_exits_three() {
    let out = realism(&["ks", "--budget", "10"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn json_is_byte_stable_across_runs_and_modes() {
    for args in [vec!["ks", "--export"], vec!["steane-search", "--max", "8", "--per-size", "3"], vec!["pentagon"]] {
        let mut a = vec!["--format", "json"];
        a.extend(&args);
        let first = realism(&a).stdout;
        let second = realism(&a).stdout;
        let mut s = vec!["--sequential"];
        s.extend(&a);
        let sequential = realism(&s).stdout;
        assert_eq!(first, second, "{args:?}");
        assert_eq!(first, sequential, "{args:?}");
    }
}

#[test]
fn selftest_passes() {
    let (status, v) = json(&["selftest", "--seed", "3", "--pairs", "200", "--triples", "40"]);
    assert_eq!(status, 0);
    assert_eq!(v["details"]["multiplication_mismatches"], 0);
}

#[test]
fn reports_written_to_directory() {
    let dir: PathBuf = std::env::temp_dir().join(format!("realism-reports-{}", std::process::id()));
    let out = Command::new(env!("CARGO_BIN_EXE_realism"))
        .args(["array"])
        .env("REALISM_REPORT_DIR", &dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let written = std::fs::read_to_string(dir.join("array-five.json")).unwrap();
    let v: Value = serde_json::from_str(&written).unwrap();
    assert_eq!(v["details"]["check"]["impossible"], true);
    std::fs::remove_dir_all(&dir).unwrap();
}
