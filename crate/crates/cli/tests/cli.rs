//! End-to-end runs of the `klr` binary: exit codes, report shapes and the module cache.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn klr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_klr"))
        .args(args)
        .env_remove("KLR_CACHE_DIR")
        .output()
        .expect("run klr")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("klr-cli-test-{}-{name}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn endo_reports_switch_decomposition() {
    let out = klr(&["endo", "--lambda", "3|3", "--e", "3", "--char", "0"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["config"]["lambda"], "3|3");
    assert_eq!(v["verdict"]["verdict"], "Decomposable");
    let out = klr(&["endo", "--lambda", "3|3", "--e", "3", "--char", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["verdict"]["verdict"], "Indecomposable");
}

#[test]
fn classify_writes_csv_and_json() {
    let dir = scratch("classify");
    let csv = dir.join("small.csv");
    let out = klr(&[
        "classify",
        "--max-n",
        "4",
        "--e",
        "2",
        "--char",
        "0",
        "--out",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("lambda,dim,dim_end,verdict,certificate,millis"));
    let decomposable: Vec<&str> = lines
        .filter(|l| l.contains(",Decomposable,"))
        .map(|l| l.split('"').nth(1).unwrap())
        .collect();
    assert_eq!(decomposable.len(), 4, "{decomposable:?}");
    for s in ["2|2", "2|1^2", "1^2|2", "1^2|1^2"] {
        assert!(decomposable.contains(&s), "{s} missing from {decomposable:?}");
    }
    let report: Value = serde_json::from_str(&fs::read_to_string(dir.join("small.json")).unwrap()).unwrap();
    assert_eq!(report["config"]["max_n"], 4);
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn verify_exit_codes() {
    let out = klr(&["verify", "--suite", "smallphivt"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["suite"], "smallphivt");
    assert_eq!(v["summary"]["passed"], true);
    assert_eq!(v["config"]["suite"], "smallphivt");

    let out = klr(&["verify", "--suite", "e2-pin"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn invalid_input_is_a_usage_error() {
    let out = klr(&["endo", "--lambda", "2,x|3", "--e", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains('3'));
    for args in [
        vec!["endo", "--lambda", "3|3", "--e", "3", "--char", "4"],
        vec!["endo", "--lambda", "3|3", "--e", "1"],
        vec!["endo", "--lambda", "3|3", "--e", "3", "--kappa", "0"],
        vec!["verify", "--suite", "no-such-suite"],
        vec!["verify"],
        vec!["endo", "--e", "3"],
    ] {
        let out = klr(&args);
        assert_eq!(
            out.status.code(),
            Some(2),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

#[test]
fn cached_and_cold_runs_agree() {
    let dir = scratch("cache");
    let cache = dir.join("cache");
    let args = [
        "endo",
        "--lambda",
        "6|3",
        "--e",
        "3",
        "--char",
        "0",
        "--cache-dir",
        cache.to_str().unwrap(),
    ];
    let cold = klr(&args);
    assert_eq!(cold.status.code(), Some(0), "{}", String::from_utf8_lossy(&cold.stderr));
    assert!(fs::read_dir(&cache).unwrap().count() > 0, "cache was not written");
    let warm = klr(&args);
    assert_eq!(warm.status.code(), Some(0));
    assert_eq!(cold.stdout, warm.stdout);
    let uncached = klr(&["endo", "--lambda", "6|3", "--e", "3", "--char", "0"]);
    let (a, b) = (json(&cold), json(&uncached));
    assert_eq!(a["endomorphisms"], b["endomorphisms"]);
    assert_eq!(a["verdict"], b["verdict"]);
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn suites_are_listed() {
    let out = klr(&["suites"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    for name in [
        "relations",
        "oracle",
        "e2-pin",
        "conjecture-scan",
        "appendix-identities",
    ] {
        assert!(text.contains(name));
    }
}
