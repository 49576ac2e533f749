use std::fs;
use std::io::Write;
use std::process::{Command, Output, Stdio};

use mcg_cli::corpus::Corpus;
use mcg_core::families;
use mcg_core::io::{parse_edge_list, write_edge_list};
use serde_json::Value;

fn mcg(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_mcg"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.unwrap_or("").as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn analyze_c6bar_from_stdin() {
    let text = write_edge_list(&families::c6bar());
    let v = json(&mcg(&["analyze", "-", "--json"], Some(&text)));
    assert_eq!(v["classification"], "brick");
    assert_eq!(v["solid"], false);
    assert_eq!(v["b"], 1);
    let classes = v["removable_classes"].as_array().unwrap();
    assert_eq!(classes.len(), 3);
    assert!(classes.iter().all(|c| c["kind"] == "doubleton"));
}

#[test]
fn graph6_input() {
    let v = json(&mcg(
        &["--format", "graph6", "solid", "-", "--json"],
        Some("IheA@GUAo\n"),
    ));
    assert_eq!(v["solid"], false);
    assert_eq!(v["brick"], true);
    assert!(v["certificate"].is_object());
}

#[test]
fn text_output_is_derived_from_json() {
    let text = write_edge_list(&families::k4());
    let out = mcg(&["decompose", "-"], Some(&text));
    assert!(out.status.success());
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.lines().any(|l| l == "b: 1"), "{s}");
}

#[test]
fn conformal_and_reduce_reports() {
    let p = write_edge_list(&families::petersen());
    let v = json(&mcg(
        &["conformal", "-", "--pattern", "k4", "--json"],
        Some(&p),
    ));
    assert_eq!(v["based"], true);
    let v = json(&mcg(
        &["conformal", "-", "--pattern", "c6bar", "--json"],
        Some(&p),
    ));
    assert_eq!(v["based"], false);
    let t = write_edge_list(&families::tricorn());
    let v = json(&mcg(&["reduce", "-", "--strict", "--json"], Some(&t)));
    assert_eq!(v["strict"], true);
    assert!(v["steps"].as_array().unwrap().len() >= 2);
}

#[test]
fn ears_and_classes() {
    let b = write_edge_list(&families::bicorn());
    let v = json(&mcg(&["ears", "-", "--json"], Some(&b)));
    assert!(v["ears"].as_array().unwrap().len() >= 2);
    let v = json(&mcg(&["classes", "-", "--json"], Some(&b)));
    assert_eq!(v["removable_classes"].as_array().unwrap().len(), 3);
}

#[test]
fn family_generate_writes_edge_lists() {
    let out = mcg(&["family", "generate", "prism", "10"], None);
    assert!(out.status.success());
    let g = parse_edge_list(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(g, families::prism(10).unwrap());
    let out = mcg(
        &["family", "generate", "k4", "4", "--format", "graph6"],
        None,
    );
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "C~\n");
}

#[test]
fn usage_and_parse_errors_exit_with_two() {
    assert_eq!(
        mcg(&["analyze", "-"], Some("3 1\n0 7\n")).status.code(),
        Some(2)
    );
    assert_eq!(
        mcg(&["verify", "no-such-theorem"], None).status.code(),
        Some(2)
    );
    assert_eq!(mcg(&["frobnicate"], None).status.code(), Some(2));
    assert_eq!(
        mcg(&["family", "generate", "prism", "7"], None)
            .status
            .code(),
        Some(2)
    );
    let big = write_edge_list(&families::cycle(20).unwrap());
    assert_eq!(
        mcg(&["solid", "-", "--cap", "12"], Some(&big))
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn corpus_round_trips_and_is_deterministic() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let args = |d: &std::path::Path| {
        vec![
            "corpus".to_string(),
            "--out".into(),
            d.display().to_string(),
            "--max-order".into(),
            "8".into(),
            "--random-cubic".into(),
            "20".into(),
        ]
    };
    for d in [a.path(), b.path()] {
        let argv = args(d);
        let out = mcg(&argv.iter().map(String::as_str).collect::<Vec<_>>(), None);
        assert!(out.status.success());
    }
    let ma = fs::read_to_string(a.path().join("manifest.json")).unwrap();
    assert_eq!(
        ma,
        fs::read_to_string(b.path().join("manifest.json")).unwrap()
    );
    let c = Corpus::read(a.path()).unwrap();
    assert!(!c.entries.is_empty());
    for e in &c.entries {
        let text = fs::read_to_string(a.path().join(format!("{}.txt", e.id))).unwrap();
        assert_eq!(write_edge_list(&e.graph), text);
    }
}

#[test]
fn verify_reports_are_stable_apart_from_timing() {
    let run = || {
        let out = mcg(
            &[
                "verify",
                "rw-equivalence",
                "--max-order",
                "8",
                "--seed",
                "3",
                "--json",
            ],
            None,
        );
        let mut v = json(&out);
        let o = v.as_object_mut().unwrap();
        assert!(o.remove("runtime_ms").is_some());
        assert!(o.remove("timestamp").is_some());
        serde_json::to_string(&v).unwrap()
    };
    let first = run();
    assert_eq!(first, run());
    let v: Value = serde_json::from_str(&first).unwrap();
    assert_eq!(v["theorem"], "rw-equivalence");
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_all_exits_zero_on_small_corpus() {
    let out = mcg(&["verify", "all", "--max-order", "8"], None);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    let s = String::from_utf8(out.stdout).unwrap();
    assert_eq!(s.lines().count(), mcg_cli::verify::Theorem::ALL.len());
}
