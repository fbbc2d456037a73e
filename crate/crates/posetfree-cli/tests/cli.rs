//! End-to-end runs of the `posetfree` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_posetfree"));
    c.env_remove("POSETFREE_JOBS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn ok_json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn la_sperner_value() {
    let v = ok_json(&["la", "--n", "4", "--pattern", "chain:2"]);
    assert_eq!(v["value"], 6);
    assert_eq!(v["witness"].as_array().unwrap().len(), 6);
    assert!(v["runtime"].is_null());
    assert!(v["method"].is_string());
}

#[test]
fn exit_statuses() {
    assert_eq!(run(&["embed", "--pattern", "wedge", "--family", "missing.txt"]).status.code(), Some(3));
    let cap = run(&["count", "--n", "9", "--pattern", "chain:2"]);
    assert_eq!(cap.status.code(), Some(2));
    assert!(cap.stdout.is_empty());
    assert!(!cap.stderr.is_empty());
    assert_eq!(run(&["la", "--n", "4", "--pattern", "chain:2", "--bogus"]).status.code(), Some(1));
    assert_eq!(run(&["la", "--n", "4", "--pattern", "hexagon"]).status.code(), Some(1));
    assert_eq!(run(&["count", "--n", "6", "--pattern", "chain:2", "--max-n", "6"]).status.code(), Some(1));
}

#[test]
fn capacity_override_with_acknowledgement() {
    let v = ok_json(&["count", "--n", "5", "--pattern", "wedge", "--max-n", "5", "--i-know"]);
    assert!(v["value"].as_u64().unwrap() > 0);
    let dedekind = ok_json(&["count", "--n", "4", "--pattern", "antichain"]);
    assert_eq!(dedekind["value"], 168);
}

#[test]
fn help_names_the_algorithm() {
    let cases: &[(&[&str], &str)] = &[
        (&["la"], "Lubell"),
        (&["count"], "Dedekind"),
        (&["maxfree"], "Dilworth"),
        (&["embed"], "bipartite matching"),
        (&["blowup"], "d-blow-up"),
        (&["super", "find"], "middle band"),
        (&["super", "dense"], "Dense case"),
        (&["super", "classify"], "Type 1"),
        (&["super", "check-fork"], "(1+15eps)m"),
        (&["super", "check-fork-plus"], "(4+400eps)m"),
        (&["containers", "run"], "Graph-container"),
        (&["containers", "replay"], "oracle"),
        (&["containers", "census"], "fingerprint"),
        (&["random", "experiment"], "SplitMix64"),
        (&["random", "diamond"], "diamond"),
        (&["random", "pi"], "union bound"),
    ];
    for (cmd, needle) in cases {
        let mut args = cmd.to_vec();
        args.push("--help");
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "{cmd:?}");
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(text.contains(needle), "{cmd:?} help lacks {needle:?}");
    }
}

#[test]
fn embed_and_blowup_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let blown = run(&["blowup", "--poset", "wedge", "--d", "2", "--emit", "poset"]);
    assert_eq!(blown.status.code(), Some(0));
    let poset = write(dir.path(), "w2.json", std::str::from_utf8(&blown.stdout).unwrap());
    let size = ok_json(&["blowup", "--poset", "wedge", "--d", "2"]);
    assert_eq!(size["size"], 7);

    let mut text = String::from("n=4\n");
    for s in 0u32..16 {
        let e: Vec<String> = (0..4).filter(|i| s >> i & 1 == 1).map(|i| (i + 1).to_string()).collect();
        text.push_str(if e.is_empty() { "{}" } else { "" });
        text.push_str(&e.join(","));
        text.push('\n');
    }
    let full = write(dir.path(), "full4.txt", &text);
    let direct = ok_json(&["embed", "--pattern", s(&poset), "--family", s(&full)]);
    assert_eq!(direct["assignment"].as_array().unwrap().len(), 7);
    let by_blowup = ok_json(&["embed", "--pattern", "wedge", "--family", s(&full), "--blowup", "2"]);
    assert_eq!(by_blowup["t"], 2);
    let widest = ok_json(&["embed", "--pattern", "wedge", "--family", s(&full), "--blowup", "max"]);
    assert!(widest["t"].as_u64().unwrap() >= 2);

    let layer = write(dir.path(), "layer.txt", "n=4\n1,2\n3,4\n1,3\n");
    let none = run(&["embed", "--pattern", "wedge", "--family", s(&layer)]);
    assert_eq!(none.status.code(), Some(0));
    assert_eq!(none.stdout, b"NONE\n");
}

#[test]
fn maxfree_routes() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "f.txt", "n=3\n{}\n1\n2\n1,2\n1,2,3\n");
    assert_eq!(ok_json(&["maxfree", "--family", s(&f), "--pattern", "antichain"])["value"], 2);
    assert_eq!(ok_json(&["maxfree", "--family", s(&f), "--pattern", "chain:3"])["value"], 3);
    assert_eq!(ok_json(&["maxfree", "--family", s(&f), "--pattern", "wedge"])["value"], 3);
}

#[test]
fn container_trace_replays() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "f.txt", "n=4\n1,2\n1,3\n3,4\n2\n");
    let out = run(&["containers", "run", "--pattern", "wedge", "--t-star", "2", "--family", s(&f)]);
    assert_eq!(out.status.code(), Some(0));
    let trace = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<Value> = trace.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let summary = lines.last().unwrap();
    assert_eq!(summary["summary"], true);
    assert_eq!(summary["steps"].as_u64().unwrap() as usize, lines.len() - 1);
    let trace_path = write(dir.path(), "trace.jsonl", &trace);
    let mut h = String::from("n=4\n");
    for set in summary["fingerprints"][0].as_array().unwrap() {
        h.push_str(set.as_str().unwrap());
        h.push('\n');
    }
    let h_path = write(dir.path(), "h.txt", &h);
    let replay = ok_json(&[
        "containers", "replay", "--pattern", "wedge", "--t-star", "2", "--fingerprint", s(&h_path), "--check", s(&trace_path),
    ]);
    assert_eq!(replay["matches_trace"], true);
    assert_eq!(replay["container"], summary["container"]);

    // A fingerprint the run never selected is inconsistent.
    let foreign = write(dir.path(), "bad.txt", "n=4\n1,2,3,4\n");
    let bad = run(&["containers", "replay", "--pattern", "wedge", "--t-star", "2", "--fingerprint", s(&foreign)]);
    assert_eq!(bad.status.code(), Some(1));

    let wedge = write(dir.path(), "wedge.txt", "n=3\n1\n2\n1,2\n");
    let refused = run(&["containers", "run", "--pattern", "wedge", "--t-star", "2", "--family", s(&wedge)]);
    assert_eq!(refused.status.code(), Some(1));
}

#[test]
fn census_on_all_free_families() {
    let v = ok_json(&["containers", "census", "--pattern", "wedge", "--t-star", "2", "--all-pfree", "--n", "3"]);
    assert_eq!(v["covers_all"], true);
    assert_eq!(v["within_bound"], true);
    assert_eq!(v["la"], 4);
    assert!(v["slack"].as_i64().unwrap() >= 0);
}

#[test]
fn supersaturation_commands() {
    let dir = tempfile::tempdir().unwrap();
    let mut text = String::from("n=8\n");
    for s in 0u32..256 {
        if matches!(s.count_ones(), 3 | 4) {
            let e: Vec<String> = (0..8).filter(|i| s >> i & 1 == 1).map(|i| (i + 1).to_string()).collect();
            text.push_str(&e.join(","));
            text.push('\n');
        }
    }
    let f = write(dir.path(), "l34.txt", &text);
    let w = ok_json(&["super", "find", "--pattern", "wedge", "--family", s(&f), "--epsilon", "0.5", "--target-t", "2"]);
    assert_eq!(w["t"], 2);
    assert_eq!(w["verified"], true);
    assert_eq!(w["embedding"].as_array().unwrap().len(), 7);
    let text_out = run(&["super", "find", "--pattern", "wedge", "--family", s(&f), "--epsilon", "0.5", "--format", "text"]);
    assert!(String::from_utf8(text_out.stdout).unwrap().contains("wedge: width"));
    let c = ok_json(&["super", "classify", "--family", s(&f), "--epsilon", "0.5"]);
    assert_eq!(c["type1"], 70);
    let fork = ok_json(&["super", "check-fork", "--family", s(&f), "--epsilon", "0.5"]);
    assert_eq!(fork["violation"], false);
    let too_small = run(&["super", "find", "--pattern", "yd", "--family", s(&f), "--epsilon", "0.5"]);
    assert_eq!(too_small.status.code(), Some(1));
}

#[test]
fn random_outputs_are_reproducible_and_job_independent() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "cfg.json",
        r#"{"pattern": "chain:2", "n": [6, 8], "p": [0.5], "trials": 6, "seed": 11, "mode": "dilworth"}"#,
    );
    let one = run(&["random", "experiment", "--config", s(&cfg), "--jobs", "1"]);
    let four = run(&["random", "experiment", "--config", s(&cfg), "--jobs", "4"]);
    let env = bin().args(["random", "experiment", "--config", s(&cfg)]).env("POSETFREE_JOBS", "3").output().unwrap();
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(one.stdout, env.stdout);
    let csv = String::from_utf8(one.stdout).unwrap();
    assert!(csv.starts_with("pattern,mode,n,p,trials,mean"));
    assert_eq!(csv.lines().count(), 3);

    let d1 = run(&["random", "diamond", "--n", "10", "--p", "0.3", "--seed", "7", "--trials", "2"]);
    let d2 = run(&["random", "diamond", "--n", "10", "--p", "0.3", "--seed", "7", "--trials", "2", "--jobs", "1"]);
    assert_eq!(d1.stdout, d2.stdout);
    assert!(String::from_utf8(d1.stdout).unwrap().lines().skip(1).all(|l| l.ends_with(",true")));

    let bad = write(dir.path(), "bad.json", r#"{"pattern": "chain:2", "n": [6], "p": [0.5], "trials": 1, "colour": 1}"#);
    assert_eq!(run(&["random", "experiment", "--config", s(&bad)]).status.code(), Some(1));

    // Small n: the fingerprint terms grow with p faster than the Chernoff term shrinks.
    let small = ok_json(&["random", "pi", "--n", "50", "--h", "2", "--p", "0.1", "--p", "0.5", "--p", "1"]);
    assert_eq!(small["strictly_decreasing"], false);
    let large = ["random", "pi", "--n", "1e12", "--h", "2", "--delta", "1.98e-5", "--p", "0.05", "--p", "0.5", "--p", "1"];
    assert_eq!(ok_json(&large)["strictly_decreasing"], true);
    assert_eq!(ok_json(&[&large[..], &["--p", "0.7"]].concat())["strictly_decreasing"], Value::Null);
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("out.txt");
    let out = run(&["random", "sample", "--n", "4", "--p", "1", "--output", s(&target)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&target).unwrap();
    assert_eq!(text.lines().count(), 17);
    let unwritable = run(&["random", "sample", "--n", "4", "--p", "1", "--output", "/nonexistent/dir/x"]);
    assert_eq!(unwritable.status.code(), Some(3));
}
