//! End-to-end runs of the `symmetria` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_symmetria"))
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("symmetria-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = run(&all);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn keys(v: &Value) -> Vec<&str> {
    v.as_object().unwrap().keys().map(String::as_str).collect()
}

fn write(name: &str, text: &str) -> PathBuf {
    let p = tmp(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn envelope_schema_and_square_axiality() {
    let sq = write("square.json", r#"{"vertices": [[0,0],[1,0],[1,1],[0,1]]}"#);
    let v = json(&["measure", "axiality", "--polygon", sq.to_str().unwrap()]);
    assert_eq!(
        keys(&v),
        ["command", "inputs", "result", "version", "wall_time"]
    );
    assert_eq!(v["command"], "measure");
    let report = &v["result"]["report"];
    assert_eq!(report["measure"], "axiality");
    assert!((report["value"].as_f64().unwrap() - 1.0).abs() < 1e-9);
    for k in [
        "line",
        "overlap_area",
        "body_area",
        "evaluations",
        "achieved_tolerance",
    ] {
        assert!(report.get(k).is_some(), "missing {k}");
    }
}

#[test]
fn keys_are_sorted_and_floats_rounded() {
    let v = json(&["certify", "theorem-1-1"]);
    let text = serde_json::to_string(&v).unwrap();
    let r = &v["result"];
    let mut sorted = keys(r);
    sorted.sort_unstable();
    assert_eq!(keys(r), sorted);
    assert_eq!(r["status"], "exact");
    assert_eq!(r["value_decimal"].as_f64().unwrap(), 0.694_762_960_347);
    assert!(r["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["holds"] == true));
    assert!(!text.contains("0.6947629603472"), "{text}");
}

#[test]
fn certificate_transcript_shows_exact_value() {
    let out = run(&["certify", "theorem-1-1"]);
    assert!(out.status.success());
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.contains("20/41 + 6/41√2"), "{s}");
    assert!(s.contains("[exact]"));
}

#[test]
fn bounds_table_row_eleven() {
    let v = json(&["bounds", "table", "--n-max", "12"]);
    let rows = v["result"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 11);
    let r11 = rows.iter().find(|r| r["n"] == 11).unwrap();
    assert_eq!(r11["separation"], true);
    assert_eq!(r11["axlb"]["fraction"], "1/22");
    let r2 = rows.iter().find(|r| r["n"] == 2).unwrap();
    assert_eq!(r2["separation"], false);
}

#[test]
fn family_round_trips_into_measure() {
    let q = tmp("quad.json");
    let out = run(&[
        "family",
        "quad",
        "--epsilon",
        "0.1",
        "--out",
        q.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v = json(&["measure", "axiality", "--polygon", q.to_str().unwrap()]);
    let value = v["result"]["report"]["value"].as_f64().unwrap();
    // Q(0.1) sits just above its limit (1+√2)/3.
    assert!(
        value > (1.0 + 2f64.sqrt()) / 3.0 - 1e-9 && value < 0.82,
        "{value}"
    );
    assert_eq!(v["result"]["normalization"]["output_vertices"], 4);
}

#[test]
fn svg_has_fixed_ids() {
    let p = tmp("tri.json");
    std::fs::write(&p, r#"{"vertices": [[0,0],[3,0],[1,2]]}"#).unwrap();
    for (measure, marker) in [
        ("axiality", "mirror-line"),
        ("central", "center"),
        ("folding", "mirror-line"),
    ] {
        let svg = tmp(&format!("tri-{measure}.svg"));
        let out = run(&[
            "render",
            "--polygon",
            p.to_str().unwrap(),
            "--measure",
            measure,
            "--out",
            svg.to_str().unwrap(),
        ]);
        assert!(out.status.success());
        let text = std::fs::read_to_string(&svg).unwrap();
        let doc = roxmltree::Document::parse(&text).unwrap();
        let ids: Vec<&str> = doc
            .descendants()
            .filter_map(|n| n.attribute("id"))
            .collect();
        assert_eq!(ids, ["body", "overlap", marker], "{measure}");
    }
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["measure", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["bounds"]).status.code(), Some(2));
    assert_eq!(run(&["family", "quad"]).status.code(), Some(2));
}

#[test]
fn computation_errors_exit_3() {
    let out = run(&["--json", "family", "quad", "--epsilon", "0.9"]);
    assert_eq!(out.status.code(), Some(3));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"]["name"], "BadParam");

    let missing = tmp("does-not-exist.json");
    assert_eq!(
        run(&[
            "measure",
            "axiality",
            "--polygon",
            missing.to_str().unwrap()
        ])
        .status
        .code(),
        Some(3)
    );

    let line = write("segment.json", r#"{"vertices": [[0,0],[1,0],[2,0]]}"#);
    assert_eq!(
        run(&["measure", "folding", "--polygon", line.to_str().unwrap()])
            .status
            .code(),
        Some(3)
    );

    assert_eq!(run(&["search", "--seeds", "5..1"]).status.code(), Some(3));
}

#[test]
fn small_search_is_reproducible() {
    let args = ["search", "--iters", "200", "--seeds", "1,2"];
    let a = json(&args);
    let b = json(&args);
    assert_eq!(a["result"], b["result"]);
    let best = a["result"]["best"]["best_value"].as_f64().unwrap();
    assert!(best <= 1.0 && best > 0.69);
    assert_eq!(a["result"]["runs"].as_array().unwrap().len(), 2);
}

#[test]
fn program_point_from_file() {
    let p = write(
        "point.json",
        r#"{"lambda": 0.5, "alpha": 1.0, "beta": -1.0}"#,
    );
    let v = json(&[
        "verify",
        "program-constraints",
        "--point",
        p.to_str().unwrap(),
        "--complete",
    ]);
    let pt = &v["result"]["points"][0];
    assert_eq!(pt["feasible"], true);
    assert_eq!(pt["max_residual"].as_f64().unwrap(), 0.0);
}
