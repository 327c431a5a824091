use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use specht_core::report::FrameRecord;

fn specht(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_specht"))
        .args(args)
        .env_remove("SPECHT_CAP")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let out = specht(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("specht-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn roots_listing() {
    assert_eq!(json(&["roots", "--type", "G2"])["num_roots"], 12);
    assert_eq!(json(&["roots", "--type", "A", "--rank", "1"])["num_roots"], 2);
    let d4 = json(&["roots", "--type", "D4"]);
    let positive: Vec<&str> = d4["roots"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["positive"] == true)
        .map(|r| r["notation"].as_str().unwrap())
        .collect();
    assert!(positive.contains(&"1101") && positive.contains(&"0111"));
    let text = String::from_utf8(specht(&["roots", "--type", "G2"]).stdout).unwrap();
    assert!(text.starts_with("G2: 12 roots, 6 positive"));
}

#[test]
fn subsystem_counts() {
    let g2 = json(&["subsystems", "--type", "G2"]);
    let labels: Vec<&str> = g2["classes"].as_array().unwrap().iter().map(|c| c["type"].as_str().unwrap()).collect();
    assert_eq!(labels, ["G2", "A2", "A1+Ã1", "A1", "Ã1", "∅"]);
    assert_eq!(json(&["subsystems", "--type", "A2"])["classes"].as_array().unwrap().len(), 3);
    assert_eq!(json(&["subsystems", "--type", "A1"])["classes"].as_array().unwrap().len(), 2);
}

#[test]
fn g2_classes() {
    let c = json(&["classes", "--type", "G2"]);
    let reps: Vec<&str> = c["classes"].as_array().unwrap().iter().map(|c| c["representative"].as_str().unwrap()).collect();
    assert_eq!(reps, ["e", "t2", "t1 t2", "t1 t2 t1 t2", "t2 t1 t2 t1 t2 t1", "t1"]);
}

#[test]
fn g2_specht_record() {
    let r = json(&["specht", "--type", "G2", "--rows", "01", "--cols", "11,31"]);
    assert_eq!(r["character"], serde_json::json!([2, 0, -1, -1, 2, 0]));
    assert_eq!(r["useful"], true);
    assert_eq!(r["good"], true);
    assert_eq!(r["field"], "q");
    let keys: Vec<&String> = r.as_object().unwrap().keys().collect();
    assert_eq!(keys[..10], ["type", "rows", "columns", "useful", "good", "dim_M", "dim_S", "dim_D", "character", "field"]);
}

#[test]
fn specht_json_round_trips() {
    for args in [
        ["specht", "--type", "G2", "--rows", "01", "--cols", "11,31", "--list-tabloids", "--list-polytabloid"].as_slice(),
        ["specht", "--type", "B3", "--rows", "100,122,001", "--cols", "010,111,012"].as_slice(),
        ["specht", "--type", "G2", "--rows", "01", "--cols", "11,31", "--field", "p3"].as_slice(),
    ] {
        let mut all = vec!["--format", "json"];
        all.extend_from_slice(args);
        let out = specht(&all);
        assert!(out.status.success());
        let text = String::from_utf8(out.stdout).unwrap();
        let record: FrameRecord = serde_json::from_str(&text).unwrap();
        assert_eq!(format!("{}\n", serde_json::to_string_pretty(&record).unwrap()), text);
    }
}

#[test]
fn b3_reports_vanishing() {
    let r = json(&["specht", "--type", "B3", "--rows", "100,122,001", "--cols", "010,111,012"]);
    assert_eq!(r["useful"], false);
    assert_eq!(r["polytabloid_zero"], true);
    assert_eq!(r["witness"], "t3 t2 t3 t1 t2 t3 t1 t2 t1");
}

#[test]
fn d4_tabloid_listing() {
    let out = specht(&["specht", "--type", "D4", "--rows", "1000,0100,0010", "--cols", "1101,0111", "--list-tabloids"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let expected = "  {1000,0100,0010;1101,0111}\n  {1000,0101,0010;1100,0110}\n  {1100,0001,0110;1000,0010}\n  {0100,0001,1110;-1000,0010}\n  {1110,0001,0100;1000,-0010}\n  {0110,0001,1100;-1000,-0010}\n  {0010,0101,1000;-1100,-0110}\n  {0010,0100,1000;-1101,-0111}\n";
    assert!(text.contains(expected), "{text}");
}

#[test]
fn bad_input_exits_2() {
    let cases: [&[&str]; 6] = [
        &["roots", "--type", "H3"],
        &["specht", "--type", "G2", "--rows", "0x", "--cols", ""],
        &["specht", "--type", "G2", "--rows", "01", "--cols", "01"],
        &["specht", "--type", "G2", "--rows", "10,11", "--cols", ""],
        &["specht", "--type", "G2", "--rows", "01", "--cols", "", "--field", "p4"],
        &["classes", "--type", "D4", "--cap", "100"],
    ];
    for args in cases {
        let out = specht(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    }
}

#[test]
fn cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_specht"))
        .args(["classes", "--type", "D4"])
        .env("SPECHT_CAP", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_specht"))
        .args(["classes", "--type", "D4", "--cap", "200"])
        .env("SPECHT_CAP", "100")
        .output()
        .unwrap();
    assert!(out.status.success());
}

#[test]
fn reference_checks_fresh_and_filtered() {
    let out = specht(&["verify-paper"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let rows = json(&["verify-paper", "--only", "g2"]);
    let rows = rows.as_array().unwrap();
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|r| r["tag"] == "g2"));
    assert_eq!(specht(&["verify-paper", "--only", "nope"]).status.code(), Some(2));
}

#[test]
fn tampered_fixture_exits_nonzero() {
    let builtin = include_str!("../fixtures/reference.json");
    let tampered = builtin.replacen("[2, 0, -1, -1, 2, 0]", "[2, 0, 1, -1, 2, 0]", 1);
    assert_ne!(tampered, builtin);
    let path = temp_file("tampered.json", &tampered);
    let out = specht(&["verify-paper", "--fixture", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL"));
    let broken = temp_file("broken.json", "{");
    assert_eq!(specht(&["verify-paper", "--fixture", broken.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn batch_runs_every_entry() {
    let path = temp_file(
        "batch.json",
        r#"[
            {"command": "specht", "type": "G2", "rows": "01", "cols": "11,31"},
            {"command": "specht", "type": "G2", "rows": "", "cols": "10,01"},
            {"command": "roots", "type": "A2"},
            {"command": "classes", "type": "B3"}
        ]"#,
    );
    let v = json(&["batch", path.to_str().unwrap()]);
    let entries = v.as_array().unwrap();
    assert_eq!(entries.len(), 4);
    assert_eq!(entries[1]["character"], serde_json::json!([1, -1, 1, 1, 1, -1]));
    assert_eq!(entries[2]["num_roots"], 6);
    assert_eq!(entries[3]["order"], 48);

    let bad = temp_file("bad-batch.json", r#"[{"command": "specht", "type": "G2"}]"#);
    assert_eq!(specht(&["batch", bad.to_str().unwrap()]).status.code(), Some(2));
}
