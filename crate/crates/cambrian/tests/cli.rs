use std::process::{Command, Output};

use cambrian::io::{self, FanFile};
use cambrian_core::fan::{self, DEFAULT_LOOKAHEAD};
use cambrian_core::{ExchangeMatrix, RootSpace, Q, DEFAULT_NODE_CAP};
use proptest::prelude::*;

const G2T: &str = r#"{"n":3,"B":[[0,1,1],[-3,0,0],[-1,0,0]]}"#;
const A1T: &str = r#"{"n":2,"B":[[0,2],[-2,0]]}"#;
const A2: &str = r#"{"n":2,"B":[[0,1],[-1,0]]}"#;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cambrian")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn fan_json_round_trips() {
    let rs = RootSpace::build(&ExchangeMatrix::validate(vec![vec![0, 1, 1], vec![-3, 0, 0], vec![-1, 0, 0]]).unwrap()).unwrap();
    let fg = fan::doubled_graph(&rs, 4, DEFAULT_LOOKAHEAD, DEFAULT_NODE_CAP).unwrap();
    let cones = fg.cones(&rs.sys).unwrap();
    let file = FanFile::from_cones(&cones);
    let back = FanFile::from_json(&file.to_json()).unwrap().to_cones();
    assert_eq!(back, cones);
    assert_eq!(fan::fan_check(&rs.sys, &back).violations.len(), 0);
}

#[test]
fn classify_reports_affine_data() {
    let o = run(&["classify", "--inline", G2T, "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["classification"], "Affine");
    assert_eq!(v["delta"], serde_json::json!([2, 3, 1]));
    assert_eq!(v["xc"], serde_json::json!([-4, 6]));
    assert_eq!(v["sAff"], 3);
}

#[test]
fn matrix_file_and_inline_agree() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b.json");
    std::fs::write(&path, A1T).unwrap();
    let a = run(&["sortables", "--matrix", path.to_str().unwrap(), "--maxLen", "4"]);
    let b = run(&["sortables", "--inline", A1T, "--maxLen", "4"]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).contains("c-sortable elements of length <= 4"));
}

#[test]
fn bad_input_fails_with_position() {
    let o = run(&["classify", "--inline", r#"{"n":2,"B":[[0,1]"#]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1 column"));
    let o = run(&["classify", "--inline", r#"{"n":2,"B":[[0,1],[1,0]]}"#]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["classify"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn dcamb_writes_all_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out");
    let o = run(&["dcamb", "--inline", A2, "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let dot = std::fs::read_to_string(out.join("dcamb.dot")).unwrap();
    assert!(dot.starts_with("graph") || dot.starts_with("digraph"));
    let fan = FanFile::from_json(&std::fs::read_to_string(out.join("fan.json")).unwrap()).unwrap();
    assert_eq!(fan.cones.len(), 5);
    let man: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(out.join("manifest.json")).unwrap()).unwrap();
    assert_eq!(man["core"], 5);
}

#[test]
fn verify_passes_on_affine_and_fails_when_corrupted() {
    let o = run(&["verify", "--inline", A1T, "--format", "json"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "PASS");
    assert_eq!(v["boundary"]["status"], "PASS");
    let o = run(&["verify", "--inline", A1T, "--corrupt", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "FAIL");
    assert_eq!(v["axioms"]["replayable"], true);
}

#[test]
fn node_cap_is_read_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_cambrian"))
        .args(["exchange-graph", "--inline", G2T, "--depth", "7"])
        .env("CAMBRIAN_NODE_CAP", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_cambrian"))
        .args(["classify", "--inline", G2T])
        .env("CAMBRIAN_NODE_CAP", "lots")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        vec!["exchange-graph", "--inline", A1T, "--depth", "5"],
        vec!["dcamb", "--inline", G2T, "--maxLen", "4"],
        vec!["project", "--inline", G2T, "--maxLen", "3"],
        vec!["green", "--inline", G2T, "--format", "json"],
    ] {
        assert_eq!(stdout(&run(&args)), stdout(&run(&args)), "{args:?}");
    }
}

#[test]
fn exchange_graph_json_has_five_a2_seeds() {
    let o = run(&["exchange-graph", "--inline", A2]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["classes"], 5);
    assert_eq!(v["nodes"][0]["gVectors"], serde_json::json!([[1, 0], [0, 1]]));
}

#[test]
fn project_charts() {
    let o = run(&["project", "--inline", G2T, "--maxLen", "3", "--chart", "v0"]);
    let csv = stdout(&o);
    assert!(csv.starts_with("chart,cone,provenance,kind,x0,x1\n"));
    assert!(csv.lines().any(|l| l.starts_with("v0,complement,")));
    let o = run(&["project", "--inline", A1T, "--maxLen", "2"]);
    assert!(stdout(&o).lines().skip(1).all(|l| l.starts_with("angle,")));
    let o = run(&["project", "--inline", A1T, "--chart", "sphere"]);
    assert_eq!(o.status.code(), Some(2));
}

proptest! {
    #[test]
    fn rationals_round_trip(p in -10_000i64..10_000, q in 1i64..10_000) {
        let x = Q::new(p as i128, q as i128);
        let s = io::rational(&x);
        prop_assert!(s.contains('/'));
        prop_assert_eq!(io::parse_rational(&s).unwrap(), x);
    }
}
