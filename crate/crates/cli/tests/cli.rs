use std::collections::BTreeSet;
use std::path::Path;

use morse_index::decomposition::{build_annuli, d_sequence, g_sequence, SchemeOptions};
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_morse-index"))
}

fn write(dir: &Path, name: &str, text: &str) {
    std::fs::write(dir.join(name), text).unwrap();
}

const CIRCLE: &str = r#"{ "generator": { "kind": "circle", "radius": 1.0, "n": 64 }, "alpha": 1.0 }"#;

#[test]
fn missing_alpha_exits_2_and_names_field() {
    let dir = tempfile::tempdir().unwrap();
    write(
        dir.path(),
        "bad.json",
        r#"{
  "name": "bad",
  "measure": { "generator": { "kind": "circle", "radius": 1.0, "n": 10 } },
  "potential": { "kind": "constant", "value": 1.0 }
}"#,
    );
    let out =
        bin().arg("run").arg(dir.path().join("bad.json")).arg("--out").arg(dir.path().join("o")).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("alpha") && err.contains("line"), "{err}");
}

#[test]
fn empty_dir_passes_with_empty_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = tempfile::tempdir().unwrap();
    let st = bin().arg("suite").arg(dir.path()).arg("--out").arg(out.path()).status().unwrap();
    assert_eq!(st.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_slice(&std::fs::read(out.path().join("acceptance.json")).unwrap()).unwrap();
    assert_eq!(report["scenarios"].as_array().unwrap().len(), 0);
    assert!(report["criteria"].as_array().unwrap().iter().all(|c| c["status"] == "not-run"));
}

#[test]
fn one_failing_scenario_exits_1_and_is_listed() {
    let dir = tempfile::tempdir().unwrap();
    let out = tempfile::tempdir().unwrap();
    // zero potential has no bound state, so the one-bound-state check fails
    write(
        dir.path(),
        "fails.json",
        &format!(
            r#"{{
  "name": "fails", "measure": {CIRCLE}, "potential": {{ "kind": "constant", "value": 0.0 }},
  "gammas": [1.0], "mesh": {{ "radius": 20.0, "h": 0.5 }}, "checks": ["AC7"]
}}"#
        ),
    );
    write(dir.path(), "passes.json", r#"{ "name": "passes", "checks": ["AC6"] }"#);
    let o = bin().arg("suite").arg(dir.path()).arg("--out").arg(out.path()).output().unwrap();
    assert_eq!(o.status.code(), Some(1));
    let stdout = String::from_utf8_lossy(&o.stdout);
    let failed: Vec<&str> = stdout.lines().filter(|l| l.starts_with("FAILED")).collect();
    assert_eq!(failed.len(), 1, "{stdout}");
    assert!(failed[0].contains("fails.json") && failed[0].contains("AC7"));
}

#[test]
fn zero_potential_has_unit_bound_and_no_eigenvalues() {
    let dir = tempfile::tempdir().unwrap();
    let scenario = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../scenarios/zero-potential.json");
    let st = bin().arg("run").arg(&scenario).arg("--out").arg(dir.path()).status().unwrap();
    assert_eq!(st.code(), Some(0));
    let oracle = std::fs::read_to_string(dir.path().join("zero-potential/oracle.csv")).unwrap();
    let row: Vec<&str> = oracle.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(row[4], "0");
    let bounds: serde_json::Value =
        serde_json::from_slice(&std::fs::read(dir.path().join("zero-potential/bounds.json")).unwrap()).unwrap();
    assert_eq!(bounds["rows"][0]["theorem"]["total"], 1.0);
}

#[test]
fn reruns_are_byte_identical_and_rows_match_grids() {
    let dir = tempfile::tempdir().unwrap();
    write(
        dir.path(),
        "s.json",
        &format!(
            r#"{{
  "name": "s", "seed": 5, "measure": {CIRCLE}, "potential": {{ "kind": "constant", "value": 2.0 }},
  "gammas": [0.5, 1.0, 4.0], "mesh": {{ "radius": 30.0, "h": 0.5 }},
  "radial": {{ "window": [-10.0, 10.0], "h": 0.1 }}, "checks": ["AC4", "AC5", "AC7"]
}}"#
        ),
    );
    let run = |out: &Path| {
        let st = bin().arg("run").arg(dir.path().join("s.json")).arg("--out").arg(out).status().unwrap();
        assert_eq!(st.code(), Some(0));
    };
    let (a, b) = (dir.path().join("a"), dir.path().join("b"));
    run(&a);
    run(&b);
    for f in ["sequences.csv", "bounds.json", "oracle.csv", "radial.csv", "summary.json"] {
        assert_eq!(std::fs::read(a.join("s").join(f)).unwrap(), std::fs::read(b.join("s").join(f)).unwrap(), "{f}");
    }
    let lines = |f: &str| std::fs::read_to_string(a.join("s").join(f)).unwrap().lines().count() - 1;
    assert_eq!(lines("oracle.csv"), 3);
    assert_eq!(lines("radial.csv"), 3);
    let sc = morse_index_cli::Scenario::load(&dir.path().join("s.json")).unwrap();
    let m = sc.measure.unwrap().build(dir.path()).unwrap();
    let v = sc.potential.unwrap().build(&m).unwrap();
    let scheme = build_annuli(&m, &SchemeOptions::default()).unwrap();
    let mut ns: BTreeSet<i64> = scheme.n_range().iter().copied().collect();
    ns.extend(g_sequence(&v, &m).keys());
    ns.extend(d_sequence(&v, &m, &scheme).unwrap().keys());
    assert_eq!(lines("sequences.csv"), ns.len());
}

#[test]
fn seed_override_changes_randomized_suites_only_through_seed() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "n.json", r#"{ "name": "n", "seed": 1, "checks": ["AC1"] }"#);
    let summary = |seed: &str, out: &str| {
        let o = dir.path().join(out);
        bin().arg("run").arg(dir.path().join("n.json")).args(["--seed", seed, "--out"]).arg(&o).status().unwrap();
        let v: serde_json::Value = serde_json::from_slice(&std::fs::read(o.join("n/summary.json")).unwrap()).unwrap();
        v
    };
    let (x, y) = (summary("1", "x"), summary("2", "y"));
    assert_eq!(x["seed"], 1);
    assert_eq!(y["seed"], 2);
    assert_eq!(x["passed"], true);
    assert_eq!(y["passed"], true);
}

#[test]
fn calibrate_writes_config() {
    let dir = tempfile::tempdir().unwrap();
    write(
        dir.path(),
        "c.json",
        &format!(
            r#"{{
  "name": "c", "measure": {CIRCLE}, "potential": {{ "kind": "constant", "value": 1.0 }},
  "gammas": [1.0, 10.0], "mesh": {{ "radius": 200.0, "h": 0.5 }}
}}"#
        ),
    );
    let out = dir.path().join("o");
    let st = bin().arg("calibrate").arg(dir.path()).arg("--out").arg(&out).status().unwrap();
    assert_eq!(st.code(), Some(0));
    let cal: serde_json::Value = serde_json::from_slice(&std::fs::read(out.join("calibration.json")).unwrap()).unwrap();
    assert_eq!(cal["config"]["provenance"], "calibrated");
    assert!(cal["config"]["B"].as_f64().unwrap() > 0.0);
}
