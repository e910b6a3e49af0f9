use std::process::{Command, Output};

use mincode::analysis::{AnalysisReport, SCHEMA};
use mincode::formats::{read_defining_set, DefiningSetFile};
use mincode::parallel::Threads;
use mincode::reproduce::{examples, reproduce, reproduce_options};
use mincode_core::code::WeightDistribution;
use mincode_core::constructions::{predicted_weight_distribution, PredictedFamily};

fn mincode(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mincode"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const MONOMIAL: &str = r#"{"family":"monomial","q":3,"k":4,"h":3}"#;

#[test]
fn construct_writes_canonical_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.json");
    let o = mincode(&[
        "construct",
        "--spec",
        MONOMIAL,
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("56 vectors"));
    let d = read_defining_set(&path).unwrap();
    assert_eq!(d.len(), 56);
    let file: DefiningSetFile =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let mut sorted = file.vectors.clone();
    sorted.sort();
    assert_eq!(file.vectors, sorted);

    let lift = r#"{"family":"lift","inner":[{"family":"weight_le","q":3,"k":6,"h":2},{"family":"weight_le","q":3,"k":6,"h":2}]}"#;
    let o = mincode(&["construct", "--spec", lift]);
    assert!(o.status.success());
    let file: DefiningSetFile = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(file.vectors.len(), 144);
    assert_eq!(file.k, 7);
}

#[test]
fn bad_inputs_exit_one() {
    let o = mincode(&[
        "construct",
        "--spec",
        r#"{"family":"monomial","q":3,"k":4,"h":2}"#,
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("parameter out of range"));
    assert_eq!(mincode(&["analyze", "--frobnicate"]).status.code(), Some(1));
    assert_eq!(mincode(&["analyze"]).status.code(), Some(1));
    assert_eq!(
        mincode(&["analyze", "--in", "/nonexistent/file.json"])
            .status
            .code(),
        Some(1)
    );
    let o = mincode(&["analyze", "--spec", MONOMIAL, "--max-space", "80"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("81"));
    assert_eq!(mincode(&["--help"]).status.code(), Some(0));
}

#[test]
fn analysis_report_contents_and_roundtrip() {
    let o = mincode(&["analyze", "--spec", MONOMIAL, "--json"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let r: AnalysisReport = serde_json::from_str(&text).unwrap();
    assert_eq!(r.schema, SCHEMA);
    assert_eq!((r.n, r.dim, r.w_min, r.w_max), (56, 4, Some(30), Some(42)));
    assert_eq!(r.minimal, Some(true));
    assert!(r.minimality.as_ref().unwrap().agree);
    assert_eq!(r.to_json(), text);

    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    for key in [
        "field",
        "k",
        "n",
        "dim",
        "projective",
        "weight_distribution",
        "w_min",
        "w_max",
        "minimal",
        "method",
        "ab_condition",
        "blocking",
        "cutting",
        "bounds",
    ] {
        assert!(value.get(key).is_some(), "{key}");
    }
    assert_eq!(value["weight_distribution"]["38"], 54);
}

#[test]
fn reports_are_byte_identical_across_runs_and_threads() {
    let spec = r#"{"family":"monomial_plus_sum","q":4,"k":4,"h":3}"#;
    let first = stdout(&mincode(&["analyze", "--spec", spec, "--threads", "1"]));
    for t in ["1", "2", "7"] {
        assert_eq!(
            stdout(&mincode(&["analyze", "--spec", spec, "--threads", t])),
            first
        );
    }
    let r: AnalysisReport = serde_json::from_str(&first).unwrap();
    assert_eq!(r.params(), "[171,4,108]");
}

#[test]
fn two_dimensional_union_is_not_minimal() {
    let spec = r#"{"family":"hyperplane_union","q":3,"k":4,"S":[[1,0,0,0],[0,1,0,0],[1,1,0,0]]}"#;
    let o = mincode(&["analyze", "--spec", spec]);
    assert!(o.status.success());
    let r: AnalysisReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.minimal, Some(false));
    let m = r.minimality.unwrap();
    assert!(m.agree);
    assert_eq!(m.exhaustive.witness_verified, Some(true));
    assert_eq!(m.cutting.witness_verified, Some(true));
}

#[test]
fn defining_set_file_input_matches_spec_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.json");
    mincode(&[
        "construct",
        "--spec",
        MONOMIAL,
        "--out",
        path.to_str().unwrap(),
    ]);
    let from_file: AnalysisReport = serde_json::from_str(&stdout(&mincode(&[
        "analyze",
        "--in",
        path.to_str().unwrap(),
        "--checks",
        "weights,minimality",
    ])))
    .unwrap();
    assert_eq!(
        from_file.enumerator.as_deref(),
        Some("1+6z^30+8z^36+54z^38+12z^42")
    );
    assert!(from_file.blocking.is_none() && from_file.bounds.is_none());
}

#[test]
fn verify_audit_and_reproduce_commands() {
    let o = mincode(&["verify", "--spec", MONOMIAL]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("all checks consistent"));
    let o = mincode(&["audit", "--spec", MONOMIAL, "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["distance_lb"]["bound"], 7);
    assert_eq!(v["ab_ratio"]["num"], 5);
    let o = mincode(&["reproduce"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("6/6 examples reproduced"));
}

fn monomial_off_by_one(
    f: PredictedFamily,
    q: u64,
    k: usize,
    h: usize,
) -> mincode_core::Result<WeightDistribution> {
    let wd = predicted_weight_distribution(f, q, k, h)?;
    Ok(if f == PredictedFamily::Monomial {
        wd.counts().iter().map(|(&w, &c)| (w + 1, c)).collect()
    } else {
        wd
    })
}

#[test]
fn mutated_monomial_closed_form_fails_exactly_its_rows() {
    let opts = reproduce_options(Threads(2));
    let rows = reproduce(&opts, monomial_off_by_one).unwrap();
    let failed: Vec<&str> = rows
        .iter()
        .filter(|r| !r.pass)
        .map(|r| r.name.as_str())
        .collect();
    let monomial_rows: Vec<&str> = examples()
        .iter()
        .filter(|e| {
            e.spec
                .predicted_family()
                .is_some_and(|p| p.0 == PredictedFamily::Monomial)
        })
        .map(|e| e.name)
        .collect();
    assert_eq!(failed, monomial_rows);
    assert_eq!(failed.len(), 2);
    assert!(reproduce(&opts, predicted_weight_distribution)
        .unwrap()
        .iter()
        .all(|r| r.pass));
}
