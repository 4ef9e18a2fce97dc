use std::path::PathBuf;
use std::process::{Command, Output};

use star_eigen::io::{value_table_to_json, ValueTable};
use star_eigen::rational::int;
use star_eigen::reconstruction::{restrict, F2Combination};
use star_eigen::{Permutation, StarKind};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_star-eigen"))
        .args(args)
        .env_remove("STAR_EIGEN_CEILING")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn det_prints_both_values() {
    let o = run(&["det", "--n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches("135").count(), 2);
    let o = run(&["det", "--n", "6", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["det"], "-2816");
    assert_eq!(v["match"], true);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["det", "--n", "five"]).status.code(), Some(2));
    assert_eq!(run(&["decompose", "--tableau", "1,2/2,3"]).status.code(), Some(2));
    assert_eq!(run(&["verify-pi", "--spec", "{\"n\":4}"]).status.code(), Some(2));
    assert_eq!(run(&["spectrum", "--n", "4", "--format", "csv"]).status.code(), Some(2));
    let o = run(&["spectrum", "--n", "7"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("ceiling"));
}

#[test]
fn verify_pi_reports_witnesses() {
    let spec = r#"{"n":4,"variant":"StarS","I":[3],"P":[[4,2]]}"#;
    assert_eq!(run(&["verify-pi", "--spec", spec]).status.code(), Some(0));
    let o = run(&["verify-pi", "--spec", spec, "--theta", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["holds"], false);
    assert!(!v[0]["witnesses"].as_array().unwrap().is_empty());
}

#[test]
fn spectrum_json() {
    let o = run(&["spectrum", "--n", "4", "--format", "json", "--variant", "jm"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["multiplicities"]["2"], 6);
    assert_eq!(v["variant"], "StarJM");
}

#[test]
fn tableau_commands() {
    let o = run(&["decompose", "--tableau", "1,2,5/3,4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["specs"].as_array().unwrap().len(), 2);
    assert_eq!(v["verification"]["holds"], true);

    let o = run(&["decompose", "--tableau", "1,3,6,7/2,5/4", "--y-assignment", "desc"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    for cmd in ["jm-check", "support-check", "polytabloid"] {
        let o = run(&[cmd, "--tableau", "1,2,4,6/3,5"]);
        assert_eq!(o.status.code(), Some(0), "{cmd}: {}", stdout(&o));
    }
    // n must sit in the upper right cell
    assert_eq!(run(&["jm-check", "--tableau", "1,2,3/4,5"]).status.code(), Some(2));
}

#[test]
fn matrix_csv_to_file() {
    let path = tmp("m5.csv");
    let o = run(&["matrix", "--n", "5", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let csv = std::fs::read_to_string(&path).unwrap();
    let m = star_eigen::io::matrix_from_csv(&csv).unwrap();
    assert_eq!(m, star_eigen::reconstruction::build_mn(5).unwrap());
}

#[test]
fn reconstruct_round_trip() {
    let base: Permutation = "[3,1,4,2,5]".parse().unwrap();
    let coefficients = (0..12).map(|i| int(i % 5 - 2)).collect();
    let mut f = F2Combination::new(5, coefficients).unwrap();
    f.base = base.clone();
    let table = ValueTable {
        n: 5,
        variant: StarKind::StarS,
        entries: restrict(&f, &base).unwrap(),
    };
    let boundary = tmp("boundary5.json");
    std::fs::write(&boundary, value_table_to_json(&table).unwrap()).unwrap();
    let out = tmp("recon5.json");
    let o = run(&[
        "reconstruct",
        "--n",
        "5",
        "--boundary",
        boundary.to_str().unwrap(),
        "--base-vertex",
        "[3,1,4,2,5]",
        "--format",
        "json",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let got = star_eigen::io::sparse_from_json(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(got, f.to_sparse(7).unwrap());

    // wrong base: keys are not N_2 of the identity
    let o = run(&["reconstruct", "--n", "5", "--boundary", boundary.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("boundary"));
}

#[test]
fn reproduce_is_deterministic_and_reports_criterion_2() {
    let args = ["reproduce-paper", "--max-n", "4", "--seed", "7", "--format", "json"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let failing: Vec<u64> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .map(|c| c["id"].as_u64().unwrap())
        .collect();
    assert_eq!(failing, vec![2]);
    assert!(v["checks"][0].get("seconds").is_none());
}
