use std::path::PathBuf;
use std::process::{Command, Output};

use chebflag_cli::error::exit;
use chebflag_cli::render::{ExpandReport, Table, VerifyReport};

fn chebflag(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chebflag"))
        .args(args)
        .env_remove("CHEBFLAG_CEILING")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

#[test]
fn expand_geometric_series() {
    let o = chebflag(&["expand", "--xi", "1", "--m", "2", "--mu", "1", "--order", "4"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("coefficients: 1,1,1,1,1\n"));
}

#[test]
fn expand_polynomial_case_as_json() {
    let o = chebflag(&["expand", "--xi", "2,2", "--m", "2", "--mu", "0", "--order", "3", "--format", "json"]);
    assert!(o.status.success());
    let json = stdout(&o);
    let report: ExpandReport = serde_json::from_str(&json).unwrap();
    assert_eq!(report.coefficients, ["1", "-1", "0", "0"]);
    assert_eq!(report.routes, ["division", "polynomial"]);
    assert_eq!((report.mu1, report.mu0, report.t, report.k), (0, 0, 2, -1));
    assert_eq!(serde_json::to_string_pretty(&report).unwrap() + "\n", json);
}

#[test]
fn expand_cross_validation_records_routes() {
    let o = chebflag(&[
        "expand", "--xi", "2,1", "--m", "3", "--mu", "3", "--order", "10", "--cross-validate", "--format", "json",
    ]);
    assert!(o.status.success());
    let report: ExpandReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(report.routes.contains(&"signed".to_string()));
}

#[test]
fn exit_statuses_are_distinct() {
    let hypothesis = chebflag(&["expand", "--xi", "3", "--m", "2", "--mu", "0"]);
    assert_eq!(hypothesis.status.code(), Some(exit::HYPOTHESIS));

    let parse = chebflag(&["expand", "--xi", "3,x", "--m", "3", "--mu", "0"]);
    assert_eq!(parse.status.code(), Some(exit::USAGE));
    let missing = chebflag(&["expand", "--xi", "3"]);
    assert_eq!(missing.status.code(), Some(exit::USAGE));

    let ceiling = Command::new(env!("CARGO_BIN_EXE_chebflag"))
        .args(["expand", "--xi", "1", "--m", "2", "--mu", "1", "--order", "50"])
        .env("CHEBFLAG_CEILING", "20")
        .output()
        .unwrap();
    assert_eq!(ceiling.status.code(), Some(exit::CEILING));
    let over_default = chebflag(&["classify", "--xi", "1", "--m", "2", "--mu", "0", "--horizon", "10001"]);
    assert_eq!(over_default.status.code(), Some(exit::CEILING));

    let bad_env = Command::new(env!("CARGO_BIN_EXE_chebflag"))
        .args(["expand", "--xi", "1", "--m", "2", "--mu", "1"])
        .env("CHEBFLAG_CEILING", "0")
        .output()
        .unwrap();
    assert_eq!(bad_env.status.code(), Some(exit::USAGE));
}

#[test]
fn unsorted_partition_is_normalized_with_warning() {
    let o = chebflag(&["mult", "--xi", "1,2", "--m", "2", "--n", "3"]);
    assert!(o.status.success());
    let err = String::from_utf8(o.stderr.clone()).unwrap();
    assert!(err.contains("warning"), "{err}");
    assert!(stdout(&o).contains("xi: (2,1)\n"));
}

#[test]
fn table_values_and_parity_zeros() {
    let o = chebflag(&["table", "--xi", "1,1", "--m", "2", "--n", "0,2", "--format", "csv"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "xi,m,n,value,class,family\n\"1,1\",2,0,1,eventually-positive,a\n\"1,1\",2,2,1,eventually-positive,a\n"
    );
    let odd = chebflag(&["table", "--xi", "1,1", "--xi", "3,2", "--m", "3", "--n", "1,3", "--format", "csv"]);
    let text = stdout(&odd);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().filter(|r| r.starts_with("\"1,1\"")).all(|r| r.split(',').nth(4) == Some("0")));
}

#[test]
fn empty_grid_is_header_only() {
    let o = chebflag(&["table", "--m", "2", "--format", "csv"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "xi,m,n,value,class,family\n");
    let o = chebflag(&["table", "--xi", "2", "--m", "3", "--n", "4..3", "--format", "csv"]);
    assert_eq!(stdout(&o), "xi,m,n,value,class,family\n");
}

#[test]
fn table_json_round_trips() {
    let o = chebflag(&["table", "--xi", "3,2,1", "--m", "3..4", "--format", "json"]);
    assert!(o.status.success());
    let json = stdout(&o);
    let table: Table = serde_json::from_str(&json).unwrap();
    assert_eq!(table.0.len(), 14);
    assert_eq!(serde_json::to_string_pretty(&table).unwrap() + "\n", json);
}

#[test]
fn families_vanish_for_negative_quotient() {
    let o = chebflag(&["families", "--kind", "a", "--m", "3", "--t", "1", "--s", "2", "--N", "2", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["q"], -1);
    assert_eq!(v["value"], "0");
}

#[test]
fn families_flags_are_checked() {
    let o = chebflag(&["families", "--kind", "b", "--m", "3"]);
    assert_eq!(o.status.code(), Some(exit::USAGE));
    let o = chebflag(&["families", "--kind", "c", "--m", "3", "--rs", "1,3"]);
    assert_eq!(o.status.code(), Some(exit::HYPOTHESIS));
}

#[test]
fn verify_is_deterministic() {
    let a = chebflag(&["verify", "--seed", "11", "--cases", "60", "--format", "json"]);
    let b = chebflag(&["verify", "--seed", "11", "--cases", "60", "--format", "json"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let report: VerifyReport = serde_json::from_slice(&a.stdout).unwrap();
    assert!(report.passed);
    assert_eq!(report.suites.len(), 6);
}

#[test]
fn verify_accepts_golden_fixture() {
    let golden = fixture("golden.csv");
    let o = chebflag(&["verify", "--cases", "20", "--golden", golden.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("golden: 80 checks, pass"));
}

#[test]
fn verify_rejects_corrupted_golden() {
    let original = std::fs::read_to_string(fixture("golden.csv")).unwrap();
    let corrupted = original.replacen("\"4,2,2,1\",4,1,", "\"4,2,2,1\",4,1,9", 1);
    assert_ne!(corrupted, original);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("golden.csv");
    std::fs::write(&path, corrupted).unwrap();

    let o = chebflag(&["verify", "--cases", "20", "--golden", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(exit::MISMATCH));
    let text = stdout(&o);
    assert!(text.contains("golden:") && text.contains("FAIL"), "{text}");
    assert!(text.contains("first counterexample: line"), "{text}");

    std::fs::write(&path, "not,a,table\n1,2,3\n").unwrap();
    let o = chebflag(&["verify", "--cases", "20", "--golden", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(exit::MISMATCH));
}
