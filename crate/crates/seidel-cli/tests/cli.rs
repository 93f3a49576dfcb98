//! End-to-end tests of the command-line interface: output formats, golden
//! fixture files, JSON round-trips and the exit-code contract.

use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_seidel"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

const S10_GOLDEN: &str = "\
10
0 1 1 1 1 1 1 1 1 1
1 0 -1 1 1 -1 1 -1 1 -1
1 -1 0 1 1 -1 -1 1 -1 1
1 1 1 0 1 -1 -1 1 -1 -1
1 1 1 1 0 -1 1 1 1 -1
1 -1 -1 -1 -1 0 1 1 1 1
1 1 -1 -1 1 1 0 -1 1 -1
1 -1 1 1 1 1 -1 0 1 1
1 1 -1 -1 1 1 1 1 0 1
1 -1 1 -1 -1 1 -1 1 1 0
";

const C5_GOLDEN: &str = "\
5
0 -1 1 1 -1
-1 0 -1 1 1
1 -1 0 -1 1
1 1 -1 0 -1
-1 1 1 -1 0
";

fn emit_fixtures(dir: &Path) {
    let out = run(&["fixtures", "--emit", dir.to_str().unwrap()]);
    assert!(out.status.success());
}

#[test]
fn fixtures_golden_files() {
    let dir = tempfile::tempdir().unwrap();
    emit_fixtures(dir.path());
    assert_eq!(
        std::fs::read_to_string(dir.path().join("s10.smat")).unwrap(),
        S10_GOLDEN
    );
    assert_eq!(
        std::fs::read_to_string(dir.path().join("c5.smat")).unwrap(),
        C5_GOLDEN
    );
    for name in ["s10", "s6", "s18", "k4", "petersen", "c5"] {
        let text = std::fs::read_to_string(dir.path().join(format!("{name}.smat"))).unwrap();
        seidel::io::parse_smat(&text).expect("emitted fixtures parse back");
    }
}

#[test]
fn analyze_s10() {
    let dir = tempfile::tempdir().unwrap();
    emit_fixtures(dir.path());
    let out = run(&[
        "analyze",
        "--input",
        dir.path().join("s10.smat").to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("-3^4,surd(-4,-1)^3"), "{text}");
    assert!(text.contains("d=6"), "{text}");
    assert!(text.contains("alpha=1/3"), "{text}");
}

#[test]
fn analyze_pentagon_from_edges() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c5.edges");
    std::fs::write(&path, "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
    let out = run(&[
        "analyze",
        "--input",
        path.to_str().unwrap(),
        "--format",
        "edges",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("0^1,surd(0,-5)^2"));
}

#[test]
fn analyze_malformed_is_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.smat");
    std::fs::write(&path, "2\n0 2\n2 0\n").unwrap();
    let out = run(&["analyze", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn analyze_json_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    emit_fixtures(dir.path());
    let out = run(&[
        "analyze",
        "--input",
        dir.path().join("c5.smat").to_str().unwrap(),
        "--json",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["order"], 5);
    let spec = value["spectrum"].as_str().unwrap();
    let parsed = seidel::spectra::parse_spectrum_text(spec).unwrap();
    assert_eq!(parsed.order(), 5);
    assert_eq!(value["euler_switching"], "+++++");
}

#[test]
fn search_regular_s10_is_exhaustive_and_empty() {
    let dir = tempfile::tempdir().unwrap();
    emit_fixtures(dir.path());
    let out = run(&[
        "search-regular",
        "--input",
        dir.path().join("s10.smat").to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("0 witnesses (exhaustive over 512 switchings)"));
}

#[test]
fn search_regular_budget_exceeded_is_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    emit_fixtures(dir.path());
    let out = run(&[
        "search-regular",
        "--input",
        dir.path().join("s18.smat").to_str().unwrap(),
        "--budget",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn search_regular_json_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    emit_fixtures(dir.path());
    let out = run(&[
        "search-regular",
        "--input",
        dir.path().join("petersen.smat").to_str().unwrap(),
        "--json",
    ]);
    assert!(out.status.success());
    let witnesses: Vec<seidel::regular::RegularWitness> =
        serde_json::from_str(&stdout(&out)).unwrap();
    assert!(!witnesses.is_empty());
    assert!(witnesses.iter().any(|w| w.valency == 3));
}

#[test]
fn battery_verdicts_do_not_drive_exit_codes() {
    let out = run(&["battery", "--spectrum", "-5^43,11^9,12^1,13^8"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("Infeasible"));
    assert!(text.contains("trace-cube"));
}

#[test]
fn battery_json_roundtrip() {
    let out = run(&["battery", "--spectrum", "-5^42,11^15,15^3", "--json"]);
    assert!(out.status.success());
    let report: seidel::feasibility::FeasibilityReport =
        serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report.n, 60);
    assert_eq!(report.overall, seidel::feasibility::Overall::RegularForced);
}

#[test]
fn battery_parse_error_is_exit_2() {
    let out = run(&["battery", "--spectrum", "garbage"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table3_renders_ten_rows() {
    let out = run(&["table3", "--d-range", "14..23", "--lambda0", "-5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 10);
    assert!(text.contains("-5^43,11^9,12^1,13^8"));
    assert!(text.contains("276"));
}

#[test]
fn table3_json_roundtrip() {
    let out = run(&["table3", "--json"]);
    assert!(out.status.success());
    let rows: Vec<seidel::feasibility::ExtremalRow> =
        serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(rows.len(), 10);
    assert_eq!(rows[4].floor_bound, num_bigint::BigInt::from(61));
}

#[test]
fn table2_json_roundtrip() {
    let out = run(&["table2", "--json"]);
    assert!(out.status.success());
    let rows: Vec<seidel::feasibility::SurveyRow> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(rows.len(), 15);
}

#[test]
fn enumerate_order_5() {
    let dir = tempfile::tempdir().unwrap();
    let results = dir.path().join("classes.txt");
    let out = run(&[
        "enumerate",
        "--n",
        "5",
        "--out",
        results.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("7 classes"));
    let text = std::fs::read_to_string(&results).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 7);
    for line in lines {
        let mut cols = line.split_whitespace();
        let enc = cols.next().unwrap();
        assert_eq!(enc.len(), 25); // row-major 0/+/- encoding
        assert!(enc.chars().all(|c| matches!(c, '0' | '+' | '-')));
        let spec = cols.next().unwrap();
        seidel::spectra::parse_spectrum_text(spec).expect("spectrum column parses");
        cols.next().unwrap().parse::<usize>().expect("witness count");
    }
}

#[test]
fn enumerate_order_7_needs_long_flag() {
    let out = run(&["enumerate", "--n", "7"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn custom_facts_file() {
    let dir = tempfile::tempdir().unwrap();
    let facts = dir.path().join("facts.txt");
    std::fs::write(&facts, "seidel-spectrum -3^5,3^5 nonexistent Test-Citation\n").unwrap();
    // the Petersen spectrum is realized, but a custom facts file can
    // override the default empty verdict
    let out = run(&[
        "battery",
        "--spectrum",
        "-3^5,3^5",
        "--facts",
        facts.to_str().unwrap(),
        "--json",
    ]);
    assert!(out.status.success());
    let report: seidel::feasibility::FeasibilityReport =
        serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report.overall, seidel::feasibility::Overall::Infeasible);
    assert!(report
        .infeasible_rules
        .iter()
        .any(|r| r.citation.as_deref() == Some("Test-Citation")));
}
