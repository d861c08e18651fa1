//! Binary-level contract tests: exit codes, output formats, and agreement
//! between the text, JSON and CSV emissions.

use std::process::{Command, Output};

fn schubert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubert"))
        .args(args)
        .output()
        .expect("the binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

fn json(output: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(output)).expect("stdout is one JSON document")
}

#[test]
fn classify_exit_codes() {
    let gorenstein = schubert(&["classify", "37148265"]);
    assert_eq!(gorenstein.status.code(), Some(0));
    let text = stdout(&gorenstein);
    assert!(text.contains("gorenstein: true"));
    assert!(text.contains("weight: (-2, 0, -2, -2, 0, -2, -1)"));

    let not_gorenstein = schubert(&["classify", "134625"]);
    assert_eq!(not_gorenstein.status.code(), Some(1));
    let text = stdout(&not_gorenstein);
    assert!(text.contains("gorenstein: false"));
    assert!(text.contains("certificate: descent 4 has inner corner distances (3, 2)"));

    let trivial = schubert(&["classify", "1"]);
    assert_eq!(trivial.status.code(), Some(0));

    let malformed = schubert(&["classify", "3 3 1"]);
    assert_eq!(malformed.status.code(), Some(2));
    assert!(stderr(&malformed).contains("value 3 appears more than once"));

    let unknown_flag = schubert(&["classify", "--bogus", "1"]);
    assert_eq!(unknown_flag.status.code(), Some(2));
}

#[test]
fn classify_json_schema() {
    let output = schubert(&["classify", "37148265", "--format", "json"]);
    assert_eq!(output.status.code(), Some(0));
    let report = json(&output);
    assert_eq!(report["w"], serde_json::json!([3, 7, 1, 4, 8, 2, 6, 5]));
    assert_eq!(report["gorenstein"], true);
    assert_eq!(report["smooth"], false);
    assert_eq!(report["factorial"], false);
    assert_eq!(report["fano"], false);
    assert_eq!(
        report["weight"],
        serde_json::json!([-2, 0, -2, -2, 0, -2, -1])
    );
    assert_eq!(report["certificate"], serde_json::Value::Null);

    let failing = schubert(&["classify", "134625", "--format", "json"]);
    let report = json(&failing);
    assert_eq!(report["fano"], serde_json::Value::Null);
    assert_eq!(report["weight"], serde_json::Value::Null);
    assert_eq!(report["certificate"]["kind"], "mixed_corners");
    assert_eq!(report["certificate"]["descent"], 4);
    assert_eq!(
        report["certificate"]["distances"],
        serde_json::json!([3, 2])
    );

    let csv = schubert(&["classify", "37148265", "--format", "csv"]);
    assert_eq!(csv.status.code(), Some(2));
}

#[test]
fn count_formats_agree() {
    let text = schubert(&["count", "5"]);
    assert_eq!(text.status.code(), Some(0));
    assert!(stdout(&text).contains("total=120 gorenstein=116 smooth=88"));

    let as_json = json(&schubert(&["count", "5", "--format", "json"]));
    assert_eq!(as_json["n"], 5);
    assert_eq!(as_json["total"], 120);
    assert_eq!(as_json["gorenstein"], 116);
    assert_eq!(as_json["smooth"], 88);
    assert_eq!(as_json["factorial"], serde_json::Value::Null);

    let csv_out = stdout(&schubert(&["count", "5", "--format", "csv"]));
    let mut lines = csv_out.lines();
    assert_eq!(lines.next(), Some("n,total,gorenstein,smooth,seconds"));
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(&row[..4], &["5", "120", "116", "88"]);

    let full_csv = stdout(&schubert(&["count", "4", "--format", "csv", "--full"]));
    let mut lines = full_csv.lines();
    assert_eq!(
        lines.next(),
        Some("n,total,gorenstein,smooth,factorial,fano,seconds")
    );
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(&row[..4], &["4", "24", "24", "22"]);
    let factorial: u64 = row[4].parse().unwrap();
    let fano: u64 = row[5].parse().unwrap();
    assert!((22..=24).contains(&factorial));
    assert!(fano <= 24);
}

#[test]
fn count_guards() {
    assert_eq!(schubert(&["count", "11"]).status.code(), Some(2));
    assert_eq!(schubert(&["count", "0"]).status.code(), Some(2));

    let sharded = json(&schubert(&[
        "count",
        "6",
        "--threads",
        "3",
        "--format",
        "json",
    ]));
    assert_eq!(sharded["gorenstein"], 636);
    assert_eq!(sharded["smooth"], 366);

    let oracle = schubert(&["count", "5", "--oracle"]);
    assert_eq!(oracle.status.code(), Some(0));
}

#[test]
fn diagram_output() {
    let solved = stdout(&schubert(&["diagram", "6314725"]));
    assert!(solved.contains("6   3   1   4   7   2   5"));
    assert!(solved.contains("a1 = -1"));
    assert!(solved.contains("solution: (-1, 0, 1, 1, -1, 1)"));

    let infeasible = stdout(&schubert(&["diagram", "5317426"]));
    assert!(infeasible.contains("infeasible"));
    assert!(infeasible.contains("a1 = \u{2205}"));

    let tiny = stdout(&schubert(&["diagram", "12"]));
    assert!(tiny.contains("--+--"));
    assert!(tiny.contains("a1 = 1"));

    let as_json = json(&schubert(&["diagram", "5317426", "--format", "json"]));
    assert_eq!(as_json["n"], 7);
    assert_eq!(as_json["feasible"], false);
    assert_eq!(as_json["alpha"], serde_json::Value::Null);
    assert_eq!(as_json["covers"].as_array().unwrap().len(), 9);
}

#[test]
fn grassmannian_verdicts() {
    let mu = schubert(&["grassmannian", "6,5,5,3,2", "--rect", "5x7"]);
    assert_eq!(mu.status.code(), Some(0));
    let text = stdout(&mu);
    assert!(text.contains("frak_i: 6"));
    assert!(text.contains("gorenstein: true"));
    assert!(text.contains("smooth: false"));

    let smooth = stdout(&schubert(&["grassmannian", "7,7,2,2,2", "--rect", "5x7"]));
    assert!(smooth.contains("smooth: true"));

    let empty = schubert(&["grassmannian", "0", "--rect", "3x4"]);
    assert_eq!(empty.status.code(), Some(0));
    assert!(stdout(&empty).contains("smooth: true"));

    let overflow = schubert(&["grassmannian", "8,1", "--rect", "2x7"]);
    assert_eq!(overflow.status.code(), Some(2));
    assert!(stderr(&overflow).contains("exceeds"));

    // the partition of 134625: corner distances 3 and 2
    let mixed = schubert(&["grassmannian", "2,1,1", "--rect", "4x2", "--format", "json"]);
    assert_eq!(mixed.status.code(), Some(1));
    let report = json(&mixed);
    assert_eq!(report["gorenstein"], false);
    assert_eq!(report["frak_i"], serde_json::Value::Null);
}

#[test]
fn coset_and_matrix_embedding() {
    let coset = schubert(&["coset", "4 3 2 1", "--blocks", "2,2"]);
    assert_eq!(coset.status.code(), Some(0));
    let text = stdout(&coset);
    assert!(text.contains("coset of: 4 3 2 1"));
    assert!(text.contains("w: 3 4 1 2"));
    assert!(text.contains("gorenstein: true"));

    let grassmannian_coset = schubert(&["coset", "134625", "--blocks", "4,2"]);
    assert_eq!(grassmannian_coset.status.code(), Some(1));

    let bad_blocks = schubert(&["coset", "134625", "--blocks", "4,4"]);
    assert_eq!(bad_blocks.status.code(), Some(2));

    let embed = schubert(&["embed-matrix", "134625", "--format", "json"]);
    assert_eq!(embed.status.code(), Some(1));
    let wrapped = json(&embed);
    assert_eq!(wrapped["v"], serde_json::json!([1, 3, 4, 6, 2, 5]));
    assert_eq!(
        wrapped["report"]["w"],
        serde_json::json!([1, 3, 4, 6, 2, 5, 7, 8, 9, 10, 11, 12])
    );
    assert_eq!(wrapped["report"]["gorenstein"], false);

    let trivial = schubert(&["embed-matrix", "21"]);
    assert_eq!(trivial.status.code(), Some(0));
    assert!(stdout(&trivial).contains("w: 2 1 3 4"));
}

#[test]
fn oracle_flag_passes_on_fixtures() {
    for perm in ["37148265", "134625", "6314725", "5317426"] {
        let checked = schubert(&["classify", perm, "--oracle"]);
        assert!(
            checked.status.code() == Some(0) || checked.status.code() == Some(1),
            "oracle run must succeed for {perm}"
        );
    }
}
