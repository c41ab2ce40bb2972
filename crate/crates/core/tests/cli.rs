use std::process::{Command, Output};

use rider_count::board::{count_by_size, Board, MoveSet};
use rider_count::output::CountTable;
use rider_count::Piece;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rider-count"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn count_examples() {
    assert_eq!(stdout(&["count", "bishop", "8", "2"]), "1736\n");
    assert_eq!(stdout(&["count", "bishops", "8", "1"]), "64\n");
    assert_eq!(stdout(&["count", "anassa", "2", "2"]), "3\n");
    assert_eq!(
        stdout(&["count", "anassa", "4", "2", "--below", "2"]),
        "7\n"
    );
    assert_eq!(stdout(&["count", "bishop", "-1", "5"]), "120\n");
    assert_eq!(stdout(&["count", "anassa", "-1", "4"]), "24\n");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["count", "queen", "3", "1"][..],
        &["count", "bishop", "3", "-1"],
        &["count", "bishop", "3", "1", "--below", "0"],
        &["table", "bishop", "3", "--below", "1"],
        &["--format", "bfile", "coeffs", "bishop", "2"],
        &["verify", "nonsense"],
        &["count", "bishop"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn unwritable_output_exits_1() {
    let out = run(&[
        "--out",
        "/nonexistent-dir/x.txt",
        "count",
        "bishop",
        "3",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn table_formats() {
    let csv = stdout(&["table", "bishop", "2"]);
    assert_eq!(csv, "1\n1,1\n1,4,4\n");
    let tsv = stdout(&["--format", "tsv", "table", "bishop", "2"]);
    assert_eq!(tsv, "1\n1\t1\n1\t4\t4\n");
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["--format", "json", "table", "anassa", "3"])).unwrap();
    assert_eq!(json["piece"], "anassa");
    let oracle = count_by_size(&Board::square(3), &MoveSet::anassa(), 3);
    for (k, c) in oracle.iter().enumerate() {
        assert_eq!(json["rows"][3][k], c.to_string());
    }
}

#[test]
fn bfile_written_to_file_round_trips() {
    let dir = std::env::temp_dir().join(format!("rider-count-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("b.txt");
    let p = path.to_str().unwrap();
    let out = run(&[
        "--format", "bfile", "--out", p, "table", "anassa", "7", "--offset", "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let parsed = CountTable::parse_bfile(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(parsed, CountTable::compute(Piece::Anassa, 7, None, false));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn coeffs_output() {
    assert_eq!(
        stdout(&["coeffs", "bishop", "1", "--collapse"]),
        "0, 0, 1\n"
    );
    let two = stdout(&["coeffs", "bishop", "3"]);
    assert_eq!(two.lines().count(), 2);
    assert_eq!(stdout(&["coeffs", "bishop", "3", "--collapse"]), two);
}

#[test]
fn verify_reports_each_check() {
    let out = stdout(&["verify", "oracle", "--m-max", "4"]);
    assert!(out.lines().any(|l| l.starts_with("PASS")));
    assert!(!out.contains("FAIL"));
}
