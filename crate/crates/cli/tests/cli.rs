use std::process::{Command, Output};

use giraw::counting::RangeDistributionRecord;
use giraw::{make_path, range_distribution, RangeDistribution, WalkModel};

fn giraw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_giraw"))
        .args(args)
        .env_remove("GIRAW_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn dist_json_round_trips() {
    let out = giraw(&["dist", "--tree", "path:7", "--model", "standard"]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: RangeDistribution = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(
        parsed,
        range_distribution(&make_path(7).into_tree(), WalkModel::Standard)
    );
    let record: RangeDistributionRecord = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(record.denominator, "128");
    assert_eq!(record.tail[&8], "0/128");
}

#[test]
fn scan_reports_counts() {
    let out = giraw(&[
        "scan", "--n", "7", "--model", "lazy", "--family", "all", "--format", "table",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(
        stdout(&out).contains("11 trees checked, 0 violations"),
        "{}",
        stdout(&out)
    );

    let out = giraw(&[
        "scan", "--n-min", "2", "--n", "9", "--model", "standard", "--family", "spiders",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let records: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(records.as_array().unwrap().len(), 8);
}

#[test]
fn verify_single_spider() {
    let out = giraw(&[
        "verify-lemmas",
        "--lemma",
        "spidersums",
        "--legs",
        "2,2,1",
        "--k",
        "6",
        "--format",
        "table",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(
        text.contains("spider-sums") && text.contains("ok"),
        "{text}"
    );
}

#[test]
fn negative_control_without_counterexamples_exits_two() {
    // With k = 0 there is nothing for the control to find, so the checker
    // reports that its expected counterexamples are missing.
    let out = giraw(&["verify-lemmas", "--lemma", "star-leaf-control", "--k", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("CONTROL FOUND NOTHING"));
    let out = giraw(&["verify-lemmas", "--lemma", "star-leaf-control"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn compare_star_and_path() {
    let out = giraw(&["compare", "--left", "star:3", "--right", "path:3"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"], "left_dominated_by_right");
    assert_eq!(v["strict_at"], serde_json::json!([3]));

    let out = giraw(&["compare", "--left", "star:3", "--right", "path:4"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn sample_needs_a_seed_and_repeats() {
    let out = giraw(&["sample", "--tree", "spider:2,1", "--samples", "1000"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("--seed"));

    let args = [
        "sample",
        "--tree",
        "spider:2,1",
        "--samples",
        "20000",
        "--seed",
        "5",
        "--model",
        "lazy",
    ];
    let a = giraw(&args);
    let b = giraw(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["seed"], 5);
    assert!(v["exact"].is_string());

    let seq = giraw(&[&args[..], &["--sequential"]].concat());
    assert_eq!(stdout(&seq), stdout(&a));

    let walks = giraw(&[
        "sample", "--tree", "path:3", "--seed", "1", "--walks", "4", "--format", "csv",
    ]);
    assert_eq!(stdout(&walks).lines().count(), 5);
}

#[test]
fn count_defaults_to_diameter() {
    let out = giraw(&["count", "--tree", "star:3"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["k"], 2);
    assert_eq!(v["bounded"], "10");
    assert_eq!(v["classes"], "8");
}

#[test]
fn gen_trees_respects_cap() {
    let out = giraw(&["gen-trees", "--n", "8", "--format", "csv"]);
    assert_eq!(stdout(&out).lines().count(), 24);
    let out = giraw(&["gen-trees", "--n", "11"]);
    assert_eq!(out.status.code(), Some(1));
    let raised = Command::new(env!("CARGO_BIN_EXE_giraw"))
        .args(["gen-trees", "--n", "11", "--format", "csv"])
        .env("GIRAW_MAX_N", "11")
        .output()
        .unwrap();
    assert_eq!(
        String::from_utf8(raised.stdout).unwrap().lines().count(),
        236
    );
}

#[test]
fn order_marks_double_broom() {
    let out = giraw(&["order", "--n", "8"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["trees"].as_array().unwrap().len(), 23);
}

#[test]
fn input_errors_have_context() {
    let dir = std::env::temp_dir().join(format!("giraw-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("cycle.txt");
    std::fs::write(&bad, "0 1\n1 2\n2 0\n").unwrap();
    let out = giraw(&["dist", "--tree", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = stderr(&out);
    assert!(err.contains("cycle.txt") && err.contains("line 3"), "{err}");

    let out = giraw(&["dist", "--tree", "spider:2,x"]);
    assert_eq!(out.status.code(), Some(1));
    let out = giraw(&["dist"]);
    assert_eq!(out.status.code(), Some(1));
    let out = giraw(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("giraw-out-{}.json", std::process::id()));
    let out = giraw(&["dist", "--tree", "star:2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(serde_json::from_str::<RangeDistribution>(&text).is_ok());
    std::fs::remove_file(path).unwrap();
}
