mod common;

use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_defect-lab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn fixture(order: usize) -> String {
    common::census_path(order).display().to_string()
}

fn census_outputs(dir: &Path, jobs: &str) -> (Vec<u8>, Vec<u8>, Vec<u8>) {
    let tag = format!("j{jobs}");
    let jsonl = dir.join(format!("{tag}.jsonl"));
    let csv = dir.join(format!("{tag}.csv"));
    let hex = dir.join(format!("{tag}-hex.csv"));
    let o = run(&[
        "census",
        &fixture(18),
        &fixture(20),
        "--passes",
        "defect,hexagons,pi,clusters",
        "--jobs",
        jobs,
        "--jsonl",
        jsonl.to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
        "--hexagon-csv",
        hex.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    (std::fs::read(jsonl).unwrap(), std::fs::read(csv).unwrap(), std::fs::read(hex).unwrap())
}

#[test]
fn census_is_deterministic_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let one = census_outputs(dir.path(), "1");
    let eight = census_outputs(dir.path(), "8");
    assert_eq!(one, eight);
    assert_eq!(census_outputs(dir.path(), "8"), one);
}

#[test]
fn census_tables_on_stdout() {
    let o = run(&["census", &fixture(10), &fixture(20)]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("order,nontrivial,critical,df3,df4,df5,df6,df_higher\n10,1,1,1,0,0,0,0\n20,6,1,6,0,0,0,0\n"));
    assert!(text.contains("20,6,1,1,0,5,0,0\n"));
}

#[test]
fn analyze_a_graph6_string() {
    let o = run(&["analyze", "ICOf@pSb?"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["defect"], 3);
    assert_eq!(v["oddness"], 2);
    assert_eq!(v["nontrivial"], true);
}

#[test]
fn analyze_a_multipole_file() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("z.mpole");
    let z = run(&["construct", "z"]);
    std::fs::write(&p, &z.stdout).unwrap();
    let o = run(&["analyze", p.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("shape [2, 2, 2]\n"));
}

#[test]
fn construct_and_reduce() {
    let o = run(&["construct", "snark34"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let g6 = text.lines().next().unwrap();
    assert_eq!(defect_lab::graph::parse_graph6(g6).unwrap().vertex_count(), 34);
    let o = run(&["reduce", "ICOf@pSb?"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "status nontrivial_defect3\nICOf@pSb?\n");
}

#[test]
fn scan_and_filter() {
    let o = run(&["scan", "all", &fixture(10), &fixture(18)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 5);
    let o = run(&["filter", "--nontrivial", &fixture(20)]);
    assert_eq!(stdout(&o).lines().count(), 6);
}

#[test]
fn bad_input_exits_with_two() {
    assert_eq!(run(&["analyze", "C"]).status.code(), Some(2));
    assert_eq!(run(&["reduce", "C~"]).status.code(), Some(2));
    assert_eq!(run(&["construct", "gn", "--wiring", "999"]).status.code(), Some(2));
}
