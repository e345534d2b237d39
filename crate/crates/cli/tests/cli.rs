use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/tests/fixtures")
        .join(name)
}

fn compsem(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_compsem"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

#[test]
fn help_and_version_exit_zero() {
    let o = compsem(&["--help"]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stdout).contains("analyze"));
    assert_eq!(code(&compsem(&["--version"])), 0);
    assert_eq!(code(&compsem(&["analyze", "--help"])), 0);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(code(&compsem(&[])), 1);
    assert_eq!(code(&compsem(&["analyze"])), 1);
    assert_eq!(code(&compsem(&["analyze", "x", "--algorithms", "louvain"])), 1);
}

#[test]
fn analyze_writes_outputs_and_table() {
    let tmp = tempfile::tempdir().unwrap();
    let out = tmp.path().join("out");
    let o = compsem(&[
        "analyze",
        fixture("shop20").to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let stdout = String::from_utf8_lossy(&o.stdout);
    assert!(stdout.contains("Cohesion"), "{stdout}");
    assert_eq!(fs::read_to_string(out.join("aggregate.txt")).unwrap(), stdout);
    assert!(out.join("reports/shop20/leiden.tfidf.json").is_file());
    assert!(out.join("partitions/shop20/infomap.tsv").is_file());
}

#[test]
fn manifest_with_csv_reports() {
    let tmp = tempfile::tempdir().unwrap();
    let manifest = tmp.path().join("projects.txt");
    fs::write(
        &manifest,
        format!(
            "# two projects\nshop\t{}\n{}\n",
            fixture("shop20").display(),
            fixture("disjoint").display()
        ),
    )
    .unwrap();
    let out = tmp.path().join("out");
    let o = compsem(&[
        "analyze",
        "--manifest",
        manifest.to_str().unwrap(),
        "--format",
        "csv",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(out.join("reports/shop/leiden.tfidf.csv").is_file());
    assert!(out.join("reports/disjoint/infomap.tfidf.csv").is_file());
}

#[test]
fn config_errors_exit_one() {
    let tmp = tempfile::tempdir().unwrap();
    let o = compsem(&[
        "analyze",
        fixture("shop20").to_str().unwrap(),
        "--schemes",
        "word-vector",
        "--out",
        tmp.path().to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("word-vector"));
    let o = compsem(&["analyze", "--manifest", tmp.path().join("none.txt").to_str().unwrap()]);
    assert_eq!(code(&o), 1);
}

#[test]
fn total_failure_exits_two() {
    let tmp = tempfile::tempdir().unwrap();
    let out = tmp.path().join("out");
    let o = compsem(&[
        "analyze",
        tmp.path().join("missing").to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 2, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(out.join("failures.json").is_file());
}

#[test]
fn extract_then_detect() {
    let tmp = tempfile::tempdir().unwrap();
    let edges = tmp.path().join("edges.tsv");
    let o = compsem(&[
        "extract",
        fixture("disjoint").to_str().unwrap(),
        "--out",
        edges.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let text = fs::read_to_string(&edges).unwrap();
    assert!(text.lines().all(|l| l.split('\t').count() == 3), "{text}");

    let o = compsem(&[
        "detect",
        edges.to_str().unwrap(),
        "--algorithm",
        "infomap",
        "--seed",
        "3",
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let stdout = String::from_utf8_lossy(&o.stdout);
    let mut lines = stdout.lines();
    assert!(lines.next().unwrap().starts_with("# algorithm=infomap seed=3"));
    assert_eq!(lines.count(), 14);
}

#[test]
fn detect_rejects_bad_resolution() {
    let tmp = tempfile::tempdir().unwrap();
    let edges = tmp.path().join("edges.tsv");
    fs::write(&edges, "a\tb\t1\n").unwrap();
    let o = compsem(&["detect", edges.to_str().unwrap(), "--resolution", "-1"]);
    assert_eq!(code(&o), 1);
}
