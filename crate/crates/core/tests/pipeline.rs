mod common;

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use compsem_core::pipeline::{emit_outputs, read_manifest, read_report, run_corpus, Failure, Metric, ReportFormat};
use compsem_core::{extract_dependencies, filter_small, Algorithm, LanguageProfile, Project, RunConfig, Scheme};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

fn two_projects(out: &Path) -> RunConfig {
    RunConfig::new(
        vec![
            Project::from_path(fixture("shop20")),
            Project::from_path(fixture("disjoint")),
        ],
        out,
    )
}

fn class_names(project: &str) -> Vec<String> {
    let x = extract_dependencies(&fixture(project), LanguageProfile::Java).unwrap();
    x.graph.nodes().map(str::to_owned).collect()
}

#[test]
fn output_counts_follow_projects_algorithms_and_schemes() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = two_projects(tmp.path());
    let run = run_corpus(&cfg).unwrap();
    let layout = emit_outputs(&run, &cfg).unwrap();
    assert_eq!(layout.reports.len(), 4);
    assert_eq!(layout.partitions.len(), 4);
    assert_eq!(layout.embeddings.len(), 4);
    assert!(tmp.path().join("aggregate.json").is_file());
    assert!(tmp.path().join("aggregate.txt").is_file());
    for p in layout
        .reports
        .iter()
        .chain(&layout.partitions)
        .chain(&layout.embeddings)
    {
        assert!(p.is_file(), "{}", p.display());
    }
    assert_eq!(run.aggregate.projects, 2);
}

#[test]
fn one_broken_project_gives_one_failure() {
    let tmp = tempfile::tempdir().unwrap();
    let mut cfg = two_projects(&tmp.path().join("out"));
    cfg.projects.push(Project {
        id: "missing".into(),
        root: tmp.path().join("does-not-exist"),
    });
    let run = run_corpus(&cfg).unwrap();
    assert_eq!(run.failures().len(), 1);
    assert_eq!(run.failures()[0].project, "missing");
    assert!(!run.all_failed());
    emit_outputs(&run, &cfg).unwrap();
    let text = fs::read_to_string(cfg.out_dir.join("failures.json")).unwrap();
    let failures: Vec<Failure> = serde_json::from_str(&text).unwrap();
    assert_eq!(failures.len(), 1);
    // counted as a project, but it contributes no comparisons
    assert_eq!(run.aggregate.projects, 3);
    let cell = run.aggregate.win_cell(Metric::Cohesion, Scheme::Tfidf).unwrap();
    assert_eq!(cell.compared, 2);
}

#[test]
fn every_project_failing_is_reported() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = RunConfig::new(
        vec![Project::from_path(tmp.path().join("nope"))],
        tmp.path().join("out"),
    );
    let run = run_corpus(&cfg).unwrap();
    assert!(run.all_failed());
}

#[test]
fn reports_round_trip_in_both_formats() {
    for format in [ReportFormat::Json, ReportFormat::Csv] {
        let tmp = tempfile::tempdir().unwrap();
        let mut cfg = two_projects(tmp.path());
        cfg.format = format;
        let run = run_corpus(&cfg).unwrap();
        let layout = emit_outputs(&run, &cfg).unwrap();
        let written: Vec<_> = layout.reports.iter().map(|p| read_report(p).unwrap()).collect();
        let original: Vec<_> = run.reports().cloned().collect();
        assert_eq!(written, original, "{format:?}");
    }
}

#[test]
fn embedding_exports_list_retained_nodes() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = two_projects(tmp.path());
    let run = run_corpus(&cfg).unwrap();
    emit_outputs(&run, &cfg).unwrap();
    for a in &run.analyses {
        for d in &a.partitions {
            let kept = filter_small(&d.partition, cfg.min_community_size);
            let path = tmp
                .path()
                .join("embeddings")
                .join(&a.project)
                .join(format!("{}.tfidf.csv", d.algorithm));
            let text = fs::read_to_string(&path).unwrap();
            assert_eq!(text.lines().count(), kept.node_count() + 1, "{}", path.display());
            assert!(text.starts_with("node,community_id,v1,"));
        }
    }
}

#[test]
fn import_and_word_vector_schemes() {
    let tmp = tempfile::tempdir().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let emb_dir = tmp.path().join("emb");
    fs::create_dir_all(emb_dir.join("shop20")).unwrap();
    for scheme in ["name-import", "code-import"] {
        let mut text = "#dim 3\n".to_owned();
        for n in class_names("shop20") {
            let v: Vec<String> = (0..3).map(|_| format!("{:.4}", rng.gen_range(-1.0..1.0))).collect();
            text.push_str(&format!("{n}\t{}\n", v.join(" ")));
        }
        fs::write(emb_dir.join("shop20").join(format!("{scheme}.vec")), text).unwrap();
    }

    // word vectors for the tokens the tfidf run produced
    let probe = RunConfig::new(vec![Project::from_path(fixture("shop20"))], tmp.path().join("probe"));
    let run = run_corpus(&probe).unwrap();
    let words: BTreeSet<String> = run.analyses[0]
        .tokens
        .as_ref()
        .unwrap()
        .iter()
        .flat_map(|d| d.tokens.clone())
        .collect();
    let mut vectors = format!("{} 4\n", words.len());
    for w in &words {
        let v: Vec<String> = (0..4).map(|_| format!("{:.4}", rng.gen_range(-1.0..1.0))).collect();
        vectors.push_str(&format!("{w} {}\n", v.join(" ")));
    }
    let vec_path = tmp.path().join("words.txt");
    fs::write(&vec_path, vectors).unwrap();

    let mut cfg = RunConfig::new(vec![Project::from_path(fixture("shop20"))], tmp.path().join("out"));
    cfg.schemes = Scheme::ALL.to_vec();
    cfg.vectors = Some(vec_path);
    cfg.embeddings_dir = Some(emb_dir);
    cfg.validate().unwrap();
    let run = run_corpus(&cfg).unwrap();
    let layout = emit_outputs(&run, &cfg).unwrap();
    assert_eq!(layout.reports.len(), 8);
    assert_eq!(layout.embeddings.len(), 8);
    for r in run.reports() {
        assert!(!r.is_failed(), "{} {}: {:?}", r.algorithm, r.scheme, r.error);
        assert!(r.coh.is_some() && r.sep.is_some() && r.silhouette.is_some());
    }
    let cell = run.aggregate.win_cell(Metric::Cohesion, Scheme::WordVector);
    assert_eq!(cell.map(|c| c.compared), Some(1));
}

#[test]
fn missing_import_file_fails_only_that_scheme() {
    let tmp = tempfile::tempdir().unwrap();
    let emb_dir = tmp.path().join("emb");
    fs::create_dir_all(&emb_dir).unwrap();
    let mut cfg = RunConfig::new(vec![Project::from_path(fixture("shop20"))], tmp.path().join("out"));
    cfg.schemes = vec![Scheme::Tfidf, Scheme::NameImport];
    cfg.embeddings_dir = Some(emb_dir);
    let run = run_corpus(&cfg).unwrap();
    for r in run.reports() {
        assert_eq!(
            r.is_failed(),
            r.scheme == Scheme::NameImport,
            "{} {}",
            r.algorithm,
            r.scheme
        );
    }
    assert!(run.failures().is_empty());
}

#[test]
fn invalid_configs_are_rejected() {
    let tmp = tempfile::tempdir().unwrap();
    let mut cfg = two_projects(tmp.path());
    cfg.schemes = vec![Scheme::WordVector];
    assert!(cfg.validate().is_err());
    let mut cfg = two_projects(tmp.path());
    cfg.schemes = vec![Scheme::CodeImport];
    assert!(cfg.validate().is_err());
    let mut cfg = two_projects(tmp.path());
    cfg.projects.push(Project::from_path(fixture("shop20")));
    assert!(cfg.validate().is_err());
    assert!(RunConfig::new(Vec::new(), tmp.path()).validate().is_err());
}

#[test]
fn corpus_manifest_lists_ten_projects() {
    let projects = read_manifest(&corpus_manifest()).unwrap();
    assert_eq!(projects.len(), 10);
    assert!(projects.iter().all(|p| p.root.is_dir()));
}

#[test]
fn shop20_partitions_match_packages() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = RunConfig::new(vec![Project::from_path(fixture("shop20"))], tmp.path());
    let run = run_corpus(&cfg).unwrap();
    for d in &run.analyses[0].partitions {
        let kept = filter_small(&d.partition, 4);
        assert_eq!(kept.len(), 3, "{}", d.algorithm);
    }
    assert_eq!(run.analyses[0].partitions.len(), Algorithm::ALL.len());
}
