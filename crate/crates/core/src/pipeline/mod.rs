//! End-to-end runs over one or more projects.
//!
//! Each project is extracted, symmetrized and partitioned by every selected
//! algorithm; every partition is then scored under every selected scheme.
//! [`run_corpus`] processes projects concurrently and [`emit_outputs`]
//! writes the result tree.

mod aggregate;
mod output;

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use log::{info, warn};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::communities::{Algorithm, CdParams, Partition, PartitionHeader};
use crate::depgraph::{
    extract_dependencies, symmetrize, DependencyGraph, Diagnostic, LanguageProfile, UndirectedGraph,
};
use crate::error::{Error, Result};
use crate::lexsem::{
    build_tfidf, embed_with_vectors, identifier_tokens, import_embeddings, load_word_vectors, EmbeddingMatrix, Scheme,
    TermLists, TokenDocument, WordVectorTable, DEFAULT_VOCAB_CAP,
};
use crate::semmetrics::{evaluate, MetricsReport, Reason, DEFAULT_MIN_COMMUNITY_SIZE};

pub use aggregate::{
    aggregate, median, render_table, AggregateReport, CohSepCell, Distribution, Metric, Summary, WinCell,
};
pub use output::{emit_outputs, read_report, report_from_csv, report_to_csv, OutputLayout};

/// A project to analyze: an id used in reports and file names, and the
/// directory holding its sources.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Project {
    pub id: String,
    pub root: PathBuf,
}

impl Project {
    /// Uses the directory name as the id.
    pub fn from_path(root: impl Into<PathBuf>) -> Self {
        let root = root.into();
        let id = root
            .file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .filter(|n| !n.is_empty() && n != "." && n != "..")
            .unwrap_or_else(|| "project".to_owned());
        Project { id, root }
    }
}

/// Parses a corpus manifest: one project per line, either `path` or
/// `id<TAB>path`. Blank lines and `#` comments are skipped; relative paths
/// are resolved against `base_dir`.
pub fn parse_manifest(text: &str, base_dir: &Path, context: &str) -> Result<Vec<Project>> {
    let mut projects = Vec::new();
    let mut ids = BTreeSet::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let project = match line.split_once('\t') {
            Some((id, path)) if !id.trim().is_empty() && !path.trim().is_empty() => Project {
                id: id.trim().to_owned(),
                root: base_dir.join(path.trim()),
            },
            Some(_) => return Err(Error::parse(context, idx + 1, "expected 'id<TAB>path' or 'path'")),
            None => Project::from_path(base_dir.join(line)),
        };
        if !ids.insert(project.id.clone()) {
            return Err(Error::parse(
                context,
                idx + 1,
                format!("duplicate project id '{}'", project.id),
            ));
        }
        projects.push(project);
    }
    Ok(projects)
}

pub fn read_manifest(path: &Path) -> Result<Vec<Project>> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let base = path.parent().unwrap_or_else(|| Path::new("."));
    parse_manifest(&text, base, &path.display().to_string())
}

/// Serialization format of per-project reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    #[default]
    Json,
    Csv,
}

impl ReportFormat {
    pub fn extension(self) -> &'static str {
        match self {
            ReportFormat::Json => "json",
            ReportFormat::Csv => "csv",
        }
    }
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(Error::Config(format!("unknown report format '{other}'"))),
        }
    }
}

/// Everything a run needs.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub projects: Vec<Project>,
    pub algorithms: Vec<Algorithm>,
    pub schemes: Vec<Scheme>,
    pub params: CdParams,
    pub min_community_size: usize,
    pub vocab_cap: usize,
    /// Replaces the shipped stoplist.
    pub stoplist: Option<PathBuf>,
    /// Replaces the shipped keyword list.
    pub keywords: Option<PathBuf>,
    /// Word-vector file for [`Scheme::WordVector`].
    pub vectors: Option<PathBuf>,
    /// Holds `<project>/<scheme>.vec` files for the import schemes.
    pub embeddings_dir: Option<PathBuf>,
    /// Count inter-community edges instead of summing their weights in the
    /// dependency/similarity correlation.
    pub unweighted: bool,
    pub out_dir: PathBuf,
    pub format: ReportFormat,
    /// Projects analyzed at the same time; 0 means one per CPU.
    pub workers: usize,
}

impl RunConfig {
    /// Both algorithms, TF-IDF only, default parameters.
    pub fn new(projects: Vec<Project>, out_dir: impl Into<PathBuf>) -> Self {
        RunConfig {
            projects,
            algorithms: Algorithm::ALL.to_vec(),
            schemes: vec![Scheme::Tfidf],
            params: CdParams::default(),
            min_community_size: DEFAULT_MIN_COMMUNITY_SIZE,
            vocab_cap: DEFAULT_VOCAB_CAP,
            stoplist: None,
            keywords: None,
            vectors: None,
            embeddings_dir: None,
            unweighted: false,
            out_dir: out_dir.into(),
            format: ReportFormat::Json,
            workers: 0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.projects.is_empty() {
            return Err(Error::Config("no projects to analyze".into()));
        }
        let mut ids = BTreeSet::new();
        for p in &self.projects {
            if !ids.insert(output::file_stem(&p.id)) {
                return Err(Error::Config(format!("duplicate project id '{}'", p.id)));
            }
        }
        if self.algorithms.is_empty() {
            return Err(Error::Config("no algorithms selected".into()));
        }
        if self.schemes.is_empty() {
            return Err(Error::Config("no schemes selected".into()));
        }
        self.params.validate()?;
        if self.min_community_size == 0 {
            return Err(Error::Config("minimum community size must be at least 1".into()));
        }
        if self.vocab_cap == 0 {
            return Err(Error::Config("vocabulary cap must be at least 1".into()));
        }
        if self.schemes.contains(&Scheme::WordVector) && self.vectors.is_none() {
            return Err(Error::Config("the word-vector scheme needs a word-vector file".into()));
        }
        let imports = self
            .schemes
            .iter()
            .any(|s| matches!(s, Scheme::NameImport | Scheme::CodeImport));
        if imports && self.embeddings_dir.is_none() {
            return Err(Error::Config("import schemes need an embeddings directory".into()));
        }
        if self.out_dir.is_file() {
            return Err(Error::Config(format!(
                "output path {} is a file",
                self.out_dir.display()
            )));
        }
        Ok(())
    }

    /// Loads the term lists and word vectors named by the config.
    pub fn load_resources(&self) -> Result<Resources> {
        let mut lists = TermLists::default();
        if let Some(p) = &self.stoplist {
            lists.stoplist = TermLists::load_list(p)?;
        }
        if let Some(p) = &self.keywords {
            lists.keywords = TermLists::load_list(p)?;
        }
        let vectors = match (&self.vectors, self.schemes.contains(&Scheme::WordVector)) {
            (Some(p), true) => Some(load_word_vectors(p)?),
            _ => None,
        };
        Ok(Resources { lists, vectors })
    }

    fn import_path(&self, project: &Project, scheme: Scheme) -> Option<PathBuf> {
        self.embeddings_dir
            .as_ref()
            .map(|d| d.join(&project.id).join(format!("{}.vec", scheme.name())))
    }
}

/// Inputs shared by every project of a run.
#[derive(Debug, Clone)]
pub struct Resources {
    pub lists: TermLists,
    pub vectors: Option<WordVectorTable>,
}

/// A project that could not be analyzed at all.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub project: String,
    pub code: String,
    pub message: String,
}

/// A partition produced during a run.
#[derive(Debug, Clone)]
pub struct DetectedPartition {
    pub algorithm: Algorithm,
    pub partition: Partition,
    pub header: PartitionHeader,
}

/// Everything computed for one project.
#[derive(Debug, Clone)]
pub struct ProjectAnalysis {
    pub project: String,
    /// The extracted directed dependency graph.
    pub dependencies: Option<DependencyGraph>,
    pub reports: Vec<MetricsReport>,
    pub partitions: Vec<DetectedPartition>,
    pub embeddings: Vec<EmbeddingMatrix>,
    /// Identifier tokens per class, when a source-based scheme ran.
    pub tokens: Option<Vec<TokenDocument>>,
    pub diagnostics: Vec<Diagnostic>,
    pub failure: Option<Failure>,
}

impl ProjectAnalysis {
    fn failed(project: &Project, cfg: &RunConfig, err: &Error) -> Self {
        let mut reports = Vec::new();
        for &a in &cfg.algorithms {
            for &s in &cfg.schemes {
                reports.push(MetricsReport::failed(&project.id, a, s, cfg.min_community_size, err));
            }
        }
        ProjectAnalysis {
            project: project.id.clone(),
            dependencies: None,
            reports,
            partitions: Vec::new(),
            embeddings: Vec::new(),
            tokens: None,
            diagnostics: Vec::new(),
            failure: Some(Failure {
                project: project.id.clone(),
                code: err.reason_code().to_owned(),
                message: err.to_string(),
            }),
        }
    }
}

fn build_embedding(
    cfg: &RunConfig,
    res: &Resources,
    project: &Project,
    scheme: Scheme,
    g: &UndirectedGraph,
    code_docs: &[TokenDocument],
) -> Result<(EmbeddingMatrix, Vec<String>)> {
    match scheme {
        Scheme::NameImport | Scheme::CodeImport => {
            let path = cfg
                .import_path(project, scheme)
                .ok_or_else(|| Error::Config("import schemes need an embeddings directory".into()))?;
            let imported = import_embeddings(&path, scheme, g.nodes())?;
            Ok((imported.matrix, imported.warnings))
        }
        Scheme::Tfidf => {
            let model = build_tfidf(code_docs, cfg.vocab_cap)?;
            let notes = if model.empty_documents.is_empty() {
                Vec::new()
            } else {
                vec![format!(
                    "{} class(es) have no tokens in the vocabulary: {}",
                    model.empty_documents.len(),
                    model.empty_documents.join(", ")
                )]
            };
            Ok((model.matrix, notes))
        }
        Scheme::WordVector => {
            let table = res
                .vectors
                .as_ref()
                .ok_or_else(|| Error::Config("the word-vector scheme needs a word-vector file".into()))?;
            let mut vectors = std::collections::BTreeMap::new();
            let mut empty = Vec::new();
            for d in code_docs {
                let e = embed_with_vectors(d, table);
                if e.is_empty() {
                    empty.push(d.node.clone());
                }
                vectors.insert(d.node.clone(), e.vector);
            }
            let notes = if empty.is_empty() {
                Vec::new()
            } else {
                vec![format!(
                    "{} class(es) have no in-vocabulary tokens: {}",
                    empty.len(),
                    empty.join(", ")
                )]
            };
            Ok((EmbeddingMatrix::new(scheme, table.dimension(), vectors)?, notes))
        }
    }
}

/// Runs one project through every selected algorithm and scheme.
/// Failures are recorded in the result, never returned.
pub fn analyze_project(cfg: &RunConfig, res: &Resources, project: &Project) -> ProjectAnalysis {
    info!("analyzing {} ({})", project.id, project.root.display());
    let extraction = match extract_dependencies(&project.root, LanguageProfile::Java) {
        Ok(x) => x,
        Err(e) => {
            warn!("{}: {e}", project.id);
            return ProjectAnalysis::failed(project, cfg, &e);
        }
    };
    let g = symmetrize(&extraction.graph);
    let corr_graph = if cfg.unweighted { g.unweighted() } else { g.clone() };

    let needs_code = cfg
        .schemes
        .iter()
        .any(|s| matches!(s, Scheme::Tfidf | Scheme::WordVector));
    let tokens: Option<Vec<TokenDocument>> = needs_code.then(|| {
        extraction
            .units
            .par_iter()
            .map(|u| identifier_tokens(&u.qualified_name, &u.raw_text, &res.lists, true))
            .collect()
    });

    let mut embeddings = Vec::new();
    let mut scheme_results = Vec::new();
    for &scheme in &cfg.schemes {
        let built = build_embedding(cfg, res, project, scheme, &g, tokens.as_deref().unwrap_or(&[]));
        if let Ok((m, _)) = &built {
            embeddings.push(m.clone());
        }
        scheme_results.push((scheme, built));
    }

    let mut reports = Vec::new();
    let mut partitions = Vec::new();
    for &algorithm in &cfg.algorithms {
        let detected = algorithm.detect(&g, &cfg.params);
        let partition = match detected {
            Ok(p) => p,
            Err(e) => {
                warn!("{}: {algorithm} failed: {e}", project.id);
                for &s in &cfg.schemes {
                    reports.push(MetricsReport::failed(
                        &project.id,
                        algorithm,
                        s,
                        cfg.min_community_size,
                        &e,
                    ));
                }
                continue;
            }
        };
        for (scheme, built) in &scheme_results {
            let report = match built {
                Ok((m, notes)) => {
                    let mut r = evaluate(
                        &project.id,
                        algorithm,
                        *scheme,
                        &partition,
                        m,
                        &corr_graph,
                        cfg.min_community_size,
                    );
                    r.diagnostics.splice(0..0, notes.iter().cloned());
                    r
                }
                Err(e) => MetricsReport::failed(&project.id, algorithm, *scheme, cfg.min_community_size, e),
            };
            reports.push(report);
        }
        let header = PartitionHeader {
            algorithm: algorithm.name().to_owned(),
            seed: cfg.params.seed,
            resolution: cfg.params.resolution,
            quality: algorithm.quality(&g, &partition, cfg.params.resolution).ok(),
        };
        partitions.push(DetectedPartition {
            algorithm,
            partition,
            header,
        });
    }

    let failure = if !reports.is_empty() && reports.iter().all(MetricsReport::is_failed) {
        let first = reports[0].error.clone().unwrap_or_else(|| Reason {
            code: "unknown".into(),
            message: String::new(),
        });
        Some(Failure {
            project: project.id.clone(),
            code: first.code,
            message: first.message,
        })
    } else {
        None
    };

    ProjectAnalysis {
        project: project.id.clone(),
        dependencies: Some(extraction.graph),
        reports,
        partitions,
        embeddings,
        tokens,
        diagnostics: extraction.diagnostics,
        failure,
    }
}

/// Results of a whole run.
#[derive(Debug, Clone)]
pub struct CorpusRun {
    pub analyses: Vec<ProjectAnalysis>,
    pub aggregate: AggregateReport,
}

impl CorpusRun {
    pub fn reports(&self) -> impl Iterator<Item = &MetricsReport> + '_ {
        self.analyses.iter().flat_map(|a| a.reports.iter())
    }

    pub fn failures(&self) -> Vec<&Failure> {
        self.analyses.iter().filter_map(|a| a.failure.as_ref()).collect()
    }

    /// True when no project could be analyzed.
    pub fn all_failed(&self) -> bool {
        self.analyses.iter().all(|a| a.failure.is_some())
    }
}

/// Validates `cfg`, analyzes every project (up to `cfg.workers` at once)
/// and aggregates the reports. Results are in manifest order.
pub fn run_corpus(cfg: &RunConfig) -> Result<CorpusRun> {
    cfg.validate()?;
    let res = cfg.load_resources()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| Error::Config(format!("cannot start worker pool: {e}")))?;
    let analyses: Vec<ProjectAnalysis> =
        pool.install(|| cfg.projects.par_iter().map(|p| analyze_project(cfg, &res, p)).collect());
    let reports: Vec<MetricsReport> = analyses.iter().flat_map(|a| a.reports.iter().cloned()).collect();
    let aggregate = aggregate(&reports);
    Ok(CorpusRun { analyses, aggregate })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_lines() {
        let text = "# corpus\nalpha\nb\tsub/beta\n\n";
        let ps = parse_manifest(text, Path::new("/c"), "m").unwrap();
        assert_eq!(
            ps[0],
            Project {
                id: "alpha".into(),
                root: "/c/alpha".into()
            }
        );
        assert_eq!(
            ps[1],
            Project {
                id: "b".into(),
                root: "/c/sub/beta".into()
            }
        );
        assert!(parse_manifest("a\na\n", Path::new("."), "m").is_err());
    }

    #[test]
    fn config_validation() {
        let mut cfg = RunConfig::new(vec![Project::from_path("/x/p")], "/tmp/out");
        assert!(cfg.validate().is_ok());
        cfg.schemes.push(Scheme::WordVector);
        assert!(matches!(cfg.validate(), Err(Error::Config(_))));
        cfg.schemes = vec![Scheme::NameImport];
        assert!(cfg.validate().is_err());
        cfg.embeddings_dir = Some("/e".into());
        assert!(cfg.validate().is_ok());
        cfg.algorithms.clear();
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn format_names() {
        assert_eq!("CSV".parse::<ReportFormat>().unwrap(), ReportFormat::Csv);
        assert!("xml".parse::<ReportFormat>().is_err());
    }
}
