use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use log::{info, warn};

use compsem_core::communities::{write_partition_to, PartitionHeader};
use compsem_core::depgraph::{read_edge_list, write_edge_list, write_edge_list_to};
use compsem_core::pipeline::{emit_outputs, read_manifest, render_table, run_corpus, Project, ReportFormat, RunConfig};
use compsem_core::{extract_dependencies, symmetrize, Algorithm, CdParams, LanguageProfile, Scheme};

/// Identify software components by community detection on class dependency
/// graphs and score them by semantic cohesion.
#[derive(Debug, Parser)]
#[command(name = "compsem", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run projects end to end and write reports, partitions and exports.
    Analyze(AnalyzeArgs),
    /// Extract the class dependency graph of a Java project as an edge list.
    Extract {
        root: PathBuf,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Partition an edge-list graph.
    Detect {
        edge_list: PathBuf,
        #[arg(long, default_value = "leiden")]
        algorithm: Algorithm,
        #[command(flatten)]
        cd: CdArgs,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct CdArgs {
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Leiden resolution.
    #[arg(long, default_value_t = 1.0)]
    resolution: f64,
}

impl CdArgs {
    fn params(&self) -> CdParams {
        CdParams {
            seed: self.seed,
            resolution: self.resolution,
            ..CdParams::default()
        }
    }
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    /// Project root directory.
    #[arg(required_unless_present = "manifest", conflicts_with = "manifest")]
    root: Option<PathBuf>,
    /// File listing one project per line (`path` or `id<TAB>path`).
    #[arg(long)]
    manifest: Option<PathBuf>,
    #[arg(long, value_delimiter = ',', default_value = "leiden,infomap")]
    algorithms: Vec<Algorithm>,
    /// Defaults to tfidf, plus word-vector with --vectors and the import
    /// schemes with --embeddings-dir.
    #[arg(long, value_delimiter = ',')]
    schemes: Vec<Scheme>,
    #[command(flatten)]
    cd: CdArgs,
    #[arg(long, default_value_t = 4)]
    min_community_size: usize,
    /// Word-vector file (`count dim` header, then `word v1 .. vd`).
    #[arg(long)]
    vectors: Option<PathBuf>,
    /// Directory of `<project>/<scheme>.vec` embedding files.
    #[arg(long)]
    embeddings_dir: Option<PathBuf>,
    /// Replacement stoplist, one term per line.
    #[arg(long)]
    stoplist: Option<PathBuf>,
    /// Replacement keyword list, one term per line.
    #[arg(long)]
    keywords: Option<PathBuf>,
    /// Count inter-community edges instead of summing their weights.
    #[arg(long)]
    unweighted: bool,
    #[arg(long, default_value = "compsem-out")]
    out: PathBuf,
    #[arg(long, default_value = "json")]
    format: ReportFormat,
    /// Projects analyzed in parallel (0 = one per CPU).
    #[arg(long, default_value_t = 0)]
    workers: usize,
}

impl AnalyzeArgs {
    fn config(self) -> Result<RunConfig> {
        let projects = match (&self.manifest, &self.root) {
            (Some(m), _) => read_manifest(m)?,
            (None, Some(root)) => vec![Project::from_path(root.clone())],
            (None, None) => bail!("give a project root or --manifest"),
        };
        let schemes = if self.schemes.is_empty() {
            let mut s = vec![Scheme::Tfidf];
            if self.vectors.is_some() {
                s.push(Scheme::WordVector);
            }
            if self.embeddings_dir.is_some() {
                s.extend([Scheme::NameImport, Scheme::CodeImport]);
            }
            s
        } else {
            self.schemes
        };
        let mut cfg = RunConfig::new(projects, self.out);
        cfg.algorithms = self.algorithms;
        cfg.schemes = schemes;
        cfg.params = self.cd.params();
        cfg.min_community_size = self.min_community_size;
        cfg.vectors = self.vectors;
        cfg.embeddings_dir = self.embeddings_dir;
        cfg.stoplist = self.stoplist;
        cfg.keywords = self.keywords;
        cfg.unweighted = self.unweighted;
        cfg.format = self.format;
        cfg.workers = self.workers;
        cfg.validate()?;
        Ok(cfg)
    }
}

/// Failure classes mapped to exit codes.
enum Outcome {
    Ok,
    Config(anyhow::Error),
    CorpusFailed,
}

fn analyze(args: AnalyzeArgs) -> Outcome {
    let cfg = match args.config() {
        Ok(c) => c,
        Err(e) => return Outcome::Config(e),
    };
    let run = match run_corpus(&cfg) {
        Ok(r) => r,
        Err(e) => return Outcome::Config(e.into()),
    };
    if let Err(e) = emit_outputs(&run, &cfg) {
        return Outcome::Config(anyhow::Error::new(e).context("writing outputs"));
    }
    for f in run.failures() {
        warn!("{} failed ({}): {}", f.project, f.code, f.message);
    }
    print!("{}", render_table(&run.aggregate));
    info!("outputs written to {}", cfg.out_dir.display());
    if run.all_failed() {
        Outcome::CorpusFailed
    } else {
        Outcome::Ok
    }
}

fn extract(root: PathBuf, out: Option<PathBuf>) -> Result<()> {
    let x = extract_dependencies(&root, LanguageProfile::Java)?;
    for d in &x.diagnostics {
        warn!("{}: {}", d.path, d.message);
    }
    match out {
        Some(path) => write_edge_list(&x.graph, &path)?,
        None => write_edge_list_to(&x.graph, std::io::stdout().lock()).context("writing to stdout")?,
    }
    Ok(())
}

fn detect(edge_list: PathBuf, algorithm: Algorithm, cd: CdArgs, out: Option<PathBuf>) -> Result<()> {
    let params = cd.params();
    params.validate()?;
    let g = symmetrize(&read_edge_list(&edge_list)?);
    let p = algorithm.detect(&g, &params)?;
    let header = PartitionHeader {
        algorithm: algorithm.name().to_owned(),
        seed: params.seed,
        resolution: params.resolution,
        quality: algorithm.quality(&g, &p, params.resolution).ok(),
    };
    match out {
        Some(path) => {
            let mut buf = Vec::new();
            write_partition_to(&p, &header, &mut buf)?;
            fs::write(&path, buf).with_context(|| format!("writing {}", path.display()))?;
        }
        None => write_partition_to(&p, &header, std::io::stdout().lock())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let outcome = match cli.command {
        Command::Analyze(args) => analyze(args),
        Command::Extract { root, out } => extract(root, out).map_or_else(Outcome::Config, |_| Outcome::Ok),
        Command::Detect {
            edge_list,
            algorithm,
            cd,
            out,
        } => detect(edge_list, algorithm, cd, out).map_or_else(Outcome::Config, |_| Outcome::Ok),
    };
    match outcome {
        Outcome::Ok => ExitCode::SUCCESS,
        Outcome::Config(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Outcome::CorpusFailed => {
            eprintln!("error: every project failed; see failures.json");
            ExitCode::from(2)
        }
    }
}
