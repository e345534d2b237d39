use std::fs;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{render_table, CorpusRun, ReportFormat, RunConfig};
use crate::communities::write_partition;
use crate::depgraph::write_edge_list_to;
use crate::error::{Error, Result};
use crate::semmetrics::{filter_small, MetricsReport};

/// Paths written by [`emit_outputs`], in write order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OutputLayout {
    pub reports: Vec<PathBuf>,
    pub partitions: Vec<PathBuf>,
    pub embeddings: Vec<PathBuf>,
    pub aggregate: Vec<PathBuf>,
    pub other: Vec<PathBuf>,
}

/// Project id made safe for use as a file name.
pub(crate) fn file_stem(id: &str) -> String {
    let s: String = id
        .chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || matches!(c, '-' | '_' | '.') {
                c
            } else {
                '_'
            }
        })
        .collect();
    if s.is_empty() || s.chars().all(|c| c == '.') {
        "_".to_owned()
    } else {
        s
    }
}

fn create(path: &Path) -> Result<BufWriter<fs::File>> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    }
    fs::File::create(path)
        .map(BufWriter::new)
        .map_err(|e| Error::io(path, e))
}

fn write_bytes(path: &Path, bytes: &[u8]) -> Result<()> {
    let mut w = create(path)?;
    w.write_all(bytes)
        .and_then(|_| w.flush())
        .map_err(|e| Error::io(path, e))
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| Error::Domain(format!("cannot serialize {}: {e}", path.display())))?;
    text.push('\n');
    write_bytes(path, text.as_bytes())
}

fn csv_error(path: &Path, e: csv::Error) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::io(path, io),
        other => Error::Domain(format!("CSV error in {}: {other:?}", path.display())),
    }
}

/// One report as a CSV row. List and map fields hold JSON text.
#[derive(Debug, Serialize, Deserialize)]
struct CsvRow {
    project: String,
    algorithm: String,
    scheme: String,
    min_community_size: usize,
    n_communities_total: usize,
    all_community_sizes: String,
    n_communities: usize,
    community_sizes: String,
    retained_fraction: f64,
    cohesion: String,
    coh: Option<f64>,
    sep: Option<f64>,
    silhouette: Option<f64>,
    dep_sim_corr: Option<f64>,
    undefined: String,
    diagnostics: String,
    error: String,
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("plain data serializes")
}

fn from_json<T: for<'de> Deserialize<'de>>(field: &str, text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::parse("report csv", 2, format!("field {field}: {e}")))
}

/// Header plus one data row.
pub fn report_to_csv(r: &MetricsReport) -> String {
    let row = CsvRow {
        project: r.project.clone(),
        algorithm: r.algorithm.name().to_owned(),
        scheme: r.scheme.name().to_owned(),
        min_community_size: r.min_community_size,
        n_communities_total: r.n_communities_total,
        all_community_sizes: to_json(&r.all_community_sizes),
        n_communities: r.n_communities,
        community_sizes: to_json(&r.community_sizes),
        retained_fraction: r.retained_fraction,
        cohesion: to_json(&r.cohesion),
        coh: r.coh,
        sep: r.sep,
        silhouette: r.silhouette,
        dep_sim_corr: r.dep_sim_corr,
        undefined: to_json(&r.undefined),
        diagnostics: to_json(&r.diagnostics),
        error: to_json(&r.error),
    };
    let mut w = csv::Writer::from_writer(Vec::new());
    w.serialize(row).expect("in-memory CSV write");
    String::from_utf8(w.into_inner().expect("in-memory CSV flush")).expect("CSV output is UTF-8")
}

pub fn report_from_csv(text: &str) -> Result<MetricsReport> {
    let mut rd = csv::Reader::from_reader(text.as_bytes());
    let row: CsvRow = rd
        .deserialize()
        .next()
        .ok_or_else(|| Error::parse("report csv", 2, "missing data row"))?
        .map_err(|e| Error::parse("report csv", 2, e.to_string()))?;
    Ok(MetricsReport {
        project: row.project,
        algorithm: row.algorithm.parse()?,
        scheme: row.scheme.parse()?,
        min_community_size: row.min_community_size,
        n_communities_total: row.n_communities_total,
        all_community_sizes: from_json("all_community_sizes", &row.all_community_sizes)?,
        n_communities: row.n_communities,
        community_sizes: from_json("community_sizes", &row.community_sizes)?,
        retained_fraction: row.retained_fraction,
        cohesion: from_json("cohesion", &row.cohesion)?,
        coh: row.coh,
        sep: row.sep,
        silhouette: row.silhouette,
        dep_sim_corr: row.dep_sim_corr,
        undefined: from_json("undefined", &row.undefined)?,
        diagnostics: from_json("diagnostics", &row.diagnostics)?,
        error: from_json("error", &row.error)?,
    })
}

/// Reads a report written by [`emit_outputs`]; the format follows the
/// file extension.
pub fn read_report(path: &Path) -> Result<MetricsReport> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    match path.extension().and_then(|e| e.to_str()) {
        Some("csv") => report_from_csv(&text),
        _ => serde_json::from_str(&text).map_err(|e| Error::parse(path.display().to_string(), e.line(), e.to_string())),
    }
}

/// Writes the full output tree under `cfg.out_dir`:
///
/// * `reports/<project>/<algorithm>.<scheme>.{json,csv}`
/// * `partitions/<project>/<algorithm>.tsv`
/// * `embeddings/<project>/<algorithm>.<scheme>.csv` (`node,community_id,v1..vd`,
///   nodes of kept communities only)
/// * `graphs/<project>.tsv`, `tokens/<project>.tsv`, `diagnostics/<project>.json`
/// * `aggregate.json`, `aggregate.txt`, `failures.json`
pub fn emit_outputs(run: &CorpusRun, cfg: &RunConfig) -> Result<OutputLayout> {
    let out = &cfg.out_dir;
    let mut layout = OutputLayout::default();
    for a in &run.analyses {
        let stem = file_stem(&a.project);
        for r in &a.reports {
            let path = out.join("reports").join(&stem).join(format!(
                "{}.{}.{}",
                r.algorithm,
                r.scheme,
                cfg.format.extension()
            ));
            match cfg.format {
                ReportFormat::Json => write_json(&path, r)?,
                ReportFormat::Csv => write_bytes(&path, report_to_csv(r).as_bytes())?,
            }
            layout.reports.push(path);
        }

        for d in &a.partitions {
            let path = out.join("partitions").join(&stem).join(format!("{}.tsv", d.algorithm));
            if let Some(dir) = path.parent() {
                fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
            }
            write_partition(&d.partition, &d.header, &path)?;
            layout.partitions.push(path);

            let kept = filter_small(&d.partition, cfg.min_community_size);
            for m in &a.embeddings {
                let path = out
                    .join("embeddings")
                    .join(&stem)
                    .join(format!("{}.{}.csv", d.algorithm, m.scheme()));
                let mut w = csv::Writer::from_writer(create(&path)?);
                let mut header = vec!["node".to_owned(), "community_id".to_owned()];
                header.extend((1..=m.dimension()).map(|i| format!("v{i}")));
                w.write_record(&header).map_err(|e| csv_error(&path, e))?;
                for c in kept.communities() {
                    for node in &c.nodes {
                        let Some(v) = m.get(node) else { continue };
                        let mut rec = vec![node.clone(), c.id.to_string()];
                        rec.extend(v.iter().map(f64::to_string));
                        w.write_record(&rec).map_err(|e| csv_error(&path, e))?;
                    }
                }
                w.flush().map_err(|e| Error::io(&path, e))?;
                layout.embeddings.push(path);
            }
        }

        if let Some(g) = &a.dependencies {
            let path = out.join("graphs").join(format!("{stem}.tsv"));
            let mut w = create(&path)?;
            write_edge_list_to(g, &mut w)
                .and_then(|_| w.flush())
                .map_err(|e| Error::io(&path, e))?;
            layout.other.push(path);
        }
        if let Some(tokens) = &a.tokens {
            let path = out.join("tokens").join(format!("{stem}.tsv"));
            let mut text = String::new();
            for d in tokens {
                text.push_str(&format!("{}\t{}\n", d.node, d.text()));
            }
            write_bytes(&path, text.as_bytes())?;
            layout.other.push(path);
        }
        if !a.diagnostics.is_empty() {
            let path = out.join("diagnostics").join(format!("{stem}.json"));
            write_json(&path, &a.diagnostics)?;
            layout.other.push(path);
        }
    }

    let path = out.join("aggregate.json");
    write_json(&path, &run.aggregate)?;
    layout.aggregate.push(path);
    let path = out.join("aggregate.txt");
    write_bytes(&path, render_table(&run.aggregate).as_bytes())?;
    layout.aggregate.push(path);

    let path = out.join("failures.json");
    write_json(&path, &run.failures())?;
    layout.other.push(path);
    Ok(layout)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::communities::Algorithm;
    use crate::lexsem::Scheme;
    use crate::semmetrics::Reason;

    fn sample() -> MetricsReport {
        let mut r = MetricsReport::failed(
            "p,1",
            Algorithm::Infomap,
            Scheme::CodeImport,
            4,
            &Error::Domain("x".into()),
        );
        r.error = None;
        r.coh = Some(0.1 + 0.2);
        r.sep = Some(-1.0 / 3.0);
        r.cohesion = vec![(0, 0.25), (3, 1e-17)];
        r.community_sizes = vec![4, 9];
        r.undefined.insert(
            "dep_sim_corr".into(),
            Reason {
                code: "undefined_metric".into(),
                message: "a \"quoted\", message".into(),
            },
        );
        r.diagnostics.push("line1\nline2".into());
        r
    }

    #[test]
    fn csv_roundtrip() {
        let r = sample();
        assert_eq!(report_from_csv(&report_to_csv(&r)).unwrap(), r);
    }

    #[test]
    fn json_roundtrip() {
        let r = sample();
        let back: MetricsReport = serde_json::from_str(&serde_json::to_string_pretty(&r).unwrap()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn stems() {
        assert_eq!(file_stem("org/apache commons"), "org_apache_commons");
        assert_eq!(file_stem(".."), "_");
    }
}
