use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::communities::Algorithm;
use crate::lexsem::Scheme;
use crate::semmetrics::MetricsReport;

/// Values closer than this count as a tie.
pub const TIE_EPS: f64 = 1e-12;

/// The four compared metrics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Metric {
    Cohesion,
    Separation,
    Silhouette,
    DepSimCorr,
}

impl Metric {
    pub const ALL: [Metric; 4] = [
        Metric::Cohesion,
        Metric::Separation,
        Metric::Silhouette,
        Metric::DepSimCorr,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Metric::Cohesion => "Cohesion",
            Metric::Separation => "Separation",
            Metric::Silhouette => "Silhouette",
            Metric::DepSimCorr => "Dep-Sim Corr",
        }
    }

    pub fn value(self, r: &MetricsReport) -> Option<f64> {
        match self {
            Metric::Cohesion => r.coh,
            Metric::Separation => r.sep,
            Metric::Silhouette => r.silhouette,
            Metric::DepSimCorr => r.dep_sim_corr,
        }
    }

    /// Cohesion and silhouette are better when higher; separation and the
    /// correlation when lower (a more negative correlation wins).
    pub fn higher_is_better(self) -> bool {
        matches!(self, Metric::Cohesion | Metric::Silhouette)
    }
}

/// Leiden vs Infomap win counts for one metric and scheme.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WinCell {
    pub metric: Metric,
    pub scheme: Scheme,
    pub leiden: usize,
    pub infomap: usize,
    pub ties: usize,
    /// Projects where both algorithms produced a value. Zero marks an empty cell.
    pub compared: usize,
}

impl WinCell {
    pub fn is_empty(&self) -> bool {
        self.compared == 0
    }
}

/// Projects whose cohesion exceeds their separation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CohSepCell {
    pub algorithm: Algorithm,
    pub scheme: Scheme,
    pub count: usize,
    /// Projects with both values defined.
    pub projects: usize,
    pub percentage: Option<f64>,
}

/// Five-number-ish summary of a sample.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub count: usize,
    pub min: Option<f64>,
    pub median: Option<f64>,
    pub mean: Option<f64>,
    pub max: Option<f64>,
}

impl Summary {
    pub fn of(values: &[f64]) -> Self {
        if values.is_empty() {
            return Summary {
                count: 0,
                min: None,
                median: None,
                mean: None,
                max: None,
            };
        }
        let mut v = values.to_vec();
        v.sort_by(f64::total_cmp);
        Summary {
            count: v.len(),
            min: v.first().copied(),
            median: Some(median_sorted(&v)),
            mean: Some(v.iter().sum::<f64>() / v.len() as f64),
            max: v.last().copied(),
        }
    }
}

fn median_sorted(v: &[f64]) -> f64 {
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        (v[n / 2 - 1] + v[n / 2]) / 2.0
    }
}

/// Median of an unsorted sample, `None` when empty.
pub fn median(values: &[f64]) -> Option<f64> {
    Summary::of(values).median
}

/// Community count and size distributions of one algorithm, after the size
/// filter and (`all_*`) before it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Distribution {
    pub algorithm: Algorithm,
    pub communities_per_project: Summary,
    pub community_size: Summary,
    pub all_communities_per_project: Summary,
    pub all_community_size: Summary,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AggregateReport {
    pub projects: usize,
    pub schemes: Vec<Scheme>,
    pub wins: Vec<WinCell>,
    pub cohesion_gt_separation: Vec<CohSepCell>,
    pub distributions: Vec<Distribution>,
}

impl AggregateReport {
    pub fn win_cell(&self, metric: Metric, scheme: Scheme) -> Option<&WinCell> {
        self.wins.iter().find(|c| c.metric == metric && c.scheme == scheme)
    }

    pub fn coh_sep_cell(&self, algorithm: Algorithm, scheme: Scheme) -> Option<&CohSepCell> {
        self.cohesion_gt_separation
            .iter()
            .find(|c| c.algorithm == algorithm && c.scheme == scheme)
    }
}

/// Cross-project comparison of the two algorithms. Failed reports are
/// ignored.
pub fn aggregate(reports: &[MetricsReport]) -> AggregateReport {
    let ok: Vec<&MetricsReport> = reports.iter().filter(|r| !r.is_failed()).collect();
    let projects: BTreeSet<&str> = reports.iter().map(|r| r.project.as_str()).collect();
    let present: BTreeSet<Scheme> = reports.iter().map(|r| r.scheme).collect();
    let schemes: Vec<Scheme> = Scheme::ALL.into_iter().filter(|s| present.contains(s)).collect();

    let mut index: BTreeMap<(&str, Algorithm, Scheme), &MetricsReport> = BTreeMap::new();
    for r in &ok {
        index.insert((r.project.as_str(), r.algorithm, r.scheme), r);
    }

    let mut wins = Vec::new();
    for metric in Metric::ALL {
        for &scheme in &schemes {
            let mut cell = WinCell {
                metric,
                scheme,
                leiden: 0,
                infomap: 0,
                ties: 0,
                compared: 0,
            };
            for &p in &projects {
                let l = index.get(&(p, Algorithm::Leiden, scheme)).and_then(|r| metric.value(r));
                let i = index
                    .get(&(p, Algorithm::Infomap, scheme))
                    .and_then(|r| metric.value(r));
                let (Some(l), Some(i)) = (l, i) else { continue };
                cell.compared += 1;
                if (l - i).abs() <= TIE_EPS {
                    cell.ties += 1;
                } else if (l > i) == metric.higher_is_better() {
                    cell.leiden += 1;
                } else {
                    cell.infomap += 1;
                }
            }
            wins.push(cell);
        }
    }

    let mut cohesion_gt_separation = Vec::new();
    for algorithm in Algorithm::ALL {
        for &scheme in &schemes {
            let mut count = 0;
            let mut n = 0;
            for &p in &projects {
                let Some(r) = index.get(&(p, algorithm, scheme)) else {
                    continue;
                };
                if let Some(gt) = r.cohesion_exceeds_separation() {
                    n += 1;
                    count += usize::from(gt);
                }
            }
            cohesion_gt_separation.push(CohSepCell {
                algorithm,
                scheme,
                count,
                projects: n,
                percentage: (n > 0).then(|| 100.0 * count as f64 / n as f64),
            });
        }
    }

    let mut distributions = Vec::new();
    for algorithm in Algorithm::ALL {
        // partitions do not depend on the scheme: one report per project
        let mut seen = BTreeSet::new();
        let (mut counts, mut sizes, mut all_counts, mut all_sizes) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
        for r in ok.iter().filter(|r| r.algorithm == algorithm) {
            if seen.insert(r.project.as_str()) {
                counts.push(r.n_communities as f64);
                sizes.extend(r.community_sizes.iter().map(|&s| s as f64));
                all_counts.push(r.n_communities_total as f64);
                all_sizes.extend(r.all_community_sizes.iter().map(|&s| s as f64));
            }
        }
        if !seen.is_empty() {
            distributions.push(Distribution {
                algorithm,
                communities_per_project: Summary::of(&counts),
                community_size: Summary::of(&sizes),
                all_communities_per_project: Summary::of(&all_counts),
                all_community_size: Summary::of(&all_sizes),
            });
        }
    }

    AggregateReport {
        projects: projects.len(),
        schemes,
        wins,
        cohesion_gt_separation,
        distributions,
    }
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map_or_else(|| "-".to_owned(), |x| format!("{x:.2}"))
}

/// Aligned plain-text table: one row per metric, three columns (Leiden,
/// Infomap, ties) per scheme, plus the cohesion > separation row.
pub fn render_table(agg: &AggregateReport) -> String {
    let mut rows: Vec<Vec<String>> = Vec::new();
    let mut top = vec![String::new()];
    let mut sub = vec!["Metric".to_owned()];
    for s in &agg.schemes {
        top.extend([s.name().to_owned(), String::new(), String::new()]);
        sub.extend(["Leiden".to_owned(), "Infomap".to_owned(), "Ties".to_owned()]);
    }
    rows.push(top);
    rows.push(sub);
    for metric in Metric::ALL {
        let mut row = vec![metric.label().to_owned()];
        for &s in &agg.schemes {
            match agg.win_cell(metric, s).filter(|c| !c.is_empty()) {
                Some(c) => row.extend([c.leiden.to_string(), c.infomap.to_string(), c.ties.to_string()]),
                None => row.extend(["-".to_owned(), "-".to_owned(), "-".to_owned()]),
            }
        }
        rows.push(row);
    }
    let mut row = vec!["Cohesion>Separation (%)".to_owned()];
    for &s in &agg.schemes {
        for a in Algorithm::ALL {
            row.push(match agg.coh_sep_cell(a, s) {
                Some(c) if c.projects > 0 => {
                    format!("{} ({:.1})", c.count, c.percentage.unwrap_or(0.0))
                }
                _ => "-".to_owned(),
            });
        }
        row.push(String::new());
    }
    rows.push(row);

    let ncols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..ncols)
        .map(|j| {
            rows.iter()
                .filter_map(|r| r.get(j))
                .map(|c| c.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in &rows {
        let mut line = String::new();
        for (j, cell) in r.iter().enumerate() {
            if j == 0 {
                let _ = write!(line, "{cell:<w$}", w = widths[0]);
            } else {
                let _ = write!(line, "  {cell:>w$}", w = widths[j]);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }

    out.push_str(&format!("\nProjects: {}\n", agg.projects));
    for d in &agg.distributions {
        out.push_str(&format!(
            "{}: kept communities per project median {} (min {}, max {}); kept community size median {} (mean {})\n",
            d.algorithm,
            fmt_opt(d.communities_per_project.median),
            fmt_opt(d.communities_per_project.min),
            fmt_opt(d.communities_per_project.max),
            fmt_opt(d.community_size.median),
            fmt_opt(d.community_size.mean),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn report(project: &str, algorithm: Algorithm, coh: f64, sep: f64, corr: Option<f64>) -> MetricsReport {
        let mut r = MetricsReport::failed(project, algorithm, Scheme::Tfidf, 4, &Error::Domain(String::new()));
        r.error = None;
        r.coh = Some(coh);
        r.sep = Some(sep);
        r.silhouette = Some(0.1);
        r.dep_sim_corr = corr;
        r.n_communities_total = 2;
        r.all_community_sizes = vec![4, 5];
        r
    }

    #[test]
    fn hand_counted_wins() {
        use Algorithm::*;
        let reports = vec![
            report("a", Leiden, 0.9, 0.2, Some(-0.5)),
            report("a", Infomap, 0.8, 0.3, Some(0.1)),
            report("b", Leiden, 0.5, 0.6, Some(0.2)),
            report("b", Infomap, 0.7, 0.1, None),
            report("c", Leiden, 0.4, 0.3, Some(0.0)),
            report("c", Infomap, 0.6, 0.3, Some(-0.1)),
        ];
        let agg = aggregate(&reports);
        let coh = agg.win_cell(Metric::Cohesion, Scheme::Tfidf).unwrap();
        assert_eq!((coh.leiden, coh.infomap, coh.ties, coh.compared), (1, 2, 0, 3));
        let sep = agg.win_cell(Metric::Separation, Scheme::Tfidf).unwrap();
        assert_eq!((sep.leiden, sep.infomap, sep.ties), (1, 1, 1));
        let corr = agg.win_cell(Metric::DepSimCorr, Scheme::Tfidf).unwrap();
        assert_eq!((corr.leiden, corr.infomap, corr.ties, corr.compared), (1, 1, 0, 2));
        let sil = agg.win_cell(Metric::Silhouette, Scheme::Tfidf).unwrap();
        assert_eq!(sil.ties, 3);
        let l = agg.coh_sep_cell(Leiden, Scheme::Tfidf).unwrap();
        assert_eq!((l.count, l.projects), (2, 3));
        let i = agg.coh_sep_cell(Infomap, Scheme::Tfidf).unwrap();
        assert_eq!(i.percentage, Some(100.0));
    }

    #[test]
    fn failed_reports_are_ignored() {
        let mut r = report("a", Algorithm::Leiden, 1.0, 0.0, None);
        r.error = Some((&Error::Domain("x".into())).into());
        let agg = aggregate(&[r, report("a", Algorithm::Infomap, 1.0, 0.0, None)]);
        assert!(agg.win_cell(Metric::Cohesion, Scheme::Tfidf).unwrap().is_empty());
    }

    #[test]
    fn table_shape() {
        let agg = aggregate(&[
            report("a", Algorithm::Leiden, 0.9, 0.2, None),
            report("a", Algorithm::Infomap, 0.8, 0.3, None),
        ]);
        let t = render_table(&agg);
        let lines: Vec<&str> = t.lines().collect();
        assert!(lines[0].contains("tfidf"));
        assert!(lines[1].starts_with("Metric"));
        for (line, label) in lines[2..7].iter().zip([
            "Cohesion",
            "Separation",
            "Silhouette",
            "Dep-Sim Corr",
            "Cohesion>Separation (%)",
        ]) {
            assert!(line.starts_with(label), "{line}");
        }
        assert!(lines[6].contains("1 (100.0)"));
    }

    #[test]
    fn medians() {
        assert_eq!(median(&[3.0, 1.0, 2.0]), Some(2.0));
        assert_eq!(median(&[4.0, 1.0, 2.0, 3.0]), Some(2.5));
        assert_eq!(median(&[]), None);
    }
}
