use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{cohesion, dep_sim_correlation, filter_small, separation, silhouette, zero_vector_nodes};
use crate::communities::{Algorithm, Partition};
use crate::depgraph::UndirectedGraph;
use crate::error::Error;
use crate::lexsem::{EmbeddingMatrix, Scheme};

/// Why a value is missing: a reason code plus a human-readable message.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reason {
    pub code: String,
    pub message: String,
}

impl From<&Error> for Reason {
    fn from(e: &Error) -> Self {
        Reason {
            code: e.reason_code().to_owned(),
            message: e.to_string(),
        }
    }
}

/// Metrics of one (project, algorithm, scheme) triple.
///
/// Metrics that could not be computed are `None` and have an entry in
/// `undefined`. When the whole triple failed, `error` is set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricsReport {
    pub project: String,
    pub algorithm: Algorithm,
    pub scheme: Scheme,
    pub min_community_size: usize,
    /// Communities found before the size filter.
    pub n_communities_total: usize,
    /// Sizes of all communities found, by community id.
    pub all_community_sizes: Vec<usize>,
    /// Communities kept by the size filter (N).
    pub n_communities: usize,
    pub community_sizes: Vec<usize>,
    pub retained_fraction: f64,
    /// `(community id, cohesion)` for every kept community.
    pub cohesion: Vec<(usize, f64)>,
    pub coh: Option<f64>,
    pub sep: Option<f64>,
    pub silhouette: Option<f64>,
    pub dep_sim_corr: Option<f64>,
    pub undefined: BTreeMap<String, Reason>,
    pub diagnostics: Vec<String>,
    pub error: Option<Reason>,
}

impl MetricsReport {
    /// A report for a triple that could not be evaluated at all.
    pub fn failed(project: &str, algorithm: Algorithm, scheme: Scheme, min_size: usize, err: &Error) -> Self {
        MetricsReport {
            project: project.to_owned(),
            algorithm,
            scheme,
            min_community_size: min_size,
            n_communities_total: 0,
            all_community_sizes: Vec::new(),
            n_communities: 0,
            community_sizes: Vec::new(),
            retained_fraction: 0.0,
            cohesion: Vec::new(),
            coh: None,
            sep: None,
            silhouette: None,
            dep_sim_corr: None,
            undefined: BTreeMap::new(),
            diagnostics: Vec::new(),
            error: Some(err.into()),
        }
    }

    pub fn is_failed(&self) -> bool {
        self.error.is_some()
    }

    /// True when both cohesion and separation are defined and cohesion is
    /// the larger.
    pub fn cohesion_exceeds_separation(&self) -> Option<bool> {
        Some(self.coh? > self.sep?)
    }
}

/// Filters `p` and computes every metric. `dep_graph` supplies the weights
/// for the dependency/similarity correlation.
pub fn evaluate(
    project: &str,
    algorithm: Algorithm,
    scheme: Scheme,
    p: &Partition,
    emb: &EmbeddingMatrix,
    dep_graph: &UndirectedGraph,
    min_size: usize,
) -> MetricsReport {
    let cs = filter_small(p, min_size);
    let mut report = MetricsReport {
        project: project.to_owned(),
        algorithm,
        scheme,
        min_community_size: min_size,
        n_communities_total: cs.total_communities(),
        all_community_sizes: p.sizes(),
        n_communities: cs.len(),
        community_sizes: cs.sizes(),
        retained_fraction: cs.retained_fraction(),
        cohesion: Vec::new(),
        coh: None,
        sep: None,
        silhouette: None,
        dep_sim_corr: None,
        undefined: BTreeMap::new(),
        diagnostics: Vec::new(),
        error: None,
    };
    if cs.is_empty() {
        report
            .diagnostics
            .push(format!("no community has {min_size} or more nodes"));
    }
    if let Err(e) = emb.check_alignment(cs.nodes()) {
        report.error = Some((&e).into());
        return report;
    }
    let zeros = zero_vector_nodes(&cs, emb);
    if !zeros.is_empty() {
        report.diagnostics.push(format!(
            "{} node(s) have zero vectors and count as dissimilar to every node: {}",
            zeros.len(),
            zeros.join(", ")
        ));
    }

    let mut undefined = BTreeMap::new();
    let mut record = |name: &str, r: crate::Result<f64>| match r {
        Ok(v) => Some(v),
        Err(e) => {
            undefined.insert(name.to_owned(), Reason::from(&e));
            None
        }
    };
    match cohesion(&cs, emb) {
        Ok(c) => {
            report.coh = Some(c.mean);
            report.cohesion = c.per_community;
        }
        Err(e) => {
            record("coh", Err(e));
        }
    }
    report.sep = record("sep", separation(&cs, emb));
    report.silhouette = record("silhouette", silhouette(&cs, emb).map(|s| s.mean));
    report.dep_sim_corr = record("dep_sim_corr", dep_sim_correlation(dep_graph, &cs, emb));
    report.undefined = undefined;
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn embedding(nodes: &[&str]) -> EmbeddingMatrix {
        let v = nodes
            .iter()
            .enumerate()
            .map(|(i, n)| (n.to_string(), vec![1.0, i as f64]))
            .collect();
        EmbeddingMatrix::new(Scheme::Tfidf, 2, v).unwrap()
    }

    #[test]
    fn single_community_leaves_pairwise_metrics_undefined() {
        let nodes = ["a", "b", "c", "d", "e"];
        let p = Partition::single_community(nodes);
        let g = UndirectedGraph::new();
        let r = evaluate("p", Algorithm::Leiden, Scheme::Tfidf, &p, &embedding(&nodes), &g, 4);
        assert!(r.coh.is_some());
        assert!(r.sep.is_none() && r.silhouette.is_none() && r.dep_sim_corr.is_none());
        assert_eq!(r.undefined["sep"].code, "undefined_metric");
        assert_eq!(r.cohesion_exceeds_separation(), None);
        assert!(r.error.is_none());
    }

    #[test]
    fn everything_filtered() {
        let p = Partition::singletons(["a", "b"]);
        let r = evaluate(
            "p",
            Algorithm::Infomap,
            Scheme::Tfidf,
            &p,
            &embedding(&["a", "b"]),
            &UndirectedGraph::new(),
            4,
        );
        assert_eq!(r.n_communities, 0);
        assert_eq!(r.n_communities_total, 2);
        assert_eq!(r.undefined.len(), 4);
    }

    #[test]
    fn missing_embedding_fails_report() {
        let p = Partition::single_community(["a", "b", "c", "d"]);
        let r = evaluate(
            "p",
            Algorithm::Leiden,
            Scheme::CodeImport,
            &p,
            &embedding(&["a"]),
            &UndirectedGraph::new(),
            4,
        );
        assert_eq!(r.error.as_ref().unwrap().code, "alignment");
    }
}
