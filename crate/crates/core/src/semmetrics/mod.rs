//! Semantic quality of a partition under an embedding.
//!
//! All four metrics work on a [`CommunitySet`], the partition with its small
//! communities removed. Similarity is cosine; a zero vector has similarity 0
//! with everything, including itself.

mod report;

use log::warn;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::communities::Partition;
use crate::depgraph::UndirectedGraph;
use crate::error::{Error, Result};
use crate::lexsem::EmbeddingMatrix;

pub use report::{evaluate, MetricsReport, Reason};

pub const DEFAULT_MIN_COMMUNITY_SIZE: usize = 4;

/// A community kept by [`filter_small`], with its id in the source partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Community {
    pub id: usize,
    pub nodes: Vec<String>,
}

/// Communities of at least `min_size` nodes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommunitySet {
    communities: Vec<Community>,
    min_size: usize,
    total_nodes: usize,
    total_communities: usize,
}

impl CommunitySet {
    /// Builds a set directly; communities are checked for size and overlap.
    pub fn new(communities: Vec<Community>, min_size: usize) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for c in &communities {
            if c.nodes.len() < min_size {
                return Err(Error::Domain(format!(
                    "community {} has {} nodes, below the minimum {min_size}",
                    c.id,
                    c.nodes.len()
                )));
            }
            for n in &c.nodes {
                if !seen.insert(n.as_str()) {
                    return Err(Error::Domain(format!("node {n} appears in two communities")));
                }
            }
        }
        let total_nodes = seen.len();
        let total_communities = communities.len();
        Ok(CommunitySet {
            communities,
            min_size,
            total_nodes,
            total_communities,
        })
    }

    pub fn communities(&self) -> &[Community] {
        &self.communities
    }

    pub fn len(&self) -> usize {
        self.communities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.communities.is_empty()
    }

    pub fn min_size(&self) -> usize {
        self.min_size
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.communities.iter().map(|c| c.nodes.len()).collect()
    }

    pub fn node_count(&self) -> usize {
        self.communities.iter().map(|c| c.nodes.len()).sum()
    }

    pub fn nodes(&self) -> impl Iterator<Item = &str> + '_ {
        self.communities.iter().flat_map(|c| c.nodes.iter().map(String::as_str))
    }

    /// Share of the partition's nodes that survived the filter.
    pub fn retained_fraction(&self) -> f64 {
        if self.total_nodes == 0 {
            0.0
        } else {
            self.node_count() as f64 / self.total_nodes as f64
        }
    }

    /// Number of communities in the partition before filtering.
    pub fn total_communities(&self) -> usize {
        self.total_communities
    }
}

/// Keeps the communities with at least `min_size` members.
pub fn filter_small(p: &Partition, min_size: usize) -> CommunitySet {
    let all = p.communities();
    let total_communities = all.len();
    let communities: Vec<Community> = all
        .into_iter()
        .enumerate()
        .filter(|(_, nodes)| nodes.len() >= min_size)
        .map(|(id, nodes)| Community { id, nodes })
        .collect();
    if communities.is_empty() {
        warn!("no community has {min_size} or more nodes; nothing left to evaluate");
    }
    CommunitySet {
        communities,
        min_size,
        total_nodes: p.len(),
        total_communities,
    }
}

fn normalized(v: &[f64]) -> Vec<f64> {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm > 0.0 {
        v.iter().map(|x| x / norm).collect()
    } else {
        vec![0.0; v.len()]
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Cosine similarity, 0 when either vector is zero.
pub fn cosine(a: &[f64], b: &[f64]) -> f64 {
    dot(&normalized(a), &normalized(b)).clamp(-1.0, 1.0)
}

/// Unit vectors grouped by community, in set order.
struct Unit {
    groups: Vec<Vec<Vec<f64>>>,
}

impl Unit {
    fn new(cs: &CommunitySet, emb: &EmbeddingMatrix) -> Result<Self> {
        emb.check_alignment(cs.nodes())?;
        let groups = cs
            .communities
            .iter()
            .map(|c| c.nodes.iter().map(|n| normalized(emb.get(n).unwrap())).collect())
            .collect();
        Ok(Unit { groups })
    }

    fn sim(a: &[f64], b: &[f64]) -> f64 {
        dot(a, b).clamp(-1.0, 1.0)
    }
}

fn centroids(cs: &CommunitySet, emb: &EmbeddingMatrix) -> Result<Vec<Vec<f64>>> {
    emb.check_alignment(cs.nodes())?;
    Ok(cs
        .communities
        .iter()
        .map(|c| {
            let mut sum = vec![0.0; emb.dimension()];
            for n in &c.nodes {
                sum.iter_mut().zip(emb.get(n).unwrap()).for_each(|(s, x)| *s += x);
            }
            sum.iter().map(|s| s / c.nodes.len() as f64).collect()
        })
        .collect())
}

/// Nodes of the set whose vector is all zeros.
pub fn zero_vector_nodes(cs: &CommunitySet, emb: &EmbeddingMatrix) -> Vec<String> {
    cs.nodes()
        .filter(|n| emb.get(n).is_some_and(|v| v.iter().all(|x| *x == 0.0)))
        .map(str::to_owned)
        .collect()
}

/// Per-community cohesion and its unweighted mean.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Cohesion {
    /// `(community id, cohesion)` in set order.
    pub per_community: Vec<(usize, f64)>,
    pub mean: f64,
}

/// Mean pairwise cosine similarity inside each community, then averaged
/// over communities with equal weight.
pub fn cohesion(cs: &CommunitySet, emb: &EmbeddingMatrix) -> Result<Cohesion> {
    if cs.is_empty() {
        return Err(Error::UndefinedMetric("cohesion of an empty community set".into()));
    }
    if let Some(c) = cs.communities.iter().find(|c| c.nodes.len() < 2) {
        return Err(Error::UndefinedMetric(format!(
            "cohesion needs two nodes per community; community {} has {}",
            c.id,
            c.nodes.len()
        )));
    }
    let unit = Unit::new(cs, emb)?;
    let per_community: Vec<(usize, f64)> = cs
        .communities
        .par_iter()
        .zip(&unit.groups)
        .map(|(c, vs)| {
            let mut sum = 0.0;
            for i in 0..vs.len() {
                for j in i + 1..vs.len() {
                    sum += Unit::sim(&vs[i], &vs[j]);
                }
            }
            let pairs = (vs.len() * (vs.len() - 1) / 2) as f64;
            (c.id, sum / pairs)
        })
        .collect();
    let mean = per_community.iter().map(|(_, v)| v).sum::<f64>() / per_community.len() as f64;
    Ok(Cohesion { per_community, mean })
}

/// Mean cosine similarity over all pairs of community centroids.
pub fn separation(cs: &CommunitySet, emb: &EmbeddingMatrix) -> Result<f64> {
    if cs.len() < 2 {
        return Err(Error::UndefinedMetric(format!(
            "separation needs two communities, found {}",
            cs.len()
        )));
    }
    let cents: Vec<Vec<f64>> = centroids(cs, emb)?.iter().map(|c| normalized(c)).collect();
    let n = cents.len();
    let mut sum = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            sum += Unit::sim(&cents[i], &cents[j]);
        }
    }
    Ok(sum * 2.0 / (n * (n - 1)) as f64)
}

/// Per-node silhouette values and their mean.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Silhouette {
    /// `(node, s)` in set order.
    pub per_node: Vec<(String, f64)>,
    pub mean: f64,
}

/// Silhouette with cosine distance `1 - cos`. A node alone in its community
/// scores 0.
pub fn silhouette(cs: &CommunitySet, emb: &EmbeddingMatrix) -> Result<Silhouette> {
    if cs.len() < 2 {
        return Err(Error::UndefinedMetric(format!(
            "silhouette needs two communities, found {}",
            cs.len()
        )));
    }
    let unit = Unit::new(cs, emb)?;
    let members: Vec<(usize, &str, &[f64])> = cs
        .communities
        .iter()
        .zip(&unit.groups)
        .enumerate()
        .flat_map(|(k, (c, vs))| c.nodes.iter().zip(vs).map(move |(n, v)| (k, n.as_str(), v.as_slice())))
        .collect();

    let per_node: Vec<(String, f64)> = members
        .par_iter()
        .map(|&(k, node, v)| {
            let mut dist = vec![0.0; unit.groups.len()];
            for (l, vs) in unit.groups.iter().enumerate() {
                dist[l] = vs.iter().map(|w| 1.0 - Unit::sim(v, w)).sum();
            }
            let own = unit.groups[k].len();
            if own < 2 {
                return (node.to_owned(), 0.0);
            }
            // the node's distance to itself is 1 - sim(v, v): 0 for unit
            // vectors, 1 for the zero vector
            let a = (dist[k] - (1.0 - Unit::sim(v, v))) / (own - 1) as f64;
            let b = dist
                .iter()
                .enumerate()
                .filter(|(l, _)| *l != k)
                .map(|(l, d)| d / unit.groups[l].len() as f64)
                .fold(f64::INFINITY, f64::min);
            let m = a.max(b);
            let s = if m > 0.0 { (b - a) / m } else { 0.0 };
            (node.to_owned(), s.clamp(-1.0, 1.0))
        })
        .collect();
    let mean = per_node.iter().map(|(_, s)| s).sum::<f64>() / per_node.len() as f64;
    Ok(Silhouette { per_node, mean })
}

/// Pearson r between the edge weight joining two communities and the cosine
/// similarity of their centroids, over every unordered community pair
/// (pairs without edges included).
pub fn dep_sim_correlation(g: &UndirectedGraph, cs: &CommunitySet, emb: &EmbeddingMatrix) -> Result<f64> {
    let n = cs.len();
    if n < 2 {
        return Err(Error::UndefinedMetric(format!(
            "correlation needs two communities, found {n}"
        )));
    }
    let cents: Vec<Vec<f64>> = centroids(cs, emb)?.iter().map(|c| normalized(c)).collect();
    let mut owner = std::collections::BTreeMap::new();
    for (k, c) in cs.communities.iter().enumerate() {
        for node in &c.nodes {
            owner.insert(node.as_str(), k);
        }
    }
    let mut between = vec![vec![0.0; n]; n];
    for (a, b, w) in g.edges() {
        if let (Some(&ka), Some(&kb)) = (owner.get(a), owner.get(b)) {
            if ka != kb {
                between[ka.min(kb)][ka.max(kb)] += w as f64;
            }
        }
    }
    let mut xs = Vec::with_capacity(n * (n - 1) / 2);
    let mut ys = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            xs.push(between[i][j]);
            ys.push(Unit::sim(&cents[i], &cents[j]));
        }
    }
    pearson(&xs, &ys)
}

fn flat(v: &[f64], mean: f64, ss: f64) -> bool {
    let scale = v.iter().fold(mean.abs(), |m, x| m.max(x.abs())).max(1.0);
    (ss / v.len() as f64).sqrt() <= 1e-12 * scale
}

/// Pearson correlation coefficient; undefined when either sample is constant.
pub fn pearson(xs: &[f64], ys: &[f64]) -> Result<f64> {
    if xs.len() != ys.len() || xs.len() < 2 {
        return Err(Error::UndefinedMetric(format!(
            "correlation needs at least two paired values, found {}",
            xs.len().min(ys.len())
        )));
    }
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let (mut sxx, mut syy, mut sxy) = (0.0, 0.0, 0.0);
    for (x, y) in xs.iter().zip(ys) {
        sxx += (x - mx) * (x - mx);
        syy += (y - my) * (y - my);
        sxy += (x - mx) * (y - my);
    }
    if flat(xs, mx, sxx) {
        return Err(Error::UndefinedMetric(
            "inter-community dependency weights have zero variance".into(),
        ));
    }
    if flat(ys, my, syy) {
        return Err(Error::UndefinedMetric(
            "centroid similarities have zero variance".into(),
        ));
    }
    Ok((sxy / (sxx.sqrt() * syy.sqrt())).clamp(-1.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexsem::Scheme;
    use std::collections::BTreeMap;

    fn matrix(rows: &[(&str, &[f64])]) -> EmbeddingMatrix {
        let dim = rows[0].1.len();
        let v: BTreeMap<String, Vec<f64>> = rows.iter().map(|(n, v)| (n.to_string(), v.to_vec())).collect();
        EmbeddingMatrix::new(Scheme::Tfidf, dim, v).unwrap()
    }

    fn set(groups: &[&[&str]], min_size: usize) -> CommunitySet {
        let cs = groups
            .iter()
            .enumerate()
            .map(|(id, g)| Community {
                id,
                nodes: g.iter().map(|s| s.to_string()).collect(),
            })
            .collect();
        CommunitySet::new(cs, min_size).unwrap()
    }

    fn partition_of_sizes(sizes: &[usize]) -> Partition {
        let mut labels = Vec::new();
        for (c, &s) in sizes.iter().enumerate() {
            for i in 0..s {
                labels.push((format!("c{c}n{i}"), c));
            }
        }
        Partition::from_labels(labels).unwrap()
    }

    #[test]
    fn filter_keeps_size_four() {
        let p = partition_of_sizes(&[3, 4, 7]);
        let cs = filter_small(&p, 4);
        let mut sizes = cs.sizes();
        sizes.sort();
        assert_eq!(sizes, vec![4, 7]);
        assert!((cs.retained_fraction() - 11.0 / 14.0).abs() < 1e-12);
        assert_eq!(cs.total_communities(), 3);
    }

    #[test]
    fn filter_edge_cases() {
        let p = partition_of_sizes(&[2, 2, 2]);
        assert!(filter_small(&p, 4).is_empty());
        let cs = filter_small(&p, 1);
        assert_eq!(cs.len(), 3);
        assert_eq!(cs.retained_fraction(), 1.0);
    }

    #[test]
    fn cohesion_extremes() {
        let same = matrix(&[
            ("a", &[1.0, 2.0]),
            ("b", &[1.0, 2.0]),
            ("c", &[2.0, 4.0]),
            ("d", &[0.5, 1.0]),
        ]);
        let cs = set(&[&["a", "b", "c", "d"]], 4);
        let c = cohesion(&cs, &same).unwrap();
        assert!((c.mean - 1.0).abs() < 1e-12);
        let orth = matrix(&[
            ("a", &[1.0, 0.0, 0.0, 0.0]),
            ("b", &[0.0, 1.0, 0.0, 0.0]),
            ("c", &[0.0, 0.0, 1.0, 0.0]),
            ("d", &[0.0, 0.0, 0.0, 1.0]),
        ]);
        assert!(cohesion(&cs, &orth).unwrap().mean.abs() < 1e-12);
        assert!(matches!(separation(&cs, &orth), Err(Error::UndefinedMetric(_))));
        assert!(matches!(silhouette(&cs, &orth), Err(Error::UndefinedMetric(_))));
    }

    #[test]
    fn separation_extremes() {
        let e = matrix(&[
            ("a", &[1.0, 0.0]),
            ("b", &[1.0, 0.0]),
            ("c", &[3.0, 0.0]),
            ("d", &[0.0, 2.0]),
        ]);
        assert!((separation(&set(&[&["a"], &["b"]], 1), &e).unwrap() - 1.0).abs() < 1e-12);
        assert!(separation(&set(&[&["a", "c"], &["d"]], 1), &e).unwrap().abs() < 1e-12);
    }

    #[test]
    fn silhouette_perfect_clusters() {
        let e = matrix(&[
            ("a", &[1.0, 0.0]),
            ("b", &[1.0, 0.0]),
            ("c", &[0.0, 1.0]),
            ("d", &[0.0, 1.0]),
        ]);
        let s = silhouette(&set(&[&["a", "b"], &["c", "d"]], 2), &e).unwrap();
        assert!((s.mean - 1.0).abs() < 1e-12);
    }

    #[test]
    fn silhouette_equal_distances_is_zero() {
        let e = matrix(&[
            ("a", &[1.0, 0.0]),
            ("b", &[1.0, 0.0]),
            ("c", &[1.0, 0.0]),
            ("d", &[1.0, 0.0]),
        ]);
        let s = silhouette(&set(&[&["a", "b"], &["c", "d"]], 2), &e).unwrap();
        assert!(s.per_node.iter().all(|(_, v)| *v == 0.0));
    }

    #[test]
    fn zero_vectors_count_as_dissimilar() {
        let e = matrix(&[("a", &[1.0, 0.0]), ("z", &[0.0, 0.0])]);
        let cs = set(&[&["a", "z"]], 2);
        assert_eq!(cohesion(&cs, &e).unwrap().mean, 0.0);
        assert_eq!(zero_vector_nodes(&cs, &e), vec!["z"]);
        assert_eq!(cosine(&[0.0, 0.0], &[0.0, 0.0]), 0.0);
    }

    #[test]
    fn pearson_cases() {
        assert!((pearson(&[1.0, 2.0, 3.0], &[0.1, 0.2, 0.3]).unwrap() - 1.0).abs() < 1e-12);
        assert!((pearson(&[1.0, 2.0, 3.0], &[0.3, 0.2, 0.1]).unwrap() + 1.0).abs() < 1e-12);
        assert!(matches!(
            pearson(&[1.0, 2.0, 3.0], &[0.1, 0.1, 0.1]),
            Err(Error::UndefinedMetric(_))
        ));
        assert!(matches!(
            pearson(&[0.0, 0.0], &[0.1, 0.5]),
            Err(Error::UndefinedMetric(_))
        ));
    }

    #[test]
    fn correlation_counts_zero_weight_pairs() {
        let mut g = UndirectedGraph::new();
        for n in ["a", "b", "c"] {
            g.add_node(n);
        }
        g.add_edge("a", "b", 3);
        let e = matrix(&[("a", &[1.0, 0.0]), ("b", &[1.0, 0.2]), ("c", &[0.0, 1.0])]);
        let cs = set(&[&["a"], &["b"], &["c"]], 1);
        // x = [3, 0, 0]; the a-b pair is also the most similar
        let r = dep_sim_correlation(&g, &cs, &e).unwrap();
        assert!(r > 0.9);
    }

    #[test]
    fn missing_vector_is_alignment_error() {
        let e = matrix(&[("a", &[1.0])]);
        let cs = set(&[&["a", "b"]], 2);
        assert!(matches!(cohesion(&cs, &e), Err(Error::Alignment { .. })));
    }
}
