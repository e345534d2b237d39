//! Community detection on the symmetrized dependency graph.
//!
//! [`leiden`] maximizes modularity, [`infomap`] minimizes the two-level map
//! equation. Both are seeded and deterministic: node visit orders are seeded
//! shuffles of the nodes sorted by name.

mod graph;
mod infomap;
mod leiden;
mod quality;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::depgraph::UndirectedGraph;
use crate::error::{Error, Result};

pub use infomap::infomap;
pub use leiden::leiden;
pub use quality::{map_equation, modularity};

/// Total assignment of nodes to community ids `0..N`.
///
/// Ids are canonical: they are numbered in order of first appearance when the
/// nodes are walked in sorted order, so two equal groupings compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    nodes: Vec<String>,
    membership: Vec<usize>,
}

impl Partition {
    /// Builds a partition from arbitrary labels. Fails on duplicate nodes.
    pub fn from_labels<I>(assignment: I) -> Result<Self>
    where
        I: IntoIterator<Item = (String, usize)>,
    {
        let mut map = BTreeMap::new();
        for (node, label) in assignment {
            if map.insert(node.clone(), label).is_some() {
                return Err(Error::Domain(format!("node {node} assigned twice")));
            }
        }
        let (nodes, labels): (Vec<String>, Vec<usize>) = map.into_iter().unzip();
        let (membership, _) = graph::renumber(&labels);
        Ok(Partition { nodes, membership })
    }

    /// `nodes` must be sorted and unique; `labels[i]` belongs to `nodes[i]`.
    pub(crate) fn from_sorted(nodes: Vec<String>, labels: &[usize]) -> Self {
        debug_assert!(nodes.windows(2).all(|w| w[0] < w[1]));
        let (membership, _) = graph::renumber(labels);
        Partition { nodes, membership }
    }

    pub fn singletons<'a, I: IntoIterator<Item = &'a str>>(nodes: I) -> Self {
        let nodes: BTreeSet<&str> = nodes.into_iter().collect();
        let n = nodes.len();
        Partition {
            nodes: nodes.into_iter().map(str::to_owned).collect(),
            membership: (0..n).collect(),
        }
    }

    pub fn single_community<'a, I: IntoIterator<Item = &'a str>>(nodes: I) -> Self {
        let nodes: BTreeSet<&str> = nodes.into_iter().collect();
        let n = nodes.len();
        Partition {
            nodes: nodes.into_iter().map(str::to_owned).collect(),
            membership: vec![0; n],
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn num_communities(&self) -> usize {
        self.membership.iter().max().map_or(0, |m| m + 1)
    }

    pub fn community_of(&self, node: &str) -> Option<usize> {
        self.nodes
            .binary_search_by(|n| n.as_str().cmp(node))
            .ok()
            .map(|i| self.membership[i])
    }

    /// `(node, community)` in node order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, usize)> + '_ {
        self.nodes
            .iter()
            .map(String::as_str)
            .zip(self.membership.iter().copied())
    }

    pub fn nodes(&self) -> &[String] {
        &self.nodes
    }

    pub(crate) fn membership(&self) -> &[usize] {
        &self.membership
    }

    /// Member lists indexed by community id, each sorted.
    pub fn communities(&self) -> Vec<Vec<String>> {
        let mut out = vec![Vec::new(); self.num_communities()];
        for (node, c) in self.iter() {
            out[c].push(node.to_owned());
        }
        out
    }

    pub fn sizes(&self) -> Vec<usize> {
        let mut out = vec![0; self.num_communities()];
        for &c in &self.membership {
            out[c] += 1;
        }
        out
    }

    /// Checks that the partition covers exactly the nodes of `g`.
    pub fn check_covers(&self, g: &UndirectedGraph) -> Result<()> {
        let same = self.nodes.len() == g.node_count() && self.nodes.iter().map(String::as_str).eq(g.nodes());
        if same {
            Ok(())
        } else {
            Err(Error::Domain(
                "partition does not cover exactly the graph's nodes".into(),
            ))
        }
    }

    /// Disjoint union with another partition over different nodes.
    pub(crate) fn union(&self, other: &Partition) -> Partition {
        let offset = self.num_communities();
        let mut labels: Vec<(String, usize)> = self.iter().map(|(n, c)| (n.to_owned(), c)).collect();
        labels.extend(other.iter().map(|(n, c)| (n.to_owned(), c + offset)));
        Partition::from_labels(labels).expect("disjoint node sets")
    }
}

/// The two community detection algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Leiden,
    Infomap,
}

impl Algorithm {
    pub const ALL: [Algorithm; 2] = [Algorithm::Leiden, Algorithm::Infomap];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Leiden => "leiden",
            Algorithm::Infomap => "infomap",
        }
    }

    /// Runs the algorithm.
    pub fn detect(self, g: &UndirectedGraph, params: &CdParams) -> Result<Partition> {
        match self {
            Algorithm::Leiden => leiden(g, params),
            Algorithm::Infomap => infomap(g, params),
        }
    }

    /// The algorithm's own objective: modularity for Leiden, codelength in
    /// bits for Infomap (computed on non-isolated nodes only).
    pub fn quality(self, g: &UndirectedGraph, p: &Partition, resolution: f64) -> Result<f64> {
        match self {
            Algorithm::Leiden => quality::modularity_with_resolution(g, p, resolution),
            Algorithm::Infomap => {
                let isolated: BTreeSet<String> = g.isolated_nodes().into_iter().collect();
                let keep: Vec<&str> = g.nodes().filter(|n| !isolated.contains(*n)).collect();
                let sub = g.induced(keep.iter().copied());
                let sub_p = Partition::from_labels(
                    p.iter()
                        .filter(|(n, _)| !isolated.contains(*n))
                        .map(|(n, c)| (n.to_owned(), c)),
                )?;
                map_equation(&sub, &sub_p)
            }
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "leiden" => Ok(Algorithm::Leiden),
            "infomap" => Ok(Algorithm::Infomap),
            other => Err(Error::Config(format!("unknown algorithm '{other}'"))),
        }
    }
}

/// Parameters shared by both algorithms.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CdParams {
    pub seed: u64,
    /// Leiden resolution; ignored by Infomap.
    pub resolution: f64,
    /// Leiden: maximum number of full iterations. Infomap: maximum local
    /// moving sweeps per aggregation level.
    pub max_sweeps: usize,
    /// A pass whose total quality gain is at most this value counts as converged.
    pub tolerance: f64,
}

impl Default for CdParams {
    fn default() -> Self {
        CdParams {
            seed: 42,
            resolution: 1.0,
            max_sweeps: 100,
            tolerance: 1e-9,
        }
    }
}

impl CdParams {
    pub fn with_seed(seed: u64) -> Self {
        CdParams {
            seed,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.resolution.is_finite() && self.resolution > 0.0) {
            return Err(Error::Config(format!(
                "resolution must be a positive number, got {}",
                self.resolution
            )));
        }
        if self.max_sweeps == 0 {
            return Err(Error::Config("max_sweeps must be at least 1".into()));
        }
        if !(self.tolerance.is_finite() && self.tolerance >= 0.0) {
            return Err(Error::Config(format!(
                "tolerance must be non-negative, got {}",
                self.tolerance
            )));
        }
        Ok(())
    }
}

/// Metadata recorded in the header comment of a partition file.
#[derive(Debug, Clone, PartialEq)]
pub struct PartitionHeader {
    pub algorithm: String,
    pub seed: u64,
    pub resolution: f64,
    pub quality: Option<f64>,
}

pub fn write_partition_to<W: Write>(p: &Partition, header: &PartitionHeader, mut out: W) -> std::io::Result<()> {
    let quality = header.quality.map_or_else(|| "undefined".to_owned(), |q| q.to_string());
    writeln!(
        out,
        "# algorithm={} seed={} resolution={} quality={}",
        header.algorithm, header.seed, header.resolution, quality
    )?;
    for (node, c) in p.iter() {
        writeln!(out, "{node}\t{c}")?;
    }
    Ok(())
}

pub fn write_partition(p: &Partition, header: &PartitionHeader, path: &Path) -> Result<()> {
    let mut buf = Vec::new();
    write_partition_to(p, header, &mut buf).map_err(|e| Error::io(path, e))?;
    fs::write(path, buf).map_err(|e| Error::io(path, e))
}

/// Parses a partition file. The header is optional; community ids are
/// renumbered canonically.
pub fn parse_partition(text: &str, context: &str) -> Result<(Partition, Option<PartitionHeader>)> {
    let mut header = None;
    let mut labels = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        if let Some(comment) = line.strip_prefix('#') {
            if header.is_none() && comment.contains("algorithm=") {
                header = Some(parse_header(comment, context, lineno)?);
            }
            continue;
        }
        if line.trim().is_empty() {
            continue;
        }
        let (node, id) = line
            .split_once('\t')
            .ok_or_else(|| Error::parse(context, lineno, "expected node<TAB>community_id"))?;
        let id: usize = id
            .trim()
            .parse()
            .map_err(|_| Error::parse(context, lineno, format!("invalid community id '{id}'")))?;
        labels.push((node.to_owned(), id));
    }
    let p = Partition::from_labels(labels).map_err(|e| Error::parse(context, 0, e.to_string()))?;
    Ok((p, header))
}

fn parse_header(comment: &str, context: &str, line: usize) -> Result<PartitionHeader> {
    let mut fields = BTreeMap::new();
    for kv in comment.split_whitespace() {
        if let Some((k, v)) = kv.split_once('=') {
            fields.insert(k, v);
        }
    }
    let get = |k: &str| {
        fields
            .get(k)
            .copied()
            .ok_or_else(|| Error::parse(context, line, format!("header lacks '{k}'")))
    };
    let bad = |k: &str| Error::parse(context, line, format!("invalid header value for '{k}'"));
    Ok(PartitionHeader {
        algorithm: get("algorithm")?.to_owned(),
        seed: get("seed")?.parse().map_err(|_| bad("seed"))?,
        resolution: get("resolution")?.parse().map_err(|_| bad("resolution"))?,
        quality: match get("quality")? {
            "undefined" => None,
            q => Some(q.parse().map_err(|_| bad("quality"))?),
        },
    })
}

pub fn read_partition(path: &Path) -> Result<(Partition, Option<PartitionHeader>)> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_partition(&text, &path.display().to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_are_canonicalized() {
        let p = Partition::from_labels(vec![("c".to_owned(), 9), ("a".to_owned(), 5), ("b".to_owned(), 9)]).unwrap();
        assert_eq!(p.community_of("a"), Some(0));
        assert_eq!(p.community_of("b"), Some(1));
        assert_eq!(p.community_of("c"), Some(1));
        assert_eq!(p.num_communities(), 2);
        assert_eq!(p.sizes(), vec![1, 2]);
    }

    #[test]
    fn duplicate_node_rejected() {
        assert!(Partition::from_labels(vec![("a".to_owned(), 0), ("a".to_owned(), 1)]).is_err());
    }

    #[test]
    fn partition_file_roundtrip() {
        let p = Partition::from_labels(vec![
            ("x.A".to_owned(), 0),
            ("x.B".to_owned(), 1),
            ("x.C".to_owned(), 0),
        ])
        .unwrap();
        let header = PartitionHeader {
            algorithm: "leiden".into(),
            seed: 7,
            resolution: 1.0,
            quality: Some(0.125),
        };
        let mut buf = Vec::new();
        write_partition_to(&p, &header, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("# algorithm=leiden seed=7 resolution=1 quality=0.125\n"));
        let (q, h) = parse_partition(&text, "mem").unwrap();
        assert_eq!(q, p);
        assert_eq!(h, Some(header));
    }

    #[test]
    fn params_validation() {
        assert!(CdParams::default().validate().is_ok());
        let bad = CdParams {
            resolution: 0.0,
            ..CdParams::default()
        };
        assert!(bad.validate().is_err());
        let bad = CdParams {
            max_sweeps: 0,
            ..CdParams::default()
        };
        assert!(bad.validate().is_err());
    }
}
