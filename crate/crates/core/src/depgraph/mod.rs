//! Class-level dependency graphs.
//!
//! A [`DependencyGraph`] is directed: an edge `A -> B` with weight `w` means the
//! file of class `A` refers to class `B` `w` times. Community detection and the
//! correlation metric work on the [`UndirectedGraph`] produced by [`symmetrize`].

mod edgelist;
mod java;

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

pub use edgelist::{parse_edge_list, read_edge_list, write_edge_list, write_edge_list_to};
pub use java::{extract_dependencies, Diagnostic, Extraction, LanguageProfile, SourceUnit};

/// Directed, weighted class use graph of one project.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DependencyGraph {
    nodes: BTreeSet<String>,
    edges: BTreeMap<(String, String), u64>,
}

impl DependencyGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from explicit parts, rejecting anything that violates the
    /// graph invariants instead of repairing it.
    pub fn from_parts<N, E>(nodes: N, edges: E) -> Result<Self>
    where
        N: IntoIterator<Item = String>,
        E: IntoIterator<Item = (String, String, u64)>,
    {
        let mut g = DependencyGraph {
            nodes: nodes.into_iter().collect(),
            edges: BTreeMap::new(),
        };
        for (s, t, w) in edges {
            if g.edges.contains_key(&(s.clone(), t.clone())) {
                return Err(Error::InvalidGraph(format!("duplicate edge {s} -> {t}")));
            }
            g.nodes.insert(s.clone());
            g.nodes.insert(t.clone());
            g.edges.insert((s, t), w);
        }
        g.validate()?;
        Ok(g)
    }

    pub fn add_node(&mut self, name: impl Into<String>) {
        self.nodes.insert(name.into());
    }

    /// Adds `count` uses of `target` by `source`, creating both nodes.
    /// Self-references and zero counts are dropped.
    pub fn add_uses(&mut self, source: &str, target: &str, count: u64) {
        self.nodes.insert(source.to_owned());
        self.nodes.insert(target.to_owned());
        if count == 0 || source == target {
            return;
        }
        *self.edges.entry((source.to_owned(), target.to_owned())).or_insert(0) += count;
    }

    pub fn nodes(&self) -> impl Iterator<Item = &str> + '_ {
        self.nodes.iter().map(String::as_str)
    }

    pub fn contains_node(&self, name: &str) -> bool {
        self.nodes.contains(name)
    }

    /// Edges as `(source, target, weight)`, sorted by `(source, target)`.
    pub fn edges(&self) -> impl Iterator<Item = (&str, &str, u64)> + '_ {
        self.edges.iter().map(|((s, t), w)| (s.as_str(), t.as_str(), *w))
    }

    pub fn weight(&self, source: &str, target: &str) -> Option<u64> {
        self.edges.get(&(source.to_owned(), target.to_owned())).copied()
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn total_weight(&self) -> u64 {
        self.edges.values().sum()
    }

    /// Checks every structural invariant: no self-loops, endpoints are nodes,
    /// weights are at least one.
    pub fn validate(&self) -> Result<()> {
        for node in &self.nodes {
            if node.is_empty() {
                return Err(Error::InvalidGraph("empty node name".into()));
            }
        }
        for ((s, t), w) in &self.edges {
            if s == t {
                return Err(Error::InvalidGraph(format!("self-loop on {s}")));
            }
            if !self.nodes.contains(s) || !self.nodes.contains(t) {
                return Err(Error::InvalidGraph(format!(
                    "edge {s} -> {t} has an endpoint outside the node set"
                )));
            }
            if *w == 0 {
                return Err(Error::InvalidGraph(format!("edge {s} -> {t} has weight 0")));
            }
        }
        Ok(())
    }
}

/// Undirected weighted graph; each unordered pair is stored once with the
/// lexicographically smaller name first.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct UndirectedGraph {
    nodes: BTreeSet<String>,
    edges: BTreeMap<(String, String), u64>,
}

fn ordered_pair(a: &str, b: &str) -> (String, String) {
    if a <= b {
        (a.to_owned(), b.to_owned())
    } else {
        (b.to_owned(), a.to_owned())
    }
}

impl UndirectedGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_node(&mut self, name: impl Into<String>) {
        self.nodes.insert(name.into());
    }

    /// Adds `weight` to the pair `{a, b}`. Self-loops and zero weights are dropped.
    pub fn add_edge(&mut self, a: &str, b: &str, weight: u64) {
        self.nodes.insert(a.to_owned());
        self.nodes.insert(b.to_owned());
        if a == b || weight == 0 {
            return;
        }
        *self.edges.entry(ordered_pair(a, b)).or_insert(0) += weight;
    }

    pub fn nodes(&self) -> impl Iterator<Item = &str> + '_ {
        self.nodes.iter().map(String::as_str)
    }

    pub fn contains_node(&self, name: &str) -> bool {
        self.nodes.contains(name)
    }

    pub fn edges(&self) -> impl Iterator<Item = (&str, &str, u64)> + '_ {
        self.edges.iter().map(|((a, b), w)| (a.as_str(), b.as_str(), *w))
    }

    pub fn weight(&self, a: &str, b: &str) -> Option<u64> {
        self.edges.get(&ordered_pair(a, b)).copied()
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn total_weight(&self) -> u64 {
        self.edges.values().sum()
    }

    /// Weighted degree of every node.
    pub fn strengths(&self) -> BTreeMap<&str, u64> {
        let mut out: BTreeMap<&str, u64> = self.nodes.iter().map(|n| (n.as_str(), 0)).collect();
        for ((a, b), w) in &self.edges {
            *out.get_mut(a.as_str()).expect("endpoint") += w;
            *out.get_mut(b.as_str()).expect("endpoint") += w;
        }
        out
    }

    /// Nodes without incident edges, sorted.
    pub fn isolated_nodes(&self) -> Vec<String> {
        self.strengths()
            .into_iter()
            .filter(|(_, s)| *s == 0)
            .map(|(n, _)| n.to_owned())
            .collect()
    }

    /// Same topology with every weight replaced by one.
    pub fn unweighted(&self) -> UndirectedGraph {
        UndirectedGraph {
            nodes: self.nodes.clone(),
            edges: self.edges.keys().map(|k| (k.clone(), 1)).collect(),
        }
    }

    /// Subgraph induced by the given node set.
    pub fn induced<'a, I>(&self, keep: I) -> UndirectedGraph
    where
        I: IntoIterator<Item = &'a str>,
    {
        let keep: BTreeSet<String> = keep
            .into_iter()
            .filter(|n| self.nodes.contains(*n))
            .map(str::to_owned)
            .collect();
        let edges = self
            .edges
            .iter()
            .filter(|((a, b), _)| keep.contains(a) && keep.contains(b))
            .map(|(k, w)| (k.clone(), *w))
            .collect();
        UndirectedGraph { nodes: keep, edges }
    }

    pub fn validate(&self) -> Result<()> {
        for ((a, b), w) in &self.edges {
            if a >= b {
                return Err(Error::InvalidGraph(format!("edge key ({a}, {b}) not ordered")));
            }
            if !self.nodes.contains(a) || !self.nodes.contains(b) {
                return Err(Error::InvalidGraph(format!(
                    "edge {{{a}, {b}}} has an endpoint outside the node set"
                )));
            }
            if *w == 0 {
                return Err(Error::InvalidGraph(format!("edge {{{a}, {b}}} has weight 0")));
            }
        }
        Ok(())
    }
}

/// Collapses direction: the weight of `{A, B}` is `w(A->B) + w(B->A)`.
pub fn symmetrize(g: &DependencyGraph) -> UndirectedGraph {
    let mut u = UndirectedGraph::new();
    for n in g.nodes() {
        u.add_node(n);
    }
    for (s, t, w) in g.edges() {
        u.add_edge(s, t, w);
    }
    u
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn symmetrize_sums_reciprocal_weights() {
        let mut g = DependencyGraph::new();
        g.add_uses("A", "B", 2);
        g.add_uses("B", "A", 1);
        let u = symmetrize(&g);
        assert_eq!(u.edge_count(), 1);
        assert_eq!(u.weight("A", "B"), Some(3));
        assert_eq!(u.weight("B", "A"), Some(3));
    }

    #[test]
    fn symmetrize_one_direction() {
        let mut g = DependencyGraph::new();
        g.add_uses("A", "B", 2);
        let u = symmetrize(&g);
        assert_eq!(u.weight("A", "B"), Some(2));
    }

    #[test]
    fn symmetrize_keeps_nodes_of_edgeless_graph() {
        let mut g = DependencyGraph::new();
        g.add_node("A");
        g.add_node("B");
        let u = symmetrize(&g);
        assert_eq!(u.node_count(), 2);
        assert_eq!(u.edge_count(), 0);
        assert_eq!(u.isolated_nodes(), vec!["A".to_owned(), "B".to_owned()]);
    }

    #[test]
    fn self_uses_are_dropped() {
        let mut g = DependencyGraph::new();
        g.add_uses("A", "A", 5);
        assert_eq!(g.node_count(), 1);
        assert_eq!(g.edge_count(), 0);
        g.validate().unwrap();
    }

    #[test]
    fn from_parts_rejects_invalid_graphs() {
        let self_loop = DependencyGraph::from_parts(vec![], vec![("A".into(), "A".into(), 1)]);
        assert!(self_loop.is_err());
        let zero = DependencyGraph::from_parts(vec![], vec![("A".into(), "B".into(), 0)]);
        assert!(zero.is_err());
        let dup = DependencyGraph::from_parts(vec![], vec![("A".into(), "B".into(), 1), ("A".into(), "B".into(), 2)]);
        assert!(dup.is_err());
    }

    #[test]
    fn unweighted_sets_all_weights_to_one() {
        let mut u = UndirectedGraph::new();
        u.add_edge("A", "B", 4);
        u.add_edge("B", "C", 2);
        let uw = u.unweighted();
        assert_eq!(uw.total_weight(), 2);
        assert_eq!(uw.node_count(), 3);
    }

    proptest! {
        #[test]
        fn symmetrize_preserves_total_weight(
            edges in proptest::collection::vec((0u8..6, 0u8..6, 1u64..20), 0..30)
        ) {
            let mut g = DependencyGraph::new();
            for (s, t, w) in edges {
                g.add_uses(&format!("n{s}"), &format!("n{t}"), w);
            }
            g.validate().unwrap();
            let u = symmetrize(&g);
            u.validate().unwrap();
            prop_assert_eq!(u.total_weight(), g.total_weight());
            prop_assert_eq!(u.node_count(), g.node_count());
        }
    }
}
