//! Indexed weighted graph used by the optimizers. Node `i` is the `i`-th
//! name in sorted order, so results never depend on hash iteration order.

use std::collections::BTreeMap;

use crate::depgraph::UndirectedGraph;

#[derive(Debug, Clone)]
pub(crate) struct WeightedGraph {
    /// Neighbours of each node, excluding self-loops, sorted by index.
    pub adj: Vec<Vec<(usize, f64)>>,
    /// Internal weight carried by aggregated nodes.
    pub self_weight: Vec<f64>,
    /// Weighted degree, counting self-loops twice.
    pub strength: Vec<f64>,
    /// Total edge weight `m`, self-loops counted once.
    pub total_weight: f64,
}

impl WeightedGraph {
    /// Builds the indexed form of `g` together with the sorted node names.
    pub fn from_undirected(g: &UndirectedGraph) -> (Self, Vec<String>) {
        let names: Vec<String> = g.nodes().map(str::to_owned).collect();
        let index: BTreeMap<&str, usize> = names.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
        let mut edges = Vec::with_capacity(g.edge_count());
        for (a, b, w) in g.edges() {
            edges.push((index[a], index[b], w as f64));
        }
        (Self::from_edges(names.len(), &edges, vec![0.0; names.len()]), names)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize, f64)], self_weight: Vec<f64>) -> Self {
        let mut acc: Vec<BTreeMap<usize, f64>> = vec![BTreeMap::new(); n];
        let mut self_weight = self_weight;
        for &(a, b, w) in edges {
            if a == b {
                self_weight[a] += w;
            } else {
                *acc[a].entry(b).or_insert(0.0) += w;
                *acc[b].entry(a).or_insert(0.0) += w;
            }
        }
        let adj: Vec<Vec<(usize, f64)>> = acc.into_iter().map(|m| m.into_iter().collect()).collect();
        let strength: Vec<f64> = adj
            .iter()
            .zip(&self_weight)
            .map(|(nbrs, s)| nbrs.iter().map(|(_, w)| w).sum::<f64>() + 2.0 * s)
            .collect();
        let total_weight = strength.iter().sum::<f64>() / 2.0;
        WeightedGraph {
            adj,
            self_weight,
            strength,
            total_weight,
        }
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    /// Collapses each community of `membership` (ids `0..k`) into one node.
    pub fn aggregate(&self, membership: &[usize], k: usize) -> WeightedGraph {
        let mut self_weight = vec![0.0; k];
        let mut edges = Vec::new();
        for (v, nbrs) in self.adj.iter().enumerate() {
            let cv = membership[v];
            self_weight[cv] += self.self_weight[v];
            for &(u, w) in nbrs {
                // each undirected edge once
                if u > v {
                    edges.push((cv, membership[u], w));
                }
            }
        }
        WeightedGraph::from_edges(k, &edges, self_weight)
    }

    /// Connected-component label of each node, labelled in order of first node.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let mut label = vec![usize::MAX; self.len()];
        let mut next = 0;
        for start in 0..self.len() {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = next;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &(u, _) in &self.adj[v] {
                    if label[u] == usize::MAX {
                        label[u] = next;
                        stack.push(u);
                    }
                }
            }
            next += 1;
        }
        (label, next)
    }
}

/// Renumbers labels to `0..k` in order of first appearance.
pub(crate) fn renumber(labels: &[usize]) -> (Vec<usize>, usize) {
    let mut map = BTreeMap::new();
    let out = labels
        .iter()
        .map(|l| {
            let next = map.len();
            *map.entry(*l).or_insert(next)
        })
        .collect();
    (out, map.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aggregate_preserves_strength_and_total() {
        let g = WeightedGraph::from_edges(4, &[(0, 1, 1.0), (1, 2, 2.0), (2, 3, 1.0), (0, 3, 3.0)], vec![0.0; 4]);
        let agg = g.aggregate(&[0, 0, 1, 1], 2);
        assert_eq!(agg.total_weight, g.total_weight);
        assert_eq!(agg.self_weight, vec![1.0, 1.0]);
        assert_eq!(agg.adj[0], vec![(1, 5.0)]);
        assert_eq!(agg.strength.iter().sum::<f64>(), g.strength.iter().sum::<f64>());
    }

    #[test]
    fn components_and_renumber() {
        let g = WeightedGraph::from_edges(5, &[(0, 2, 1.0), (3, 4, 1.0)], vec![0.0; 5]);
        let (labels, k) = g.components();
        assert_eq!(k, 3);
        assert_eq!(labels, vec![0, 1, 0, 2, 2]);
        assert_eq!(renumber(&[7, 3, 7, 1]), (vec![0, 1, 0, 2], 3));
    }
}
