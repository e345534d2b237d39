use super::graph::WeightedGraph;
use super::Partition;
use crate::depgraph::UndirectedGraph;
use crate::error::{Error, Result};

/// `p * log2(p)`, with `0 log 0 = 0`.
#[inline]
pub(crate) fn plogp(p: f64) -> f64 {
    if p > 0.0 {
        p * p.log2()
    } else {
        0.0
    }
}

/// Modularity `Q = sum_c [ e_c / m - resolution * (d_c / 2m)^2 ]`.
pub(crate) fn modularity_indexed(g: &WeightedGraph, membership: &[usize], resolution: f64) -> f64 {
    let k = membership.iter().max().map_or(0, |m| m + 1);
    let mut intra = vec![0.0; k];
    let mut degree = vec![0.0; k];
    for v in 0..g.len() {
        let c = membership[v];
        degree[c] += g.strength[v];
        intra[c] += g.self_weight[v];
        for &(u, w) in &g.adj[v] {
            if u > v && membership[u] == c {
                intra[c] += w;
            }
        }
    }
    let m = g.total_weight;
    intra
        .iter()
        .zip(&degree)
        .map(|(e, d)| e / m - resolution * (d / (2.0 * m)).powi(2))
        .sum()
}

/// Per-module exit and total flow of an undirected random walk.
pub(crate) fn module_flows(g: &WeightedGraph, membership: &[usize], k: usize) -> (Vec<f64>, Vec<f64>) {
    let two_m = 2.0 * g.total_weight;
    let mut exit = vec![0.0; k];
    let mut flow = vec![0.0; k];
    for v in 0..g.len() {
        let c = membership[v];
        flow[c] += g.strength[v] / two_m;
        for &(u, w) in &g.adj[v] {
            if membership[u] != c {
                exit[c] += w / two_m;
            }
        }
    }
    (exit, flow)
}

/// Two-level map equation in bits, for a leaf-level graph.
pub(crate) fn codelength_indexed(g: &WeightedGraph, membership: &[usize]) -> f64 {
    let k = membership.iter().max().map_or(0, |m| m + 1);
    let (exit, flow) = module_flows(g, membership, k);
    let two_m = 2.0 * g.total_weight;
    let total_exit: f64 = exit.iter().sum();
    let node_term: f64 = g.strength.iter().map(|s| plogp(s / two_m)).sum();
    let exit_term: f64 = exit.iter().map(|&q| plogp(q)).sum();
    let module_term: f64 = exit.iter().zip(&flow).map(|(q, p)| plogp(q + p)).sum();
    (plogp(total_exit) - 2.0 * exit_term - node_term + module_term).max(0.0)
}

fn indexed_membership(g: &UndirectedGraph, p: &Partition) -> Result<(WeightedGraph, Vec<usize>)> {
    p.check_covers(g)?;
    let (wg, _names) = WeightedGraph::from_undirected(g);
    Ok((wg, p.membership().to_vec()))
}

/// Newman-Girvan modularity of `p` on `g` (resolution 1).
pub fn modularity(g: &UndirectedGraph, p: &Partition) -> Result<f64> {
    modularity_with_resolution(g, p, 1.0)
}

pub(crate) fn modularity_with_resolution(g: &UndirectedGraph, p: &Partition, resolution: f64) -> Result<f64> {
    if g.total_weight() == 0 {
        return Err(Error::UndefinedQuality(
            "modularity needs a graph with positive total edge weight".into(),
        ));
    }
    let (wg, membership) = indexed_membership(g, p)?;
    Ok(modularity_indexed(&wg, &membership, resolution))
}

/// Two-level map equation `L(M)` in bits, with node visit rates proportional
/// to weighted degree.
pub fn map_equation(g: &UndirectedGraph, p: &Partition) -> Result<f64> {
    let isolated = g.isolated_nodes();
    if !isolated.is_empty() {
        return Err(Error::Domain(format!(
            "map equation undefined for isolated nodes ({}); strip them first",
            isolated.join(", ")
        )));
    }
    if g.node_count() == 0 {
        return Err(Error::Domain("map equation of an empty graph".into()));
    }
    let (wg, membership) = indexed_membership(g, p)?;
    Ok(codelength_indexed(&wg, &membership))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(edges: &[(&str, &str)]) -> UndirectedGraph {
        let mut g = UndirectedGraph::new();
        for (a, b) in edges {
            g.add_edge(a, b, 1);
        }
        g
    }

    fn part(groups: &[&[&str]]) -> Partition {
        Partition::from_labels(
            groups
                .iter()
                .enumerate()
                .flat_map(|(i, grp)| grp.iter().map(move |n| (n.to_string(), i))),
        )
        .unwrap()
    }

    fn two_triangles() -> UndirectedGraph {
        graph(&[("a", "b"), ("b", "c"), ("a", "c"), ("d", "e"), ("e", "f"), ("d", "f")])
    }

    #[test]
    fn modularity_single_community_is_zero() {
        let g = two_triangles();
        let q = modularity(&g, &Partition::single_community(g.nodes())).unwrap();
        assert!(q.abs() < 1e-12);
    }

    #[test]
    fn modularity_two_triangles_is_half() {
        let q = modularity(&two_triangles(), &part(&[&["a", "b", "c"], &["d", "e", "f"]])).unwrap();
        assert!((q - 0.5).abs() < 1e-12);
    }

    #[test]
    fn modularity_triangle_singletons() {
        let g = graph(&[("a", "b"), ("b", "c"), ("a", "c")]);
        let q = modularity(&g, &Partition::singletons(g.nodes())).unwrap();
        assert!((q + 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn modularity_errors() {
        let mut g = UndirectedGraph::new();
        g.add_node("a");
        assert!(matches!(
            modularity(&g, &Partition::singletons(g.nodes())),
            Err(Error::UndefinedQuality(_))
        ));
        let g = two_triangles();
        assert!(matches!(modularity(&g, &part(&[&["a", "b"]])), Err(Error::Domain(_))));
    }

    #[test]
    fn map_equation_four_cycle_one_module_is_two_bits() {
        let g = graph(&[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]);
        let l = map_equation(&g, &Partition::single_community(g.nodes())).unwrap();
        assert!((l - 2.0).abs() < 1e-12);
        let singles = map_equation(&g, &Partition::singletons(g.nodes())).unwrap();
        assert!(singles > l);
    }

    #[test]
    fn map_equation_two_triangles() {
        let l = map_equation(&two_triangles(), &part(&[&["a", "b", "c"], &["d", "e", "f"]])).unwrap();
        assert!((l - 3f64.log2()).abs() < 1e-12);
    }

    #[test]
    fn map_equation_rejects_isolated_nodes() {
        let mut g = graph(&[("a", "b")]);
        g.add_node("z");
        let err = map_equation(&g, &Partition::singletons(g.nodes())).unwrap_err();
        assert!(err.to_string().contains("strip"));
    }
}
