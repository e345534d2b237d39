//! Leiden algorithm for modularity.
//!
//! Each iteration runs fast local moving, refines every community by
//! randomized merging of well-connected singletons, aggregates the graph on
//! the refined partition (seeding the aggregate with the unrefined one) and
//! repeats on the aggregate until local moving leaves every node alone.
//! Iterations continue from the previous partition until one gains no more
//! than `tolerance` modularity.

use std::collections::{BTreeSet, VecDeque};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::graph::{renumber, WeightedGraph};
use super::quality::modularity_indexed;
use super::{CdParams, Partition};
use crate::depgraph::UndirectedGraph;
use crate::error::{Error, Result};

/// Temperature of the randomized refinement merge, in edge-weight units.
const RANDOMNESS: f64 = 0.01;
/// Minimum gain (edge-weight units) for a local move.
const MOVE_EPS: f64 = 1e-10;

/// Partitions `g` by maximizing modularity at `params.resolution`.
///
/// Isolated nodes end up as singleton communities. Every returned community
/// induces a connected subgraph.
pub fn leiden(g: &UndirectedGraph, params: &CdParams) -> Result<Partition> {
    params.validate()?;
    if g.node_count() == 0 {
        return Err(Error::Domain("cannot partition an empty graph".into()));
    }
    let (wg, names) = WeightedGraph::from_undirected(g);
    if wg.total_weight == 0.0 {
        return Ok(Partition::singletons(names.iter().map(String::as_str)));
    }
    let membership = run(&wg, params);
    Ok(Partition::from_sorted(names, &membership))
}

pub(crate) fn run(g: &WeightedGraph, params: &CdParams) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let gamma = params.resolution;
    let mut current: Vec<usize> = (0..g.len()).collect();
    let mut quality = modularity_indexed(g, &current, gamma);
    for _ in 0..params.max_sweeps {
        let next = iterate(g, &current, gamma, &mut rng);
        let next_quality = modularity_indexed(g, &next, gamma);
        if next_quality - quality <= params.tolerance {
            break;
        }
        current = next;
        quality = next_quality;
    }
    current
}

fn iterate(g: &WeightedGraph, init: &[usize], gamma: f64, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut level = g.clone();
    let (mut membership, _) = renumber(init);
    let mut leaf_to_level: Vec<usize> = (0..g.len()).collect();
    loop {
        move_nodes_fast(&level, &mut membership, gamma, rng);
        let (relabelled, k) = renumber(&membership);
        membership = relabelled;
        if k == level.len() {
            break;
        }
        let (refined, kr) = refine(&level, &membership, k, gamma, rng);
        let (aggregate_by, size, next_membership) = if kr < level.len() {
            let mut parent = vec![0; kr];
            for (v, &r) in refined.iter().enumerate() {
                parent[r] = membership[v];
            }
            (refined, kr, parent)
        } else {
            // refinement merged nothing; fall back to the unrefined partition
            (membership.clone(), k, (0..k).collect())
        };
        level = level.aggregate(&aggregate_by, size);
        for l in leaf_to_level.iter_mut() {
            *l = aggregate_by[*l];
        }
        membership = next_membership;
    }
    leaf_to_level.iter().map(|&l| membership[l]).collect()
}

/// Queue-based local moving: a node is revisited only when a neighbour left
/// for a community other than its own.
fn move_nodes_fast(g: &WeightedGraph, membership: &mut [usize], gamma: f64, rng: &mut ChaCha8Rng) {
    let n = g.len();
    let scale = gamma / (2.0 * g.total_weight);
    let mut weight = vec![0.0; n];
    let mut size = vec![0usize; n];
    for v in 0..n {
        weight[membership[v]] += g.strength[v];
        size[membership[v]] += 1;
    }
    let mut unused: BTreeSet<usize> = (0..n).filter(|&c| size[c] == 0).collect();

    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut queue: VecDeque<usize> = order.into();
    let mut queued = vec![true; n];

    let mut to_cluster = vec![0.0; n];
    let mut touched: Vec<usize> = Vec::new();

    while let Some(v) = queue.pop_front() {
        queued[v] = false;
        let current = membership[v];
        let k_v = g.strength[v];
        weight[current] -= k_v;
        size[current] -= 1;
        if size[current] == 0 {
            unused.insert(current);
        }

        for &(u, w) in &g.adj[v] {
            let c = membership[u];
            if to_cluster[c] == 0.0 {
                touched.push(c);
            }
            to_cluster[c] += w;
        }
        let mut candidates = touched.clone();
        if let Some(&empty) = unused.iter().next() {
            candidates.push(empty);
        }
        candidates.sort_unstable();
        candidates.dedup();

        let mut best = current;
        let mut best_gain = to_cluster[current] - k_v * weight[current] * scale;
        for &c in &candidates {
            if c == current {
                continue;
            }
            let gain = to_cluster[c] - k_v * weight[c] * scale;
            if gain > best_gain + MOVE_EPS {
                best = c;
                best_gain = gain;
            }
        }

        membership[v] = best;
        weight[best] += k_v;
        size[best] += 1;
        unused.remove(&best);

        if best != current {
            for &(u, _) in &g.adj[v] {
                if !queued[u] && membership[u] != best {
                    queued[u] = true;
                    queue.push_back(u);
                }
            }
        }
        for c in touched.drain(..) {
            to_cluster[c] = 0.0;
        }
    }
}

/// Refines each community of `membership` into well-connected
/// subcommunities. Returns the renumbered refined labels and their count.
fn refine(g: &WeightedGraph, membership: &[usize], k: usize, gamma: f64, rng: &mut ChaCha8Rng) -> (Vec<usize>, usize) {
    let n = g.len();
    let scale = gamma / (2.0 * g.total_weight);

    let mut community_weight = vec![0.0; k];
    for v in 0..n {
        community_weight[membership[v]] += g.strength[v];
    }
    let mut refined: Vec<usize> = (0..n).collect();
    let mut cluster_weight = g.strength.clone();
    let mut merged_into = vec![false; n];
    // weight from each node to the rest of its community
    let internal_degree: Vec<f64> = (0..n)
        .map(|v| {
            g.adj[v]
                .iter()
                .filter(|(u, _)| membership[*u] == membership[v])
                .map(|(_, w)| w)
                .sum()
        })
        .collect();
    // weight from each refined cluster to the rest of its community
    let mut external = internal_degree.clone();

    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);

    let mut to_cluster = vec![0.0; n];
    let mut touched: Vec<usize> = Vec::new();

    for v in order {
        let own = refined[v];
        if merged_into[own] {
            continue;
        }
        let c = membership[v];
        let k_v = g.strength[v];
        let total = community_weight[c];
        if external[own] < k_v * (total - k_v) * scale {
            continue;
        }

        cluster_weight[own] = 0.0;
        external[own] = 0.0;
        for &(u, w) in &g.adj[v] {
            if membership[u] != c {
                continue;
            }
            let r = refined[u];
            if to_cluster[r] == 0.0 {
                touched.push(r);
            }
            to_cluster[r] += w;
        }

        let mut candidates = touched.clone();
        candidates.push(own);
        candidates.sort_unstable();
        candidates.dedup();

        let mut options: Vec<(usize, f64)> = Vec::with_capacity(candidates.len());
        for &r in &candidates {
            let w_r = cluster_weight[r];
            if external[r] >= w_r * (total - w_r) * scale {
                let gain = to_cluster[r] - k_v * w_r * scale;
                if gain >= 0.0 {
                    options.push((r, gain));
                }
            }
        }
        let chosen = sample(&options, rng).unwrap_or(own);

        cluster_weight[chosen] += k_v;
        external[chosen] += internal_degree[v] - 2.0 * to_cluster[chosen];
        refined[v] = chosen;
        if chosen != own {
            merged_into[chosen] = true;
        }
        for r in touched.drain(..) {
            to_cluster[r] = 0.0;
        }
    }
    renumber(&refined)
}

/// Draws an option with probability proportional to `exp(gain / RANDOMNESS)`.
fn sample(options: &[(usize, f64)], rng: &mut ChaCha8Rng) -> Option<usize> {
    let max = options.iter().map(|o| o.1).fold(f64::NEG_INFINITY, f64::max);
    if !max.is_finite() {
        return None;
    }
    let weights: Vec<f64> = options
        .iter()
        .map(|(_, gain)| ((gain - max) / RANDOMNESS).exp())
        .collect();
    let total: f64 = weights.iter().sum();
    let mut draw = rng.gen_range(0.0..total);
    for ((r, _), w) in options.iter().zip(&weights) {
        if draw < *w {
            return Some(*r);
        }
        draw -= w;
    }
    options.last().map(|o| o.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cliques_with_bridge() -> UndirectedGraph {
        let mut g = UndirectedGraph::new();
        for block in [["a0", "a1", "a2", "a3", "a4"], ["b0", "b1", "b2", "b3", "b4"]] {
            for i in 0..5 {
                for j in i + 1..5 {
                    g.add_edge(block[i], block[j], 1);
                }
            }
        }
        g.add_edge("a0", "b0", 1);
        g
    }

    #[test]
    fn two_cliques_are_recovered() {
        let p = leiden(&cliques_with_bridge(), &CdParams::default()).unwrap();
        assert_eq!(p.num_communities(), 2);
        assert_eq!(p.sizes(), vec![5, 5]);
        assert_ne!(p.community_of("a0"), p.community_of("b0"));
    }

    #[test]
    fn complete_graph_is_one_community() {
        let mut g = UndirectedGraph::new();
        let names = ["a", "b", "c", "d", "e"];
        for i in 0..5 {
            for j in i + 1..5 {
                g.add_edge(names[i], names[j], 1);
            }
        }
        let p = leiden(&g, &CdParams::default()).unwrap();
        assert_eq!(p.num_communities(), 1);
    }

    #[test]
    fn edgeless_graph_gives_singletons() {
        let mut g = UndirectedGraph::new();
        for n in ["a", "b", "c", "d", "e", "f"] {
            g.add_node(n);
        }
        let p = leiden(&g, &CdParams::default()).unwrap();
        assert_eq!(p.num_communities(), 6);
    }

    #[test]
    fn isolated_nodes_stay_alone() {
        let mut g = cliques_with_bridge();
        g.add_node("zz");
        let p = leiden(&g, &CdParams::default()).unwrap();
        assert_eq!(p.num_communities(), 3);
        let z = p.community_of("zz").unwrap();
        assert_eq!(p.sizes()[z], 1);
    }

    #[test]
    fn empty_graph_is_error() {
        assert!(leiden(&UndirectedGraph::new(), &CdParams::default()).is_err());
    }

    #[test]
    fn sampling_prefers_large_gains() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let picks: Vec<usize> = (0..50)
            .map(|_| sample(&[(0, 0.0), (1, 1.0)], &mut rng).unwrap())
            .collect();
        assert!(picks.iter().all(|&p| p == 1));
        assert_eq!(sample(&[], &mut rng), None);
    }
}
