//! Two-level Infomap: Louvain-style local moving and aggregation on the map
//! equation, with flow given by an undirected random walk (visit rate
//! proportional to weighted degree, no teleportation).
//!
//! Two starting points are optimized and the shorter codelength wins: all
//! singletons, and one module per connected component. From each start the
//! optimizer repeats move+aggregate passes from the current leaf partition
//! until a pass no longer shortens the codelength by more than `tolerance`.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::graph::{renumber, WeightedGraph};
use super::quality::{codelength_indexed, plogp};
use super::{CdParams, Partition};
use crate::depgraph::UndirectedGraph;
use crate::error::{Error, Result};

/// Minimum codelength reduction (bits) for a single move.
const MOVE_EPS: f64 = 1e-12;

/// Partitions `g` by minimizing the two-level map equation.
///
/// Isolated nodes carry no flow; they are stripped before optimization and
/// reported as singleton communities.
pub fn infomap(g: &UndirectedGraph, params: &CdParams) -> Result<Partition> {
    params.validate()?;
    if g.node_count() == 0 {
        return Err(Error::Domain("cannot partition an empty graph".into()));
    }
    let isolated = g.isolated_nodes();
    if isolated.len() == g.node_count() {
        return Err(Error::Domain(
            "every node is isolated; the map equation has no flow to encode".into(),
        ));
    }
    let isolated_set: BTreeSet<&str> = isolated.iter().map(String::as_str).collect();
    let core = g.induced(g.nodes().filter(|n| !isolated_set.contains(n)));
    let (wg, names) = WeightedGraph::from_undirected(&core);
    let membership = run(&wg, params);
    let p = Partition::from_sorted(names, &membership);
    if isolated.is_empty() {
        Ok(p)
    } else {
        Ok(p.union(&Partition::singletons(isolated.iter().map(String::as_str))))
    }
}

pub(crate) fn run(g: &WeightedGraph, params: &CdParams) -> Vec<usize> {
    let singletons: Vec<usize> = (0..g.len()).collect();
    let (components, _) = g.components();
    let mut best: Option<(Vec<usize>, f64)> = None;
    for (stream, start) in [singletons, components].into_iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
        rng.set_stream(stream as u64);
        let result = optimize_from(g, start, params, &mut rng);
        let length = codelength_indexed(g, &result);
        if best.as_ref().is_none_or(|(_, l)| length < *l - params.tolerance) {
            best = Some((result, length));
        }
    }
    best.expect("at least one start").0
}

fn optimize_from(g: &WeightedGraph, start: Vec<usize>, params: &CdParams, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut current = start;
    let mut length = codelength_indexed(g, &current);
    for _ in 0..params.max_sweeps {
        let next = move_and_aggregate(g, &current, params, rng);
        let next_length = codelength_indexed(g, &next);
        if length - next_length <= params.tolerance {
            break;
        }
        current = next;
        length = next_length;
    }
    current
}

fn move_and_aggregate(g: &WeightedGraph, init: &[usize], params: &CdParams, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut level = g.clone();
    let (mut membership, _) = renumber(init);
    let mut leaf_to_level: Vec<usize> = (0..g.len()).collect();
    loop {
        local_move(&level, &mut membership, params, rng);
        let (relabelled, k) = renumber(&membership);
        membership = relabelled;
        if k == level.len() {
            break;
        }
        level = level.aggregate(&membership, k);
        for l in leaf_to_level.iter_mut() {
            *l = membership[*l];
        }
        membership = (0..k).collect();
    }
    leaf_to_level.iter().map(|&l| membership[l]).collect()
}

/// Flow bookkeeping for the modules of one level.
struct ModuleFlows {
    exit: Vec<f64>,
    flow: Vec<f64>,
    size: Vec<usize>,
    total_exit: f64,
}

impl ModuleFlows {
    fn new(g: &WeightedGraph, membership: &[usize]) -> Self {
        let n = g.len();
        let two_m = 2.0 * g.total_weight;
        let mut exit = vec![0.0; n];
        let mut flow = vec![0.0; n];
        let mut size = vec![0; n];
        for v in 0..n {
            let c = membership[v];
            flow[c] += g.strength[v] / two_m;
            size[c] += 1;
            for &(u, w) in &g.adj[v] {
                if membership[u] != c {
                    exit[c] += w / two_m;
                }
            }
        }
        let total_exit = exit.iter().sum();
        ModuleFlows {
            exit,
            flow,
            size,
            total_exit,
        }
    }

    /// Module-dependent part of the codelength contributed by modules `a`, `b`.
    fn local_terms(total_exit: f64, qa: f64, pa: f64, qb: f64, pb: f64) -> f64 {
        plogp(total_exit) - 2.0 * (plogp(qa) + plogp(qb)) + plogp(qa + pa) + plogp(qb + pb)
    }
}

/// Change in codelength when a node leaves module `a` for module `b`.
struct Move {
    exit_a: f64,
    exit_b: f64,
    total_exit: f64,
    delta: f64,
}

#[allow(clippy::too_many_arguments)]
fn evaluate_move(m: &ModuleFlows, a: usize, b: usize, node_exit: f64, node_flow: f64, to_a: f64, to_b: f64) -> Move {
    let exit_a = (m.exit[a] - node_exit + 2.0 * to_a).max(0.0);
    let exit_b = (m.exit[b] + node_exit - 2.0 * to_b).max(0.0);
    let total_exit = (m.total_exit - m.exit[a] - m.exit[b] + exit_a + exit_b).max(0.0);
    let before = ModuleFlows::local_terms(m.total_exit, m.exit[a], m.flow[a], m.exit[b], m.flow[b]);
    let after = ModuleFlows::local_terms(total_exit, exit_a, m.flow[a] - node_flow, exit_b, m.flow[b] + node_flow);
    Move {
        exit_a,
        exit_b,
        total_exit,
        delta: after - before,
    }
}

fn local_move(g: &WeightedGraph, membership: &mut [usize], params: &CdParams, rng: &mut ChaCha8Rng) {
    let n = g.len();
    let two_m = 2.0 * g.total_weight;
    let node_flow: Vec<f64> = g.strength.iter().map(|s| s / two_m).collect();
    let node_exit: Vec<f64> = (0..n)
        .map(|v| (g.strength[v] - 2.0 * g.self_weight[v]) / two_m)
        .collect();
    let mut to_module = vec![0.0; n];
    let mut touched: Vec<usize> = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();

    for _ in 0..params.max_sweeps {
        // rebuilt each sweep so rounding does not accumulate
        let mut flows = ModuleFlows::new(g, membership);
        let mut unused: BTreeSet<usize> = (0..n).filter(|&c| flows.size[c] == 0).collect();
        order.shuffle(rng);
        let mut improvement = 0.0;

        for &v in &order {
            let a = membership[v];
            for &(u, w) in &g.adj[v] {
                let c = membership[u];
                if to_module[c] == 0.0 {
                    touched.push(c);
                }
                to_module[c] += w / two_m;
            }
            let mut candidates: Vec<usize> = touched.iter().copied().filter(|&c| c != a).collect();
            if flows.size[a] > 1 {
                if let Some(&empty) = unused.iter().next() {
                    candidates.push(empty);
                }
            }
            candidates.sort_unstable();
            candidates.dedup();

            let mut best: Option<(usize, Move)> = None;
            for &b in &candidates {
                let mv = evaluate_move(&flows, a, b, node_exit[v], node_flow[v], to_module[a], to_module[b]);
                let threshold = best.as_ref().map_or(-MOVE_EPS, |(_, m)| m.delta);
                if mv.delta < threshold {
                    best = Some((b, mv));
                }
            }
            if let Some((b, mv)) = best {
                flows.exit[a] = mv.exit_a;
                flows.exit[b] = mv.exit_b;
                flows.total_exit = mv.total_exit;
                flows.flow[a] -= node_flow[v];
                flows.flow[b] += node_flow[v];
                flows.size[a] -= 1;
                flows.size[b] += 1;
                if flows.size[a] == 0 {
                    unused.insert(a);
                }
                unused.remove(&b);
                membership[v] = b;
                improvement -= mv.delta;
            }
            for c in touched.drain(..) {
                to_module[c] = 0.0;
            }
        }
        if improvement <= params.tolerance {
            break;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::communities::map_equation;

    fn graph(edges: &[(&str, &str)]) -> UndirectedGraph {
        let mut g = UndirectedGraph::new();
        for (a, b) in edges {
            g.add_edge(a, b, 1);
        }
        g
    }

    #[test]
    fn triangle_is_one_module() {
        let g = graph(&[("a", "b"), ("b", "c"), ("a", "c")]);
        let p = infomap(&g, &CdParams::default()).unwrap();
        assert_eq!(p.num_communities(), 1);
    }

    #[test]
    fn disjoint_triangles_are_two_modules() {
        let g = graph(&[("a", "b"), ("b", "c"), ("a", "c"), ("d", "e"), ("e", "f"), ("d", "f")]);
        let p = infomap(&g, &CdParams::default()).unwrap();
        assert_eq!(p.num_communities(), 2);
        assert_eq!(p.community_of("a"), p.community_of("c"));
        assert_ne!(p.community_of("a"), p.community_of("d"));
    }

    #[test]
    fn isolated_nodes_become_singletons() {
        let mut g = graph(&[("a", "b"), ("b", "c"), ("a", "c")]);
        g.add_node("z");
        let p = infomap(&g, &CdParams::default()).unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(p.num_communities(), 2);
    }

    #[test]
    fn all_isolated_is_error() {
        let mut g = UndirectedGraph::new();
        g.add_node("a");
        g.add_node("b");
        assert!(matches!(infomap(&g, &CdParams::default()), Err(Error::Domain(_))));
    }

    #[test]
    fn move_delta_matches_recomputed_codelength() {
        let g = graph(&[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("a", "c"), ("d", "e")]);
        let (wg, _) = WeightedGraph::from_undirected(&g);
        let membership = vec![0, 0, 1, 1, 1];
        let flows = ModuleFlows::new(&wg, &membership);
        let two_m = 2.0 * wg.total_weight;
        // move node 2 ("c") from module 1 to module 0
        let to = |module: usize| -> f64 {
            wg.adj[2]
                .iter()
                .filter(|(u, _)| *u != 2 && membership[*u] == module)
                .map(|(_, w)| w / two_m)
                .sum()
        };
        let mv = evaluate_move(
            &flows,
            1,
            0,
            wg.strength[2] / two_m,
            wg.strength[2] / two_m,
            to(1),
            to(0),
        );
        let before = codelength_indexed(&wg, &membership);
        let after = codelength_indexed(&wg, &[0, 0, 0, 1, 1]);
        assert!((mv.delta - (after - before)).abs() < 1e-12);
    }

    #[test]
    fn result_beats_trivial_partitions() {
        let g = graph(&[
            ("a", "b"),
            ("b", "c"),
            ("c", "a"),
            ("c", "d"),
            ("d", "e"),
            ("e", "f"),
            ("f", "d"),
            ("f", "g"),
            ("g", "a"),
        ]);
        let p = infomap(&g, &CdParams::default()).unwrap();
        let l = map_equation(&g, &p).unwrap();
        assert!(l <= map_equation(&g, &Partition::single_community(g.nodes())).unwrap() + 1e-12);
        assert!(l <= map_equation(&g, &Partition::singletons(g.nodes())).unwrap() + 1e-12);
    }
}
