//! Independent reference implementations used as test oracles, plus small
//! fixture helpers. Nothing here calls the library's own quality or metric
//! code.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::PathBuf;

use compsem_core::{Partition, UndirectedGraph};
use rand::Rng;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub fn corpus_manifest() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus/manifest.txt")
}

/// `v0 .. v{n-1}`; `n` ≤ 10 keeps name order equal to index order.
pub fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

pub fn graph(n: usize, edges: &[(usize, usize, u64)]) -> UndirectedGraph {
    let mut g = UndirectedGraph::new();
    for v in names(n) {
        g.add_node(v);
    }
    for &(a, b, w) in edges {
        g.add_edge(&format!("v{a}"), &format!("v{b}"), w);
    }
    g
}

/// Erdős–Rényi style graph with integer weights in 1..=3.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> UndirectedGraph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b, rng.gen_range(1..=3)));
            }
        }
    }
    graph(n, &edges)
}

pub fn partition(labels: &[usize]) -> Partition {
    Partition::from_labels(names(labels.len()).into_iter().zip(labels.iter().copied())).unwrap()
}

/// Dense symmetric adjacency matrix indexed by sorted node order.
pub fn adjacency(g: &UndirectedGraph) -> (Vec<String>, Vec<Vec<f64>>) {
    let nodes: Vec<String> = g.nodes().map(str::to_owned).collect();
    let idx: BTreeMap<&str, usize> = nodes.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
    let mut a = vec![vec![0.0; nodes.len()]; nodes.len()];
    for (s, t, w) in g.edges() {
        a[idx[s]][idx[t]] += w as f64;
        a[idx[t]][idx[s]] += w as f64;
    }
    (nodes, a)
}

fn labels_in(nodes: &[String], p: &Partition) -> Vec<usize> {
    nodes
        .iter()
        .map(|n| p.community_of(n).expect("partition covers graph"))
        .collect()
}

/// Q = (1/2m) Σ_ij [A_ij − γ k_i k_j / 2m] δ(c_i, c_j)
pub fn oracle_modularity(g: &UndirectedGraph, p: &Partition, gamma: f64) -> f64 {
    let (nodes, a) = adjacency(g);
    let c = labels_in(&nodes, p);
    let k: Vec<f64> = a.iter().map(|row| row.iter().sum()).collect();
    let two_m: f64 = k.iter().sum();
    let mut q = 0.0;
    for i in 0..nodes.len() {
        for j in 0..nodes.len() {
            if c[i] == c[j] {
                q += a[i][j] - gamma * k[i] * k[j] / two_m;
            }
        }
    }
    q / two_m
}

fn plogp(x: f64) -> f64 {
    if x > 0.0 {
        x * x.log2()
    } else {
        0.0
    }
}

/// Two-level map equation of an undirected graph without isolated nodes,
/// evaluated from the random walk's stationary distribution.
pub fn oracle_codelength(g: &UndirectedGraph, p: &Partition) -> f64 {
    let (nodes, a) = adjacency(g);
    let c = labels_in(&nodes, p);
    let k: Vec<f64> = a.iter().map(|row| row.iter().sum()).collect();
    let two_m: f64 = k.iter().sum();
    let visit: Vec<f64> = k.iter().map(|x| x / two_m).collect();
    let modules = c.iter().max().map_or(0, |m| m + 1);
    let mut exit = vec![0.0; modules];
    let mut inside = vec![0.0; modules];
    for i in 0..nodes.len() {
        inside[c[i]] += visit[i];
        for j in 0..nodes.len() {
            if c[i] != c[j] {
                // probability of stepping i -> j
                exit[c[i]] += visit[i] * a[i][j] / k[i];
            }
        }
    }
    let total_exit: f64 = exit.iter().sum();
    plogp(total_exit) - 2.0 * exit.iter().map(|&q| plogp(q)).sum::<f64>() - visit.iter().map(|&p| plogp(p)).sum::<f64>()
        + exit.iter().zip(&inside).map(|(&q, &p)| plogp(q + p)).sum::<f64>()
}

/// Every set partition of `0..n` as a restricted growth string.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(i: usize, n: usize, cur: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        for c in 0..=max + 1 {
            if i == 0 && c > 0 {
                break;
            }
            cur.push(c);
            rec(i + 1, n, cur, if i == 0 { 0 } else { max.max(c) }, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    rec(0, n, &mut Vec::new(), 0, &mut out);
    out
}

/// All partitions reachable from `labels` by moving one node to another
/// existing community or to a new one of its own.
pub fn single_moves(labels: &[usize]) -> Vec<Vec<usize>> {
    let k = labels.iter().max().map_or(0, |m| m + 1);
    let mut out = Vec::new();
    for v in 0..labels.len() {
        for c in 0..=k {
            if c != labels[v] {
                let mut l = labels.to_vec();
                l[v] = c;
                out.push(l);
            }
        }
    }
    out
}

pub fn cosine(a: &[f64], b: &[f64]) -> f64 {
    let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    let na = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let nb = b.iter().map(|x| x * x).sum::<f64>().sqrt();
    if na == 0.0 || nb == 0.0 {
        0.0
    } else {
        dot / (na * nb)
    }
}

pub fn mean(v: &[f64]) -> f64 {
    v.iter().sum::<f64>() / v.len() as f64
}

/// Communities as lists of vectors.
pub type Groups = Vec<Vec<Vec<f64>>>;

pub fn oracle_cohesion(groups: &Groups) -> Vec<f64> {
    groups
        .iter()
        .map(|g| {
            let mut sims = Vec::new();
            for i in 0..g.len() {
                for j in 0..g.len() {
                    if i < j {
                        sims.push(cosine(&g[i], &g[j]));
                    }
                }
            }
            mean(&sims)
        })
        .collect()
}

pub fn centroid(g: &[Vec<f64>]) -> Vec<f64> {
    let d = g[0].len();
    (0..d)
        .map(|k| g.iter().map(|v| v[k]).sum::<f64>() / g.len() as f64)
        .collect()
}

pub fn oracle_separation(groups: &Groups) -> f64 {
    let c: Vec<Vec<f64>> = groups.iter().map(|g| centroid(g)).collect();
    let mut sims = Vec::new();
    for i in 0..c.len() {
        for j in 0..c.len() {
            if i < j {
                sims.push(cosine(&c[i], &c[j]));
            }
        }
    }
    mean(&sims)
}

/// Per-node silhouette in group order.
pub fn oracle_silhouette(groups: &Groups) -> Vec<f64> {
    let dist = |a: &[f64], b: &[f64]| 1.0 - cosine(a, b);
    let mut out = Vec::new();
    for (k, g) in groups.iter().enumerate() {
        for (i, v) in g.iter().enumerate() {
            if g.len() == 1 {
                out.push(0.0);
                continue;
            }
            let a = g
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, w)| dist(v, w))
                .sum::<f64>()
                / (g.len() - 1) as f64;
            let b = groups
                .iter()
                .enumerate()
                .filter(|(l, _)| *l != k)
                .map(|(_, h)| h.iter().map(|w| dist(v, w)).sum::<f64>() / h.len() as f64)
                .fold(f64::INFINITY, f64::min);
            let m = a.max(b);
            out.push(if m == 0.0 { 0.0 } else { (b - a) / m });
        }
    }
    out
}

/// Pearson r by the textbook formula; `None` when a sample is constant.
pub fn oracle_pearson(x: &[f64], y: &[f64]) -> Option<f64> {
    let n = x.len() as f64;
    let sx: f64 = x.iter().sum();
    let sy: f64 = y.iter().sum();
    let sxx: f64 = x.iter().map(|a| a * a).sum();
    let syy: f64 = y.iter().map(|a| a * a).sum();
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| a * b).sum();
    let vx = n * sxx - sx * sx;
    let vy = n * syy - sy * sy;
    let scale_x = x.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let scale_y = y.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    if vx.abs() <= 1e-9 * n * n * scale_x * scale_x || vy.abs() <= 1e-9 * n * n * scale_y * scale_y {
        return None;
    }
    Some((n * sxy - sx * sy) / (vx.sqrt() * vy.sqrt()))
}
