//! Synthetic inputs for the benchmarks.

use std::collections::BTreeMap;

use compsem_core::{EmbeddingMatrix, Scheme, UndirectedGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Node name used by the generators; zero-padded so names sort by index.
pub fn node(i: usize) -> String {
    format!("n{i:06}")
}

/// Planted partition graph: `groups` blocks of `size` nodes, each pair
/// linked with probability `p_in` inside a block and `p_out` across blocks.
/// Edge weights are drawn from 1..=3.
pub fn planted_partition(groups: usize, size: usize, p_in: f64, p_out: f64, seed: u64) -> UndirectedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = groups * size;
    let mut g = UndirectedGraph::new();
    for i in 0..n {
        g.add_node(node(i));
    }
    for i in 0..n {
        for j in i + 1..n {
            let p = if i / size == j / size { p_in } else { p_out };
            if rng.gen_bool(p) {
                g.add_edge(&node(i), &node(j), rng.gen_range(1..=3));
            }
        }
    }
    g
}

/// Dense random vectors for `n` nodes, biased by block so that blocks of
/// `size` nodes are more similar to each other.
pub fn block_embeddings(n: usize, size: usize, dim: usize, seed: u64) -> EmbeddingMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vectors: BTreeMap<String, Vec<f64>> = (0..n)
        .map(|i| {
            let block = i / size;
            let v = (0..dim)
                .map(|d| rng.gen_range(-1.0..1.0) + if d % (n / size).max(1) == block % dim { 2.0 } else { 0.0 })
                .collect();
            (node(i), v)
        })
        .collect();
    EmbeddingMatrix::new(Scheme::Tfidf, dim, vectors).expect("generated vectors are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_seeded() {
        let a = planted_partition(3, 5, 0.8, 0.05, 7);
        let b = planted_partition(3, 5, 0.8, 0.05, 7);
        assert_eq!(a, b);
        assert_eq!(a.node_count(), 15);
        let e = block_embeddings(15, 5, 8, 1);
        assert_eq!(e.len(), 15);
        assert_eq!(e, block_embeddings(15, 5, 8, 1));
    }
}
