mod common;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use compsem_core::lexsem::build_tfidf;
use compsem_core::semmetrics::{cohesion, cosine, dep_sim_correlation, separation, silhouette};
use compsem_core::{
    filter_small, infomap, leiden, map_equation, modularity, CdParams, EmbeddingMatrix, Partition, Scheme,
    TokenDocument, UndirectedGraph,
};
use proptest::prelude::*;

use common::*;

fn graph_strategy(max_nodes: usize) -> impl Strategy<Value = UndirectedGraph> {
    (2..=max_nodes)
        .prop_flat_map(|n| {
            prop::collection::vec((0..n, 0..n, 1u64..=4), 1..=3 * n).prop_map(move |edges| {
                let edges: Vec<_> = edges.into_iter().filter(|(a, b, _)| a != b).collect();
                graph(n, &edges)
            })
        })
        .prop_filter("needs an edge", |g| g.edge_count() > 0)
}

fn without_isolated(g: &UndirectedGraph) -> UndirectedGraph {
    let isolated: BTreeSet<String> = g.isolated_nodes().into_iter().collect();
    g.induced(g.nodes().filter(|n| !isolated.contains(*n)))
}

fn connected_within(g: &UndirectedGraph, members: &[String]) -> bool {
    let inside: BTreeSet<&str> = members.iter().map(String::as_str).collect();
    let mut adj: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for (a, b, _) in g.edges() {
        if inside.contains(a) && inside.contains(b) {
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
    }
    let mut seen = BTreeSet::from([members[0].as_str()]);
    let mut queue = VecDeque::from([members[0].as_str()]);
    while let Some(v) = queue.pop_front() {
        for &w in adj.get(v).into_iter().flatten() {
            if seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    seen.len() == members.len()
}

fn rename(g: &UndirectedGraph, f: impl Fn(&str) -> String) -> UndirectedGraph {
    let mut out = UndirectedGraph::new();
    for n in g.nodes() {
        out.add_node(f(n));
    }
    for (a, b, w) in g.edges() {
        out.add_edge(&f(a), &f(b), w);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn leiden_communities_are_connected(g in graph_strategy(14), seed in any::<u64>()) {
        let p = leiden(&g, &CdParams::with_seed(seed)).unwrap();
        for members in p.communities() {
            prop_assert!(connected_within(&g, &members), "{members:?}");
        }
    }

    #[test]
    fn detection_is_deterministic(g in graph_strategy(14), seed in any::<u64>()) {
        let params = CdParams::with_seed(seed);
        prop_assert_eq!(leiden(&g, &params).unwrap(), leiden(&g, &params).unwrap());
        prop_assert_eq!(infomap(&g, &params).unwrap(), infomap(&g, &params).unwrap());
    }

    #[test]
    fn leiden_beats_trivial_partitions(g in graph_strategy(14), seed in any::<u64>()) {
        let p = leiden(&g, &CdParams::with_seed(seed)).unwrap();
        let q = modularity(&g, &p).unwrap();
        prop_assert!(q >= modularity(&g, &Partition::single_community(g.nodes())).unwrap() - 1e-12);
        prop_assert!(q >= modularity(&g, &Partition::singletons(g.nodes())).unwrap() - 1e-12);
    }

    #[test]
    fn infomap_beats_trivial_partitions(g in graph_strategy(14), seed in any::<u64>()) {
        let sub = without_isolated(&g);
        let p = infomap(&sub, &CdParams::with_seed(seed)).unwrap();
        let l = map_equation(&sub, &p).unwrap();
        prop_assert!(l <= map_equation(&sub, &Partition::single_community(sub.nodes())).unwrap() + 1e-12);
        prop_assert!(l <= map_equation(&sub, &Partition::singletons(sub.nodes())).unwrap() + 1e-12);
    }

    #[test]
    fn quality_functions_match_oracles(g in graph_strategy(10), labels in prop::collection::vec(0usize..4, 10)) {
        let p = partition(&labels[..g.node_count()]);
        let q = modularity(&g, &p).unwrap();
        prop_assert!((q - oracle_modularity(&g, &p, 1.0)).abs() < 1e-9);
        let sub = without_isolated(&g);
        let kept: Vec<(String, usize)> = sub.nodes().map(|n| (n.to_owned(), p.community_of(n).unwrap())).collect();
        let sp = Partition::from_labels(kept).unwrap();
        let l = map_equation(&sub, &sp).unwrap();
        prop_assert!((l - oracle_codelength(&sub, &sp)).abs() < 1e-9);
    }

    #[test]
    fn quality_ignores_node_names(g in graph_strategy(10), labels in prop::collection::vec(0usize..4, 10)) {
        let name = |n: &str| format!("z{}", 9 - n[1..].parse::<usize>().unwrap());
        let h = rename(&g, name);
        let p = partition(&labels[..g.node_count()]);
        let hp = Partition::from_labels(p.iter().map(|(n, c)| (name(n), c))).unwrap();
        prop_assert!((modularity(&g, &p).unwrap() - modularity(&h, &hp).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn partition_ids_are_canonical(labels in prop::collection::vec(0usize..5, 1..12), shift in 1usize..50) {
        let a = partition(&labels);
        let b = partition(&labels.iter().map(|l| (l + shift) * 7 % 101).collect::<Vec<_>>());
        prop_assert_eq!(a, b);
    }

    #[test]
    fn metrics_ignore_community_labels(
        labels in prop::collection::vec(0usize..3, 12..20),
        vectors in prop::collection::vec(prop::collection::vec(-1.0f64..1.0, 3), 20),
        edges in prop::collection::vec((0usize..20, 0usize..20, 1u64..4), 0..40),
        shift in 1usize..9,
    ) {
        let n = labels.len();
        let edges: Vec<_> = edges.into_iter().filter(|(a, b, _)| a != b && *a < n && *b < n).collect();
        let g = graph(n, &edges);
        let emb = EmbeddingMatrix::new(
            Scheme::Tfidf,
            3,
            names(n).into_iter().zip(vectors).collect(),
        ).unwrap();
        let relabeled: Vec<usize> = labels.iter().map(|l| 2 - l + shift * 3).collect();
        let (a, b) = (filter_small(&partition(&labels), 2), filter_small(&partition(&relabeled), 2));
        prop_assume!(a.len() >= 2);
        prop_assert!((cohesion(&a, &emb).unwrap().mean - cohesion(&b, &emb).unwrap().mean).abs() < 1e-12);
        prop_assert!((separation(&a, &emb).unwrap() - separation(&b, &emb).unwrap()).abs() < 1e-12);
        prop_assert!((silhouette(&a, &emb).unwrap().mean - silhouette(&b, &emb).unwrap().mean).abs() < 1e-12);
        match (dep_sim_correlation(&g, &a, &emb), dep_sim_correlation(&g, &b, &emb)) {
            (Ok(x), Ok(y)) => prop_assert!((x - y).abs() < 1e-12),
            (Err(_), Err(_)) => {}
            other => prop_assert!(false, "definedness differs: {other:?}"),
        }
    }

    #[test]
    fn cosine_with_self_is_one(v in prop::collection::vec(-10.0f64..10.0, 1..8)) {
        prop_assume!(v.iter().any(|x| x.abs() > 1e-6));
        prop_assert!((cosine(&v, &v) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn tfidf_matches_oracle(docs in prop::collection::vec(prop::collection::vec(0usize..10, 0..8), 1..=5)) {
        prop_assume!(docs.iter().any(|d| !d.is_empty()));
        let term = |t: usize| format!("t{t}");
        let documents: Vec<TokenDocument> = docs
            .iter()
            .enumerate()
            .map(|(i, d)| TokenDocument { node: format!("d{i}"), tokens: d.iter().map(|&t| term(t)).collect() })
            .collect();
        let model = build_tfidf(&documents, 1000).unwrap();

        let vocab: BTreeSet<usize> = docs.iter().flatten().copied().collect();
        let vocab: Vec<String> = {
            let mut v: Vec<String> = vocab.into_iter().map(term).collect();
            v.sort();
            v
        };
        prop_assert_eq!(&model.vocabulary, &vocab);
        let n = docs.len() as f64;
        for (i, d) in documents.iter().enumerate() {
            let mut row: Vec<f64> = vocab
                .iter()
                .map(|t| {
                    let tf = d.tokens.iter().filter(|x| *x == t).count() as f64;
                    let df = documents.iter().filter(|o| o.tokens.contains(t)).count() as f64;
                    tf * (((1.0 + n) / (1.0 + df)).ln() + 1.0)
                })
                .collect();
            let norm = row.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm > 0.0 {
                row.iter_mut().for_each(|x| *x /= norm);
            }
            let got = model.matrix.get(&format!("d{i}")).unwrap();
            for (g, w) in got.iter().zip(&row) {
                prop_assert!((g - w).abs() < 1e-12, "doc {i}: {got:?} vs {row:?}");
            }
        }
    }
}

#[test]
fn set_partition_enumeration_counts_bell_numbers() {
    let bell = [1, 2, 5, 15, 52, 203, 877, 4140];
    for (n, b) in (1..=8).zip(bell) {
        assert_eq!(set_partitions(n).len(), b);
    }
}
