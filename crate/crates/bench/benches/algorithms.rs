use compsem_bench::{block_embeddings, planted_partition};
use compsem_core::semmetrics::{cohesion, filter_small, silhouette};
use compsem_core::{infomap, leiden, CdParams};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

fn detection(c: &mut Criterion) {
    let mut group = c.benchmark_group("detection");
    group.sample_size(10);
    for groups in [5, 20] {
        let g = planted_partition(groups, 20, 0.3, 0.01, 1);
        let params = CdParams::default();
        group.bench_with_input(BenchmarkId::new("leiden", groups * 20), &g, |b, g| {
            b.iter(|| leiden(black_box(g), &params).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("infomap", groups * 20), &g, |b, g| {
            b.iter(|| infomap(black_box(g), &params).unwrap())
        });
    }
    group.finish();
}

fn metrics(c: &mut Criterion) {
    let g = planted_partition(10, 20, 0.3, 0.01, 2);
    let p = leiden(&g, &CdParams::default()).unwrap();
    let cs = filter_small(&p, 4);
    let emb = block_embeddings(200, 20, 64, 3);
    c.bench_function("cohesion/200x64", |b| {
        b.iter(|| cohesion(black_box(&cs), &emb).unwrap())
    });
    c.bench_function("silhouette/200x64", |b| {
        b.iter(|| silhouette(black_box(&cs), &emb).unwrap())
    });
}

criterion_group!(benches, detection, metrics);
criterion_main!(benches);
