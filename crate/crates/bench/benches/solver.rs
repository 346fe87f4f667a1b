use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rvx_core::families::{clique_chain, path};
use rvx_core::{enumerate_connected_graphs, rvx, sdiam, steiner_distance, VertexSet};

fn solver(c: &mut Criterion) {
    let mut group = c.benchmark_group("rvx");
    for n in [5, 6, 7] {
        let g = path(n).unwrap();
        group.bench_with_input(BenchmarkId::new("path_k3", n), &g, |b, g| b.iter(|| rvx(black_box(g), 3).unwrap()));
    }
    for p in [2, 3] {
        let g = clique_chain(p).unwrap();
        group.bench_with_input(BenchmarkId::new("clique_chain_k3", p), &g, |b, g| {
            b.iter(|| rvx(black_box(g), 3).unwrap())
        });
    }
    group.finish();
}

fn steiner(c: &mut Criterion) {
    let g = path(12).unwrap();
    let terminals: VertexSet = [0, 4, 7, 11].into_iter().collect();
    c.bench_function("steiner_distance_p12_4", |b| b.iter(|| steiner_distance(black_box(&g), terminals).unwrap()));
    let g = clique_chain(3).unwrap();
    c.bench_function("sdiam_clique_chain3_k3", |b| b.iter(|| sdiam(black_box(&g), 3).unwrap()));
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    for n in [5, 6] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| enumerate_connected_graphs(black_box(n)).unwrap().len())
        });
    }
    group.finish();
}

criterion_group!(benches, solver, steiner, enumeration);
criterion_main!(benches);
