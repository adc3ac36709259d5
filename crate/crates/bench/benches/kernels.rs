use std::hint::black_box;

use coxeter_bench::{rng, vertex_pairs};
use coxeter_core::codes::{enumerate_selfdual_codes, family_from_code, orthogonal_witness};
use coxeter_core::gamma::{
    all_distances_from, distance_bfs, distance_closed, enumerate_packed, geodesic,
};
use coxeter_core::gf2::{decompose_symmetric, random_matrix, random_symmetric};
use coxeter_core::{GraphConfig, Vertex};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn linear_algebra(c: &mut Criterion) {
    let mut group = c.benchmark_group("gf2");
    for n in [8, 32, 64] {
        let m = random_matrix(n, n, &mut rng());
        group.bench_with_input(BenchmarkId::new("rank", n), &m, |b, m| {
            b.iter(|| black_box(m).rank())
        });
        let s = random_symmetric(n, &mut rng());
        group.bench_with_input(BenchmarkId::new("decompose_symmetric", n), &s, |b, s| {
            b.iter(|| decompose_symmetric(black_box(s)))
        });
    }
    group.finish();
}

fn distances(c: &mut Criterion) {
    let mut group = c.benchmark_group("distance");
    for n in [4, 8, 16] {
        let pairs = vertex_pairs(n, 64);
        group.bench_with_input(BenchmarkId::new("closed", n), &pairs, |b, pairs| {
            b.iter(|| {
                pairs
                    .iter()
                    .map(|(x, y)| distance_closed(x, y).unwrap())
                    .sum::<u32>()
            })
        });
    }
    let config = GraphConfig::new();
    let pairs = vertex_pairs(4, 8);
    group.bench_function("bfs/4", |b| {
        b.iter(|| {
            pairs
                .iter()
                .map(|(x, y)| distance_bfs(x, y, &config).unwrap())
                .sum::<u32>()
        })
    });
    let pairs = vertex_pairs(6, 8);
    group.bench_function("geodesic/6", |b| {
        b.iter(|| {
            pairs
                .iter()
                .map(|(x, y)| geodesic(x, y).unwrap().len())
                .sum::<usize>()
        })
    });
    group.finish();
}

fn whole_graph(c: &mut Criterion) {
    let config = GraphConfig::new();
    let mut group = c.benchmark_group("graph");
    group.sample_size(10);
    group.bench_function("enumerate/5", |b| {
        b.iter(|| enumerate_packed(5, &config).unwrap().len())
    });
    let identity = Vertex::identity(5);
    group.bench_function("bfs_from_identity/5", |b| {
        b.iter(|| all_distances_from(&identity, &config).unwrap().len())
    });
    group.finish();
}

fn codes(c: &mut Criterion) {
    let mut group = c.benchmark_group("codes");
    group.sample_size(10);
    group.bench_function("enumerate/8", |b| {
        b.iter(|| enumerate_selfdual_codes(8).unwrap().len())
    });
    let length8 = enumerate_selfdual_codes(8).unwrap();
    group.bench_function("family/8", |b| {
        b.iter(|| family_from_code(&length8[0]).unwrap().members.len())
    });
    let length10 = enumerate_selfdual_codes(10).unwrap();
    let (from, to) = (&length10[0], &length10[length10.len() - 1]);
    group.bench_function("witness/10", |b| {
        b.iter(|| orthogonal_witness(from, to).unwrap())
    });
    group.finish();
}

criterion_group!(benches, linear_algebra, distances, whole_graph, codes);
criterion_main!(benches);
