use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use wopow_bench::{five_cycle, natural_cycle};
use wopow_core::{
    enumerate_strong_covers, random_graph, symbolic_power_grouped, symbolic_power_localized,
    Limits, RandomGraphParams, DEFAULT_COVER_CAP,
};

fn ideal_arithmetic(c: &mut Criterion) {
    let mut group = c.benchmark_group("ideal");
    let g = natural_cycle(7);
    let i = g.edge_ideal();
    for s in [2u32, 3, 4] {
        group.bench_with_input(BenchmarkId::new("power", s), &s, |b, &s| {
            b.iter(|| black_box(&i).power(s).unwrap());
        });
    }
    let sq = i.power(2).unwrap();
    group.bench_function("intersect", |b| {
        b.iter(|| black_box(&sq).intersect(black_box(&i)).unwrap());
    });
    group.finish();
}

fn covers(c: &mut Criterion) {
    let mut group = c.benchmark_group("strong_covers");
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in [8usize, 12, 16] {
        let params = RandomGraphParams {
            min_vertices: n,
            max_vertices: n,
            edge_probability: 0.3,
            max_weight: 3,
        };
        let g = random_graph(&params, &mut rng);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| enumerate_strong_covers(g, DEFAULT_COVER_CAP).unwrap());
        });
    }
    group.finish();
}

fn symbolic(c: &mut Criterion) {
    let mut group = c.benchmark_group("symbolic");
    let limits = Limits::default();
    let cases = [("five-cycle", five_cycle()), ("C7", natural_cycle(7))];
    for (name, g) in &cases {
        for s in [2u32, 3] {
            let id = format!("{name}/s={s}");
            group.bench_with_input(BenchmarkId::new("grouped", &id), g, |b, g| {
                b.iter(|| symbolic_power_grouped(g, s, &limits).unwrap());
            });
            group.bench_with_input(BenchmarkId::new("localized", &id), g, |b, g| {
                b.iter(|| symbolic_power_localized(g, s, &limits).unwrap());
            });
        }
    }
    group.finish();
}

criterion_group!(benches, ideal_arithmetic, covers, symbolic);
criterion_main!(benches);
