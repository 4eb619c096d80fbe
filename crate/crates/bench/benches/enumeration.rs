use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use naples_core::*;
use std::hint::black_box;

fn simulation(c: &mut Criterion) {
    let prefs: Vec<_> = all_preferences(6).collect();
    c.bench_function("simulate all of [6]^6, k=2", |b| {
        b.iter(|| prefs.iter().filter(|p| is_naples_pf(p, NaplesParameter(2))).count())
    });
}

fn counting(c: &mut Criterion) {
    let mut group = c.benchmark_group("count");
    group.sample_size(10);
    for n in [7usize, 8, 9] {
        group.bench_with_input(BenchmarkId::new("permsum", n), &n, |b, &n| {
            b.iter(|| count_npf_permsum(black_box(n), NaplesParameter(2)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("recursive", n), &n, |b, &n| {
            b.iter(|| count_npf_recursive(black_box(n), NaplesParameter(2)))
        });
    }
    group.finish();
}

fn distributions(c: &mut Criterion) {
    let mut group = c.benchmark_group("area_distribution");
    group.sample_size(10);
    for n in [6usize, 8] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| area_distribution(black_box(n), NaplesParameter(1)).unwrap())
        });
    }
    group.finish();
}

fn series(c: &mut Criterion) {
    c.bench_function("log_gf(9)", |b| b.iter(|| log_gf(black_box(9))));
    c.bench_function("fiber_gf_recursive(7)", |b| b.iter(|| fiber_gf_recursive(black_box(7)).unwrap()));
}

criterion_group!(benches, simulation, counting, distributions, series);
criterion_main!(benches);
