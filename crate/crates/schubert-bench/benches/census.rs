use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use schubert::{build_system, census, is_factorial, is_gorenstein, is_smooth, CensusOptions};
use schubert_bench::{gorenstein_s8, infeasible_s7, mixed_corners_s6};

fn classifier(c: &mut Criterion) {
    let good = gorenstein_s8();
    let mixed = mixed_corners_s6();
    c.bench_function("is_gorenstein s8 (pattern path)", |b| {
        b.iter(|| is_gorenstein(black_box(&good)))
    });
    c.bench_function("is_gorenstein s6 (corner short-circuit)", |b| {
        b.iter(|| is_gorenstein(black_box(&mixed)))
    });
    c.bench_function("is_smooth s8", |b| b.iter(|| is_smooth(black_box(&good))));
    c.bench_function("is_factorial s8", |b| {
        b.iter(|| is_factorial(black_box(&good)))
    });
}

fn solver(c: &mut Criterion) {
    let good = gorenstein_s8();
    let bad = infeasible_s7();
    c.bench_function("build_system + solve s8 (feasible)", |b| {
        b.iter(|| build_system(black_box(&good)).solve())
    });
    c.bench_function("build_system + solve s7 (infeasible)", |b| {
        b.iter(|| build_system(black_box(&bad)).solve())
    });
    c.bench_function("rational_feasible s7", |b| {
        let system = build_system(&bad);
        b.iter(|| black_box(&system).rational_feasible())
    });
}

fn sweeps(c: &mut Criterion) {
    let opts = CensusOptions::default();
    c.bench_function("census n=6", |b| b.iter(|| census(6, black_box(&opts))));
    let mut group = c.benchmark_group("census-large");
    group.sample_size(10);
    group.bench_function("census n=7", |b| b.iter(|| census(7, black_box(&opts))));
    group.finish();
}

criterion_group!(benches, classifier, solver, sweeps);
criterion_main!(benches);
