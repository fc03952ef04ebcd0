use std::hint::black_box;

use cliffcs::random::random_operator;
use cliffcs::{su4_to_so6, synthesize, CycloElem};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn synthesis(c: &mut Criterion) {
    let mut group = c.benchmark_group("synthesize");
    group.sample_size(10);
    for n in [10usize, 100, 1000] {
        let (u, _) = random_operator(n, 1);
        group.bench_with_input(BenchmarkId::from_parameter(n), &u, |b, u| {
            b.iter(|| synthesize(black_box(u)).unwrap())
        });
    }
    group.finish();
}

fn isomorphism(c: &mut Criterion) {
    let mut group = c.benchmark_group("su4_to_so6");
    for n in [1usize, 100] {
        let (u, _) = random_operator(n, 2);
        group.bench_with_input(BenchmarkId::from_parameter(n), &u, |b, u| {
            b.iter(|| su4_to_so6(black_box(u)).unwrap())
        });
    }
    group.finish();
}

fn ring(c: &mut Criterion) {
    let x = CycloElem::new(123_456_789i64, -987_654_321i64, 55_555i64, -1i64);
    let y = CycloElem::new(-3i64, 17i64, 1_000_003i64, 42i64);
    c.bench_function("cyclo_mul", |b| b.iter(|| black_box(&x) * black_box(&y)));
}

criterion_group!(benches, synthesis, isomorphism, ring);
criterion_main!(benches);
