//! Table-construction benchmarks: symbolic λ against concrete rational λ,
//! and the two independent routes to the poly-Bernoulli numbers.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use polybern::scalar::rat;
use polybern::sequences::{
    deg_stirling1_table, deg_stirling2_table, poly_bernoulli_sum_table, poly_bernoulli_table,
};
use polybern_bench::symbolic_lambda;

fn poly_bernoulli_routes(c: &mut Criterion) {
    let mut group = c.benchmark_group("poly_bernoulli");
    let order = 12;
    let numeric = rat(1, 2);
    let symbolic = symbolic_lambda();
    group.bench_function("gf/numeric", |b| {
        b.iter(|| poly_bernoulli_table(2, black_box(&numeric), order));
    });
    group.bench_function("gf/symbolic", |b| {
        b.iter(|| poly_bernoulli_table(2, black_box(&symbolic), order));
    });
    group.bench_function("sum/numeric", |b| {
        b.iter(|| poly_bernoulli_sum_table(2, black_box(&numeric), order));
    });
    group.bench_function("sum/symbolic", |b| {
        b.iter(|| poly_bernoulli_sum_table(2, black_box(&symbolic), order));
    });
    group.finish();
}

fn stirling_tables(c: &mut Criterion) {
    let mut group = c.benchmark_group("stirling_tables");
    let order = 16;
    let numeric = rat(1, 2);
    let symbolic = symbolic_lambda();
    group.bench_function("second_kind/numeric", |b| {
        b.iter(|| deg_stirling2_table(black_box(&numeric), order));
    });
    group.bench_function("second_kind/symbolic", |b| {
        b.iter(|| deg_stirling2_table(black_box(&symbolic), order));
    });
    group.bench_function("first_kind/symbolic", |b| {
        b.iter(|| deg_stirling1_table(black_box(&symbolic), order));
    });
    group.finish();
}

criterion_group!(benches, poly_bernoulli_routes, stirling_tables);
criterion_main!(benches);
