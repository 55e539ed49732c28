use std::f64::consts::PI;
use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use graphvol_bench::crossed_theta;
use graphvol_core::lobachevsky::{
    cuboct_volume_by_decomposition, cuboct_volume_closed_form, lobachevsky, lobachevsky_quadrature, lobachevsky_series,
    DEFAULT_TOL,
};
use graphvol_core::{claim_suite, decompose, parse_diagram};

fn lobachevsky_paths(c: &mut Criterion) {
    let mut g = c.benchmark_group("lobachevsky");
    for theta in [1e-6, PI / 6.0, 1.3] {
        g.bench_with_input(BenchmarkId::new("series", theta), &theta, |b, &t| {
            b.iter(|| lobachevsky_series(black_box(t), DEFAULT_TOL))
        });
        g.bench_with_input(BenchmarkId::new("quadrature", theta), &theta, |b, &t| {
            b.iter(|| lobachevsky_quadrature(black_box(t), DEFAULT_TOL))
        });
        g.bench_with_input(BenchmarkId::new("checked", theta), &theta, |b, &t| {
            b.iter(|| lobachevsky(black_box(t), DEFAULT_TOL))
        });
    }
    g.finish();
}

fn cuboct(c: &mut Criterion) {
    c.bench_function("cuboct/closed_form", |b| {
        b.iter(|| cuboct_volume_closed_form(black_box(DEFAULT_TOL)))
    });
    c.bench_function("cuboct/13_tetrahedra", |b| {
        b.iter(|| cuboct_volume_by_decomposition(black_box(DEFAULT_TOL)))
    });
}

fn claims(c: &mut Criterion) {
    c.bench_function("claim_suite", |b| b.iter(claim_suite));
}

fn decomposition(c: &mut Criterion) {
    let mut g = c.benchmark_group("decompose");
    for n in [3, 30, 300] {
        let d = parse_diagram(&crossed_theta(n)).unwrap();
        g.bench_with_input(BenchmarkId::new("build", n), &d, |b, d| {
            b.iter(|| decompose(black_box(d)))
        });
        let complex = decompose(&d).unwrap();
        g.bench_with_input(BenchmarkId::new("validate", n), &complex, |b, c| {
            b.iter(|| c.validate())
        });
    }
    g.finish();
}

criterion_group!(benches, lobachevsky_paths, cuboct, claims, decomposition);
criterion_main!(benches);
