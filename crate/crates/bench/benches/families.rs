use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use tribo_core::genfunc::{gf_vs_direct, GFVariant, XMode};
use tribo_core::incomplete::{incomplete_tl_poly, IncompleteFamily, TlMethod};
use tribo_core::sequences::{tribonacci_lucas_numbers, tribonacci_lucas_poly};
use tribo_core::triangles::{triangle_rows, TriangleKind};
use tribo_core::verify::{run_identity, SweepRange};

fn sequences(c: &mut Criterion) {
    c.bench_function("K_n numbers, 2000 terms", |b| b.iter(|| tribonacci_lucas_numbers(black_box(2000))));
    c.bench_function("K_200(x)", |b| b.iter(|| tribonacci_lucas_poly(black_box(200))));
}

fn triangles(c: &mut Criterion) {
    c.bench_function("polynomial triangle, 40 rows", |b| {
        b.iter(|| triangle_rows(TriangleKind::Polynomials, black_box(40)).unwrap())
    });
}

fn incomplete(c: &mut Criterion) {
    let mut group = c.benchmark_group("K_40^(10)(x)");
    for (name, method) in [("triangle sum", TlMethod::TriangleSum), ("binomial sum", TlMethod::BinomialSum)] {
        group.bench_function(name, |b| b.iter(|| incomplete_tl_poly(black_box(40), 10, method).unwrap()));
    }
    group.finish();
}

fn generating_functions(c: &mut Criterion) {
    c.bench_function("Q_4 symbolic vs direct, 48 terms", |b| {
        b.iter(|| {
            gf_vs_direct(IncompleteFamily::IncTribonacci, black_box(4), GFVariant::Corrected, &XMode::Symbolic, 48)
                .unwrap()
        })
    });
}

fn sweeps(c: &mut Criterion) {
    let range = SweepRange::default();
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    group.bench_function("thm5", |b| b.iter(|| run_identity("thm5", &range).unwrap()));
    group.finish();
}

criterion_group!(benches, sequences, triangles, incomplete, generating_functions, sweeps);
criterion_main!(benches);
