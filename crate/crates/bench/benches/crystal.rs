use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use chute_core::crystal::crystal_graph;
use chute_core::keylab::decompose_unchecked;
use chute_core::rfc::schubert_compatible;
use chute_core::{enumerate_rp, schubert_divdiff, Permutation};

fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_rp");
    for w in ["21543", "4726315", "654321"] {
        let w = perm(w);
        g.bench_function(w.one_line(), |b| b.iter(|| enumerate_rp(black_box(&w))));
    }
    g.finish();
}

fn polynomials(c: &mut Criterion) {
    let w = perm("4726315");
    c.bench_function("schubert_divdiff [4726315]", |b| {
        b.iter(|| schubert_divdiff(black_box(&w)))
    });
    c.bench_function("schubert_compatible [4726315]", |b| {
        b.iter(|| schubert_compatible(black_box(&w)))
    });
}

fn crystals(c: &mut Criterion) {
    let mut g = c.benchmark_group("crystal_graph");
    for w in ["21543", "4726315", "654321"] {
        let w = perm(w);
        g.bench_function(w.one_line(), |b| b.iter(|| crystal_graph(black_box(&w))));
    }
    g.finish();
    let w = perm("4726315");
    c.bench_function("decompose [4726315]", |b| {
        b.iter(|| decompose_unchecked(black_box(&w)).unwrap())
    });
}

criterion_group!(benches, enumeration, polynomials, crystals);
criterion_main!(benches);
