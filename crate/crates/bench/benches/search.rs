use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use f1qt_core::clone_delete::{probability_a1, search_projective_cloner, verify_deletion, CloneScope};
use f1qt_core::f1_algebra::automorphisms_by_search;
use f1qt_core::mqt::monomial_unitary_entries;
use f1qt_core::operators::{enumerate_gl, unitary_group};
use f1qt_core::{Budget, Conjugation};

fn enumeration(c: &mut Criterion) {
    c.bench_function("enumerate_gl m=4 l=3", |b| {
        b.iter(|| enumerate_gl(black_box(4), 3, Budget::DEFAULT).unwrap())
    });
    c.bench_function("unitary_group m=3 r=2", |b| {
        b.iter(|| unitary_group(black_box(3), 2, Budget::DEFAULT).unwrap())
    });
    c.bench_function("automorphisms_by_search l=12", |b| {
        b.iter(|| automorphisms_by_search(black_box(12)))
    });
}

fn cloning(c: &mut Criterion) {
    c.bench_function("cloner search m=2 l=2 all rays", |b| {
        b.iter(|| {
            search_projective_cloner(2, 2, Conjugation::Identity, CloneScope::AllRays, Budget::DEFAULT)
                .unwrap()
        })
    });
}

fn deletion(c: &mut Criterion) {
    c.bench_function("verify_deletion m=4 l=4", |b| {
        b.iter(|| verify_deletion(black_box(4), 4).unwrap())
    });
    c.bench_function("probability_a1 m=1000 l=2", |b| {
        b.iter(|| probability_a1(black_box(1000), 2).unwrap())
    });
}

fn modal(c: &mut Criterion) {
    c.bench_function("monomial_unitary_entries q=5 m=3", |b| {
        b.iter(|| monomial_unitary_entries(black_box(5), 3, Budget::DEFAULT).unwrap())
    });
}

criterion_group!(benches, enumeration, cloning, deletion, modal);
criterion_main!(benches);
