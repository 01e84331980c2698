use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use std::hint::black_box;

use zagreb_bench::{connected_corpus, scan_targets};
use zagreb_core::canon::canonical_graph;
use zagreb_core::enumerate::{enumerate_class, enumerate_connected_excess, ClassQuery, Family};
use zagreb_core::indices::m1_digraph;
use zagreb_core::matching::matching_number;
use zagreb_core::verify::{max_orientation_m1, verify_theorem};

fn bench_indices(c: &mut Criterion) {
    let g = scan_targets().remove(1).1; // B_{12,5}
    let d = g.orient(0).unwrap();
    c.bench_function("m1_digraph/B_{12,5}", |b| {
        b.iter(|| m1_digraph(black_box(&d)))
    });
}

fn bench_matching(c: &mut Criterion) {
    let corpus = connected_corpus(7);
    c.bench_function("matching/connected_n7_corpus", |b| {
        b.iter_batched(
            || corpus.clone(),
            |graphs| {
                let mut total = 0usize;
                for g in &graphs {
                    total += matching_number(g);
                }
                total
            },
            BatchSize::SmallInput,
        )
    });
}

fn bench_canonical(c: &mut Criterion) {
    for (name, g) in scan_targets() {
        c.bench_function(&format!("canonical_graph/{name}"), |b| {
            b.iter(|| canonical_graph(black_box(&g)).unwrap())
        });
    }
}

fn bench_enumeration(c: &mut Criterion) {
    c.bench_function("enumerate/bicyclic_n7", |b| {
        b.iter(|| enumerate_connected_excess(black_box(7), 1).unwrap())
    });
    c.bench_function("enumerate/B(6,3)", |b| {
        b.iter(|| enumerate_class(&ClassQuery::new(Family::Bicyclic, 6, 3)).unwrap())
    });
}

fn bench_verification(c: &mut Criterion) {
    for (name, g) in scan_targets() {
        c.bench_function(&format!("max_orientation_m1/{name}"), |b| {
            b.iter(|| max_orientation_m1(black_box(&g)).unwrap())
        });
    }
    c.bench_function("verify_theorem/B(8,4)", |b| {
        b.iter(|| verify_theorem(&ClassQuery::new(Family::Bicyclic, 8, 4)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_indices,
    bench_matching,
    bench_canonical,
    bench_enumeration,
    bench_verification
);
criterion_main!(benches);
