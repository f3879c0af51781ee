use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hq_bench::{bundled, cyclic_word};
use hq_core::rho::{j0_generators, rho_word};
use hq_core::universal::{brute_force_generators, generators_via_universal, universal_generators_reduced};
use hq_core::{PathElem, UniversalGraph};

fn universal(c: &mut Criterion) {
    let mut group = c.benchmark_group("universal");
    for m in [3u32, 5, 7] {
        let u = UniversalGraph::dihedral(m).unwrap();
        group.bench_with_input(BenchmarkId::new("closed_form", m), &u, |b, u| {
            b.iter(|| universal_generators_reduced(black_box(u)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("brute_force", m), &u, |b, u| {
            b.iter(|| brute_force_generators(black_box(u)).unwrap())
        });
    }
    group.finish();
}

fn generators(c: &mut Criterion) {
    let mut group = c.benchmark_group("generators");
    for name in ["b3_cell", "asymptotic_b3"] {
        let g = bundled(name);
        group.bench_with_input(BenchmarkId::new("defects", name), &g, |b, g| b.iter(|| j0_generators(black_box(g))));
        group.bench_with_input(BenchmarkId::new("via_universal", name), &g, |b, g| {
            b.iter(|| generators_via_universal(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn words(c: &mut Criterion) {
    let g = bundled("b3_cell");
    let mut group = c.benchmark_group("rho_word");
    for n in [4, 8, 12] {
        let w = cyclic_word(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &w, |b, w| {
            b.iter(|| rho_word(&g, black_box(w), &PathElem::vertex(0)))
        });
    }
    group.finish();
}

criterion_group!(benches, universal, generators, words);
criterion_main!(benches);
