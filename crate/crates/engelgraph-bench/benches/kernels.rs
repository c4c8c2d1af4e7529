use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use engelgraph_bench::catalog_group;
use engelgraph_core::digraph::{self, GraphKind};
use engelgraph_core::engel::{self, BuildOptions};
use engelgraph_core::{structure, Permutation};

fn bench_enumeration(c: &mut Criterion) {
    let gens = [
        Permutation::parse_cycles(6, "(1,2)").unwrap(),
        Permutation::parse_cycles(6, "(1,2,3,4,5,6)").unwrap(),
    ];
    c.bench_function("enumerate S6", |b| {
        b.iter(|| engelgraph_core::Group::enumerate(black_box(&gens), "S6").unwrap())
    });
}

fn bench_mult(c: &mut Criterion) {
    let s6 = catalog_group("S6"); // table-backed
    let psl = catalog_group("PSL2(13)"); // table-backed, larger
    let mut group = c.benchmark_group("id mult");
    group.bench_function("S6 table", |b| {
        b.iter(|| {
            let mut acc = 0u32;
            for x in 0..720u32 {
                acc ^= s6.mult(black_box(x), black_box((x * 37 + 11) % 720));
            }
            acc
        })
    });
    group.bench_function("PSL2(13) table", |b| {
        b.iter(|| {
            let mut acc = 0u32;
            for x in 0..1092u32 {
                acc ^= psl.mult(black_box(x), black_box((x * 41 + 7) % 1092));
            }
            acc
        })
    });
    group.finish();
}

fn bench_engel_trace(c: &mut Criterion) {
    let a5 = catalog_group("A5");
    c.bench_function("engel arcs A5 (all pairs)", |b| {
        b.iter(|| {
            let mut arcs = 0u32;
            for x in a5.ids() {
                for y in a5.ids() {
                    if engel::reach_depth(&a5, black_box(x), black_box(y)).is_some() {
                        arcs += 1;
                    }
                }
            }
            arcs
        })
    });
}

fn bench_graph_builds(c: &mut Criterion) {
    let mut group = c.benchmark_group("build gamma");
    for name in ["S4", "A5", "S5", "PSL2(7)"] {
        let g = catalog_group(name);
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
            b.iter(|| engel::build_gamma(g, &BuildOptions::default()).unwrap())
        });
    }
    group.finish();
}

fn bench_diameter(c: &mut Criterion) {
    let g = catalog_group("PSL2(7)");
    let gamma = engel::build_gamma(&g, &BuildOptions::default()).unwrap();
    let mut group = c.benchmark_group("graph analytics");
    group.bench_function("scc PSL2(7)", |b| b.iter(|| digraph::scc(black_box(&gamma))));
    group.bench_function("all-pairs diameter PSL2(7)", |b| {
        b.iter(|| digraph::diameter(black_box(&gamma)))
    });
    group.finish();
}

fn bench_structure(c: &mut Criterion) {
    let s6 = catalog_group("S6");
    let mut group = c.benchmark_group("structure");
    group.bench_function("fitting S6", |b| b.iter(|| structure::fitting(black_box(&s6))));
    group.bench_function("hypercenter S6", |b| {
        b.iter(|| structure::hypercenter(black_box(&s6)))
    });
    group.bench_function("sylow automizer S6 p=3", |b| {
        b.iter(|| structure::sylow_automizer(black_box(&s6), 3).unwrap())
    });
    group.finish();
}

fn bench_commuting(c: &mut Criterion) {
    let g = catalog_group("A6");
    c.bench_function("commuting graph A6", |b| {
        b.iter(|| engel::build_graph(&g, GraphKind::Commuting, &BuildOptions::default()).unwrap())
    });
}

criterion_group!(
    benches,
    bench_enumeration,
    bench_mult,
    bench_engel_trace,
    bench_graph_builds,
    bench_diameter,
    bench_structure,
    bench_commuting
);
criterion_main!(benches);
