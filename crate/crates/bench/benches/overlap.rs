use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use overlap_bench::scrambled_tree;
use overlap_core::bounds::best_upper;
use overlap_core::constructions::{default_edge, edge_bound_rep};
use overlap_core::exact::{exact_phi, exact_pol, SearchConfig};
use overlap_core::families::{gen_biclique_minus_matching, gen_quadrangulation};
use overlap_core::planar::{plan_decompose, planar_phi_upper};
use overlap_core::tree::{skeleton, tree_overlap_rep, tree_overlap_rep_naive};
use overlap_core::Graph;
use std::hint::black_box;

fn trees(c: &mut Criterion) {
    let mut group = c.benchmark_group("trees");
    for n in [100, 1_000, 10_000] {
        let t = scrambled_tree(n);
        group.bench_with_input(BenchmarkId::new("skeleton", n), &t, |b, t| b.iter(|| skeleton(black_box(t))));
        group.bench_with_input(BenchmarkId::new("tree_overlap_rep", n), &t, |b, t| {
            b.iter(|| tree_overlap_rep(black_box(t)))
        });
        if n <= 1_000 {
            group.bench_with_input(BenchmarkId::new("tree_overlap_rep_naive", n), &t, |b, t| {
                b.iter(|| tree_overlap_rep_naive(black_box(t)))
            });
        }
    }
    group.finish();
}

fn exact(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact");
    group.sample_size(20);
    let cfg = SearchConfig::default();
    let par = SearchConfig { parallel: true, ..SearchConfig::default() };
    let c7 = Graph::cycle(7);
    group.bench_function("phi C7", |b| b.iter(|| exact_phi(black_box(&c7), &cfg)));
    group.bench_function("phi C7 parallel", |b| b.iter(|| exact_phi(black_box(&c7), &par)));
    let star = Graph::star(5);
    group.bench_function("pol K1,5", |b| b.iter(|| exact_pol(black_box(&star), &cfg)));
    group.finish();
}

fn constructions(c: &mut Criterion) {
    let mut group = c.benchmark_group("constructions");
    let g = gen_biclique_minus_matching(40).unwrap();
    let (u, v) = default_edge(&g).unwrap();
    group.bench_function("edge_bound_rep n=40", |b| b.iter(|| edge_bound_rep(black_box(&g), u, v)));
    let small = gen_biclique_minus_matching(12).unwrap();
    group.bench_function("best_upper n=12", |b| b.iter(|| best_upper(black_box(&small), None)));
    for n in [16, 64, 128] {
        let pg = gen_quadrangulation(n).unwrap();
        group.bench_with_input(BenchmarkId::new("plan_decompose", n), &pg, |b, pg| {
            b.iter(|| plan_decompose(black_box(pg)))
        });
        group.bench_with_input(BenchmarkId::new("planar_phi_upper", n), &pg, |b, pg| {
            b.iter(|| planar_phi_upper(black_box(pg)))
        });
    }
    group.finish();
}

criterion_group!(benches, trees, exact, constructions);
criterion_main!(benches);
