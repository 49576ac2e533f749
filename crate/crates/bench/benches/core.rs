use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use mcg_cli::corpus::{generate, CorpusParams};
use mcg_core::conformal::{find_conformal_minor, Pattern};
use mcg_core::cuts::tight_cut_decomposition;
use mcg_core::families;
use mcg_core::iso::are_isomorphic;
use mcg_core::matching::{enumerate_perfect_matchings, maximum_matching};
use mcg_core::shore::splice_default;
use mcg_core::solidity::{is_solid, rw_certificate};
use mcg_core::thin::reduce_to_terminal;
use mcg_core::{Config, VertexId};

fn matchings(c: &mut Criterion) {
    let g = families::prism(12).unwrap();
    c.bench_function("blossom prism(12)", |b| {
        b.iter(|| maximum_matching(black_box(&g)))
    });
    c.bench_function("enumerate prism(12)", |b| {
        b.iter(|| enumerate_perfect_matchings(black_box(&g), &Config::default()).unwrap())
    });
}

fn structure(c: &mut Criterion) {
    let cfg = Config::default();
    let k33 = families::complete_bipartite(6).unwrap();
    let g = splice_default(&families::c6bar(), VertexId(0), &k33, VertexId(0))
        .unwrap()
        .graph;
    c.bench_function("decompose c6bar (.) k3,3", |b| {
        b.iter(|| tight_cut_decomposition(black_box(&g), &cfg).unwrap())
    });
    let p = families::petersen();
    c.bench_function("is_solid petersen", |b| {
        b.iter(|| is_solid(black_box(&p), &cfg).unwrap())
    });
    c.bench_function("rw_certificate petersen", |b| {
        b.iter(|| rw_certificate(black_box(&p), &cfg).unwrap())
    });
    let t = families::tricorn();
    c.bench_function("strict reduction tricorn", |b| {
        b.iter(|| reduce_to_terminal(black_box(&t), true, &cfg).unwrap())
    });
    let q = families::prism(10).unwrap();
    c.bench_function("iso petersen vs prism(10)", |b| {
        b.iter(|| are_isomorphic(&p, black_box(&q)))
    });
}

fn conformal(c: &mut Criterion) {
    let cfg = Config::default();
    let p = families::petersen();
    c.bench_function("petersen c6bar-free", |b| {
        b.iter(|| find_conformal_minor(black_box(&p), Pattern::C6bar.graph(), &cfg).unwrap())
    });
    let s = families::staircase(12).unwrap();
    c.bench_function("staircase(12) c6bar-free", |b| {
        b.iter(|| find_conformal_minor(black_box(&s), Pattern::C6bar.graph(), &cfg).unwrap())
    });
}

fn corpus(c: &mut Criterion) {
    let mut group = c.benchmark_group("corpus");
    group.sample_size(10);
    group.bench_function("generate default", |b| {
        b.iter(|| generate(&CorpusParams::default()))
    });
    group.finish();
}

criterion_group!(benches, matchings, structure, conformal, corpus);
criterion_main!(benches);
