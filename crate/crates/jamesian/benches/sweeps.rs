//! Parallel versus sequential sweeps on the three hot loops: axiom-residual
//! scans over the interior lattice, transitivity-defect scans over random
//! triples, and raw grid fills. With `--no-default-features` the parallel
//! entry points fall back to the sequential code, so the pairs collapse.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use jamesian::{piecewise_identity, salzmann_loop, sweep, GridSpec, JamesianFunction};

fn transfer() -> JamesianFunction {
    JamesianFunction::loop_transfer(salzmann_loop(), piecewise_identity(0.1).unwrap()).unwrap()
}

fn bench_involutive_sweep(c: &mut Criterion) {
    let j = transfer();
    let pts = GridSpec::new(199).unwrap().points();
    let n = pts.len();
    let eval = |p: usize| {
        let (a, b) = (pts[p / n], pts[p % n]);
        (j.eval_unchecked(a, j.eval_unchecked(a, b)) - b).abs()
    };
    let mut group = c.benchmark_group("involutive_sweep_199x199");
    group.bench_function(BenchmarkId::new("sequential", n * n), |bench| {
        bench.iter(|| black_box(sweep::scan_max_seq(n * n, eval)))
    });
    group.bench_function(BenchmarkId::new("parallel", n * n), |bench| {
        bench.iter(|| black_box(sweep::scan_max(n * n, eval)))
    });
    group.finish();
}

fn bench_transitivity_sweep(c: &mut Criterion) {
    let j = transfer();
    let mut rng = StdRng::seed_from_u64(404);
    let triples: Vec<[f64; 3]> = (0..50_000)
        .map(|_| {
            [
                rng.random_range(0.001..0.999),
                rng.random_range(0.001..0.999),
                rng.random_range(0.001..0.999),
            ]
        })
        .collect();
    let eval = |i: usize| j.transitivity_at(triples[i]).2;
    let mut group = c.benchmark_group("transitivity_sweep_50k");
    group.bench_function("sequential", |bench| {
        bench.iter(|| black_box(sweep::scan_max_seq(triples.len(), eval)))
    });
    group.bench_function("parallel", |bench| {
        bench.iter(|| black_box(sweep::scan_max(triples.len(), eval)))
    });
    group.finish();
}

fn bench_grid_fill(c: &mut Criterion) {
    let j = transfer();
    let pts = GridSpec::new(299).unwrap().points();
    let n = pts.len();
    let eval = |p: usize| j.eval_unchecked(pts[p / n], pts[p % n]);
    let mut group = c.benchmark_group("grid_fill_299x299");
    group.bench_function("sequential", |bench| {
        bench.iter(|| black_box(sweep::map_collect_seq(n * n, eval)))
    });
    group.bench_function("parallel", |bench| {
        bench.iter(|| black_box(sweep::map_collect(n * n, eval)))
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_involutive_sweep,
    bench_transitivity_sweep,
    bench_grid_fill
);
criterion_main!(benches);
