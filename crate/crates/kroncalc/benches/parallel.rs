//! Benches for the data-parallel inner loops against the sequential path.
//!
//! With the default `parallel` feature the same workloads run in rayon
//! pools of 1, 2 and all cores; build with `--no-default-features` to get
//! the true sequential fallback under the same benchmark names and compare
//! via criterion baselines:
//!
//!   cargo bench -p kroncalc -- --save-baseline parallel
//!   cargo bench -p kroncalc --no-default-features -- --baseline parallel

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use kroncalc::bounds;
use kroncalc::chartab::full_table;
use kroncalc::kronecker::{kron_tensor, MaxStat, Oracle};
use kroncalc::with_thread_pool;

#[cfg(feature = "parallel")]
fn pool_variants() -> Vec<(&'static str, Option<usize>)> {
    vec![
        ("threads-1", Some(1)),
        ("threads-2", Some(2)),
        ("threads-all", None),
    ]
}

#[cfg(not(feature = "parallel"))]
fn pool_variants() -> Vec<(&'static str, Option<usize>)> {
    vec![("sequential", None)]
}

fn bench_character_table(c: &mut Criterion) {
    let mut group = c.benchmark_group("character_table");
    group.sample_size(10);
    for n in [10u32, 12] {
        for (label, threads) in pool_variants() {
            group.bench_with_input(BenchmarkId::new(label, n), &n, |b, &n| {
                b.iter(|| {
                    with_thread_pool(threads, || {
                        let oracle = Oracle::new();
                        full_table(&oracle.chars, n, 40).unwrap().n()
                    })
                })
            });
        }
    }
    group.finish();
}

fn bench_kron_tensor(c: &mut Criterion) {
    let mut group = c.benchmark_group("kron_tensor");
    group.sample_size(10);
    for n in [8u32, 9] {
        for (label, threads) in pool_variants() {
            group.bench_with_input(BenchmarkId::new(label, n), &n, |b, &n| {
                b.iter(|| {
                    with_thread_pool(threads, || {
                        let oracle = Oracle::new();
                        kron_tensor(&oracle, n, 14).unwrap().pool().len()
                    })
                })
            });
        }
    }
    group.finish();
}

fn bench_scan_max(c: &mut Criterion) {
    let mut group = c.benchmark_group("scan_max_k");
    group.sample_size(10);
    let n = 9u32;
    for (label, threads) in pool_variants() {
        group.bench_with_input(BenchmarkId::new(label, n), &n, |b, &n| {
            b.iter(|| {
                with_thread_pool(threads, || {
                    let oracle = Oracle::new();
                    oracle.scan_max(MaxStat::K, n, None, 14).unwrap().value
                })
            })
        });
    }
    group.finish();
}

fn bench_dominance_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep_main");
    group.sample_size(10);
    let n = 8u32;
    for (label, threads) in pool_variants() {
        group.bench_with_input(BenchmarkId::new(label, n), &n, |b, &n| {
            b.iter(|| {
                with_thread_pool(threads, || {
                    let oracle = Oracle::new();
                    bounds::sweep_main(&oracle, n, 3).unwrap().checked
                })
            })
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_character_table,
    bench_kron_tensor,
    bench_scan_max,
    bench_dominance_sweep
);
criterion_main!(benches);
