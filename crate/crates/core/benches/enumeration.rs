//! Sequential (`jobs = 1`) against pooled enumeration. Build with
//! `--no-default-features` to time the fallback path for both rows.

use std::hint::black_box;
use std::time::Duration;

use asc_core::enumeration::{count_classes_jobs, GenSpec};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn workloads() -> Vec<(&'static str, GenSpec)> {
    vec![
        ("connected-8", GenSpec::connected(8)),
        ("cubic-12", GenSpec::connected(12).regular(3)),
        (
            "sparse-13-girth-6",
            GenSpec::connected(13).size_range(13, 15).min_girth(6),
        ),
    ]
}

fn sequential_vs_parallel(c: &mut Criterion) {
    let mut group = c.benchmark_group("count_classes");
    group.sample_size(10).measurement_time(Duration::from_secs(5));
    for (name, spec) in workloads() {
        group.bench_with_input(BenchmarkId::new("sequential", name), &spec, |b, s| {
            b.iter(|| count_classes_jobs(black_box(s), 1).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("parallel", name), &spec, |b, s| {
            b.iter(|| count_classes_jobs(black_box(s), 0).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, sequential_vs_parallel);
criterion_main!(benches);
