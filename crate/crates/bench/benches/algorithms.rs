use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use mrsd_bench::{square_points, uniform_weights};
use mrsd_core::{
    brute_force_mrsd, complete_linkage, minimum_spanning_tree, mrsd_bipartition,
    mrsd_multipartition, single_linkage, MetricCheck, MrsdConfig,
};

fn spanning_tree(c: &mut Criterion) {
    let mut g = c.benchmark_group("minimum_spanning_tree");
    for n in [100, 200, 400] {
        let d = uniform_weights(n, n as u64);
        g.bench_with_input(BenchmarkId::from_parameter(n), &d, |b, d| {
            b.iter(|| minimum_spanning_tree(d))
        });
    }
    g.finish();
}

fn bipartition(c: &mut Criterion) {
    let mut g = c.benchmark_group("mrsd_bipartition");
    g.sample_size(10);
    for n in [50, 100, 200] {
        let d = uniform_weights(n, n as u64);
        g.bench_with_input(BenchmarkId::from_parameter(n), &d, |b, d| {
            b.iter(|| mrsd_bipartition(d).unwrap())
        });
    }
    g.finish();
}

fn multipartition(c: &mut Criterion) {
    let mut g = c.benchmark_group("mrsd_multipartition");
    g.sample_size(10);
    for n in [50, 100, 200] {
        let d = square_points(n, n as u64);
        for k in [3, 5] {
            let cfg = MrsdConfig::new(k).with_metric_check(MetricCheck::Skip);
            g.bench_with_input(BenchmarkId::new(format!("k{k}"), n), &d, |b, d| {
                b.iter(|| mrsd_multipartition(d, &cfg).unwrap())
            });
        }
    }
    g.finish();
}

fn baselines(c: &mut Criterion) {
    let mut g = c.benchmark_group("baselines");
    let d = square_points(100, 7);
    g.bench_function("single_linkage/100", |b| {
        b.iter(|| single_linkage(&d, 4).unwrap())
    });
    g.bench_function("complete_linkage/100", |b| {
        b.iter(|| complete_linkage(&d, 4).unwrap())
    });
    g.finish();
}

fn oracle(c: &mut Criterion) {
    let mut g = c.benchmark_group("brute_force_mrsd");
    g.sample_size(10);
    for n in [8, 10] {
        let d = square_points(n, n as u64);
        g.bench_with_input(BenchmarkId::new("k3", n), &d, |b, d| {
            b.iter(|| brute_force_mrsd(d, 3).unwrap())
        });
    }
    g.finish();
}

criterion_group!(
    benches,
    spanning_tree,
    bipartition,
    multipartition,
    baselines,
    oracle
);
criterion_main!(benches);
