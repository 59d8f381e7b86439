use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use etheta::par::{default_workers, Executor};
use etheta::space::collect_topologies;
use etheta::verify::{self, catalog, Bounds, Tier, Universe};
use etheta::OperatorTable;

fn worker_counts() -> Vec<usize> {
    let mut w = vec![1, default_workers().max(2)];
    w.dedup();
    w
}

fn enumerate_five(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate-5-points");
    group.sample_size(10);
    for w in worker_counts() {
        let exec = Executor::new(w);
        group.bench_with_input(BenchmarkId::from_parameter(w), &exec, |b, exec| {
            b.iter(|| {
                let spaces = collect_topologies(5, false, exec).unwrap();
                black_box(exec.map(&spaces, |s| OperatorTable::new(s.clone()).theta_open().len()))
            })
        });
    }
    group.finish();
}

fn open_question(c: &mut Criterion) {
    let mut group = c.benchmark_group("open-question-3-points");
    group.sample_size(10);
    for w in worker_counts() {
        group.bench_with_input(BenchmarkId::from_parameter(w), &w, |b, &w| {
            b.iter(|| black_box(verify::search_question(&Bounds::new(3).with_workers(w)).unwrap()))
        });
    }
    group.finish();
}

fn core_suite(c: &mut Criterion) {
    let mut group = c.benchmark_group("core-suite-4-points");
    group.sample_size(10);
    for w in worker_counts() {
        group.bench_with_input(BenchmarkId::from_parameter(w), &w, |b, &w| {
            b.iter(|| {
                let u = Universe::new(Bounds::new(4).with_workers(w)).unwrap();
                black_box(verify::run_suite_in(&u, catalog().iter().filter(|c| c.tier == Tier::Core)))
            })
        });
    }
    group.finish();
}

criterion_group!(benches, enumerate_five, open_question, core_suite);
criterion_main!(benches);
