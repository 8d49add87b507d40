use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use poisson_core::catalog;
use poisson_core::complexes::{duality_report_with, homology_dims_with, Coefficients};
use poisson_core::envelope::gr_dimension_check_with;
use poisson_core::Execution;

fn modes() -> Vec<(&'static str, Execution)> {
    let mut m = vec![("sequential", Execution::Sequential)];
    #[cfg(feature = "parallel")]
    m.push(("parallel", Execution::Parallel));
    m
}

fn homology(c: &mut Criterion) {
    let mut group = c.benchmark_group("homology_w10");
    group.sample_size(10);
    for id in ["quad3", "logcan3", "jacobian"] {
        let s = catalog::get(id).unwrap().structure();
        for (name, exec) in modes() {
            group.bench_with_input(BenchmarkId::new(name, id), &s, |b, s| {
                b.iter(|| homology_dims_with(exec, black_box(s), Coefficients::Omega, 10).unwrap())
            });
        }
    }
    group.finish();
}

fn duality(c: &mut Criterion) {
    let mut group = c.benchmark_group("duality_w8");
    group.sample_size(10);
    let s = catalog::get("so3").unwrap().structure();
    for (name, exec) in modes() {
        group.bench_function(name, |b| {
            b.iter(|| duality_report_with(exec, black_box(&s), 8).unwrap())
        });
    }
    group.finish();
}

fn associated_graded(c: &mut Criterion) {
    let mut group = c.benchmark_group("gr_p3_w6");
    group.sample_size(10);
    let s = catalog::get("quad3").unwrap().structure();
    for (name, exec) in modes() {
        group.bench_function(name, |b| {
            b.iter(|| gr_dimension_check_with(exec, black_box(&s), 3, 6))
        });
    }
    group.finish();
}

criterion_group!(benches, homology, duality, associated_graded);
criterion_main!(benches);
