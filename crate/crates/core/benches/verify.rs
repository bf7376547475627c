use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use fibideal::kr::{lambda_eval, run_verification, Suite};
use fibideal::Exec;

criterion_group!(benches, verify_suites, lambda_by_eval);
criterion_main!(benches);

fn modes() -> [(&'static str, Exec); 2] {
    [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)]
}

fn verify_suites(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    for suite in [Suite::Theorem, Suite::Lattice, Suite::Shape] {
        for (label, exec) in modes() {
            group.bench_with_input(BenchmarkId::new(suite.name(), label), &exec, |b, &exec| {
                b.iter(|| run_verification(black_box(150), &[suite], 60, exec))
            });
        }
    }
    group.finish();
}

fn lambda_by_eval(c: &mut Criterion) {
    let mut group = c.benchmark_group("lambda_eval");
    group.sample_size(10);
    for (label, exec) in modes() {
        group.bench_function(label, |b| {
            b.iter(|| exec.map_range(1..=black_box(200), |n| lambda_eval(n).map(|r| r.value)))
        });
    }
    group.finish();
}
