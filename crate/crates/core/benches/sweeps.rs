use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use ehk::hecke::{Cocenter, Hecke};
use ehk::par::Exec;
use ehk::verify::{run_suite, SuiteParams};

const EXECS: [(&str, Exec); 2] = [
    ("sequential", Exec::Sequential),
    ("parallel", Exec::Parallel),
];

fn suites(c: &mut Criterion) {
    let mut g = c.benchmark_group("suites");
    g.sample_size(10);
    for (suite, bound) in [("jacobi", 2), ("biangular", 4), ("mouse", 0)] {
        for (name, exec) in EXECS {
            let p = SuiteParams {
                bound: (bound > 0).then_some(bound),
                exec,
                ..Default::default()
            };
            g.bench_with_input(BenchmarkId::new(suite, name), &p, |b, p| {
                b.iter(|| run_suite(suite, p).unwrap())
            });
        }
    }
    g.finish();
}

fn cocenter(c: &mut Criterion) {
    let mut g = c.benchmark_group("cocenter");
    g.sample_size(10);
    let h = Hecke::new(2, "1,-(1+t^2),t^2".parse().unwrap());
    for (name, exec) in EXECS {
        g.bench_function(name, |b| b.iter(|| Cocenter::new(&h, exec).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, suites, cocenter);
criterion_main!(benches);
