use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hoconvex::identities::{self, SuiteConfig};
use hoconvex::{
    check_convexity, counterexample_f, CheckConfig, ConvexityKind, Execution, Radicand,
};

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn convexity_campaigns(c: &mut Criterion) {
    let mut group = c.benchmark_group("check_convexity");
    group.sample_size(10);
    for n in [2u32, 4] {
        let f = counterexample_f(n, Radicand::DEFAULT).unwrap();
        let kind = ConvexityKind::wright(n).unwrap();
        for (label, execution) in MODES {
            let config = CheckConfig {
                execution,
                ..CheckConfig::with_samples(200)
            };
            group.bench_with_input(
                BenchmarkId::new(label, format!("wright n={n}")),
                &config,
                |b, config| b.iter(|| check_convexity(&f, &kind, config, 42).unwrap()),
            );
        }
    }
    group.finish();
}

fn identity_suites(c: &mut Criterion) {
    let mut group = c.benchmark_group("identities");
    group.sample_size(10);
    for (label, execution) in MODES {
        let config = SuiteConfig {
            n_max: 5,
            samples: 100,
            execution,
            ..SuiteConfig::default()
        };
        group.bench_function(BenchmarkId::new(label, "run_all"), |b| {
            b.iter(|| identities::run_all(&config).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, convexity_campaigns, identity_suites);
criterion_main!(benches);
