use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use kdefect::par::Execution;
use kdefect::verify::{scan, Conjecture, ScanMode, ScanSpec};

fn specs() -> Vec<(&'static str, ScanSpec)> {
    let mut random = ScanSpec::new(
        Conjecture::Almost,
        ScanMode::RandomHypergraphs {
            samples: 200,
            seed: 1,
            max_edges: 14,
            max_edge_size: 3,
        },
    );
    random.n_range = 8..=12;

    let mut fns = ScanSpec::new(Conjecture::Frick, ScanMode::ExhaustiveFns);
    fns.n_range = 6..=14;
    fns.r_range = 3..=4;

    let mut families = ScanSpec::new(Conjecture::Almost, ScanMode::NamedFamilies);
    families.n_range = 6..=10;
    families.r_range = 2..=3;
    families.s_range = 2..=3;
    families.l_range = 1..=1;
    vec![("random-almost", random), ("exhaustive-frick", fns), ("families-almost", families)]
}

fn bench_scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("scan");
    group.sample_size(10);
    for (name, spec) in specs() {
        for exec in [Execution::Sequential, Execution::Parallel] {
            if exec == Execution::Parallel && !Execution::is_parallel_available() {
                continue;
            }
            let mut spec = spec.clone();
            spec.execution = exec;
            let label = if exec == Execution::Parallel { "parallel" } else { "sequential" };
            group.bench_with_input(BenchmarkId::new(name, label), &spec, |b, spec| {
                b.iter(|| black_box(scan(spec).unwrap()))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, bench_scan);
criterion_main!(benches);
