use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use wcarg::oracle::Oracle;
use wcarg::principles::{principle_report, random_framework, SampleSpec};
use wcarg::weakly_complete::ground_based_search;
use wcarg::{Config, Execution, Semantics};

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn report(c: &mut Criterion) {
    let spec = SampleSpec {
        samples: 120,
        ..SampleSpec::default()
    };
    let semantics = [Semantics::WeaklyComplete, Semantics::UbPreferred];
    let mut group = c.benchmark_group("principle_report");
    group.sample_size(10);
    for (name, mode) in MODES {
        let cfg = Config::default().with_execution(mode);
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| principle_report(&semantics, &spec, &cfg).unwrap())
        });
    }
    group.finish();
}

fn oracle_scan(c: &mut Criterion) {
    let fw = random_framework(11, 0.2, 5);
    let mut group = c.benchmark_group("oracle_scan");
    group.sample_size(10);
    for (name, mode) in MODES {
        let oracle = Oracle::default().with_execution(mode);
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| oracle.brute_force_weakly_complete(&fw).unwrap())
        });
    }
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    // sparse graphs keep many arguments undecided, so the search tree is wide
    let fw = random_framework(22, 0.08, 11);
    let mut group = c.benchmark_group("ground_based_search");
    group.sample_size(10);
    for (name, mode) in MODES {
        let cfg = Config::default().with_execution(mode);
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| ground_based_search(&fw, &cfg).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, report, oracle_scan, enumeration);
criterion_main!(benches);
