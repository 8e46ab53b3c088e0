use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use qdeg_core::{verify_suite, Execution, Options, Parabolic, RootSystem, TypeLetter};

fn suites(c: &mut Criterion) {
    let cases = [
        ("main", TypeLetter::B, 3, vec![]),
        ("delta-props", TypeLetter::A, 3, vec![1]),
        ("zd", TypeLetter::C, 3, vec![]),
    ];
    let mut group = c.benchmark_group("suites");
    group.sample_size(10);
    for (name, letter, rank, inner) in cases {
        let rs = RootSystem::new(letter, rank).unwrap();
        let p = Parabolic::from_indices(rank, &inner).unwrap();
        for (label, exec) in [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)] {
            let opts = Options { exec, ..Options::default() };
            let id = BenchmarkId::new(format!("{name} {}", rs.name()), label);
            group.bench_function(id, |b| {
                b.iter(|| {
                    let r = verify_suite(name, &rs, Some(&p), &opts).unwrap();
                    assert!(r.passed());
                })
            });
        }
    }
    group.finish();
}

criterion_group!(benches, suites);
criterion_main!(benches);
