use std::hint::black_box;

use bihom::corpus;
use bihom::exactfield::FieldKind;
use bihom::par::Execution;
use bihom::structures::StructureMaps;
use bihom::yangbaxter::{search_solutions, SearchMode, SearchOptions};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn search(c: &mut Criterion) {
    let mut group = c.benchmark_group("search");
    group.sample_size(10);
    let cases = [
        ("F3-diagonal-2-pairs", FieldKind::Prime(3), 2, SearchMode::Pairs),
        ("F2-upper-triangular", FieldKind::Prime(2), 3, SearchMode::Diagonal),
    ];
    for (name, kind, n, mode) in cases {
        let alg = if n == 3 { corpus::upper_triangular_in(kind).0 } else { corpus::diagonal(kind, n).0 };
        let maps = StructureMaps::identity(kind, n);
        let weight = kind.from_i64(-1);
        for exec in [Execution::Sequential, Execution::Parallel] {
            let opts = SearchOptions {
                execution: exec,
                ..SearchOptions::default()
            };
            group.bench_with_input(BenchmarkId::new(name, format!("{exec:?}")), &exec, |b, _| {
                b.iter(|| search_solutions(black_box(&alg), &maps, (&weight, &weight), mode, opts).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, search);
criterion_main!(benches);
