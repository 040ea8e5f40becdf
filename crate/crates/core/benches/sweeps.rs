use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use primdisk::sweep::{four_primitives_sweep, obstruction_soundness, witness_sweep, Execution, DEFAULT_SEED};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn four_primitives(c: &mut Criterion) {
    let mut group = c.benchmark_group("four-primitives");
    group.sample_size(10);
    for pmax in [20, 30] {
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, pmax), &pmax, |b, &pmax| {
                b.iter(|| black_box(four_primitives_sweep(pmax, exec)))
            });
        }
    }
    group.finish();
}

fn witness(c: &mut Criterion) {
    let mut group = c.benchmark_group("witness-endpoints");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(name, |b| b.iter(|| black_box(witness_sweep(40, exec))));
    }
    group.finish();
}

fn obstruction(c: &mut Criterion) {
    let mut group = c.benchmark_group("obstruction-soundness");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| black_box(obstruction_soundness(DEFAULT_SEED, 2000, 30, exec)))
        });
    }
    group.finish();
}

criterion_group!(benches, four_primitives, witness, obstruction);
criterion_main!(benches);
