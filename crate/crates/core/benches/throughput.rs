use std::hint::black_box;
use std::path::Path;

use criterion::{criterion_group, criterion_main, Criterion};
use itn::eval::{evaluate, evaluate_sequential, load_corpus};
use itn::Normalizer;

fn bench(c: &mut Criterion) {
    let normalizer = Normalizer::bundled().expect("bundled grammars compile");
    let corpus =
        load_corpus(Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/mini-corpus.tsv"))
            .expect("mini-corpus loads");
    let lines: Vec<String> = corpus
        .iter()
        .map(|s| {
            s.iter()
                .map(|r| r.spoken.as_str())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect();

    let mut group = c.benchmark_group("evaluate");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| evaluate(black_box(&corpus), &normalizer))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| evaluate_sequential(black_box(&corpus), &normalizer))
    });
    group.finish();

    let mut group = c.benchmark_group("normalize_batch");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| normalizer.normalize_batch(black_box(&lines)))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| normalizer.normalize_batch_sequential(black_box(&lines)))
    });
    group.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
