use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use fibpal_core::counting::occurrence_count;
use fibpal_core::fibword::prefix;
use fibpal_core::oracle::Eertree;
use fibpal_core::BigUint;

fn bench(c: &mut Criterion) {
    let mut g = c.benchmark_group("B(n)");
    g.sample_size(10);
    for n in [10_000u64, 100_000, 1_000_000, 10_000_000] {
        let big = BigUint::from(n);
        g.bench_with_input(BenchmarkId::new("closed-form", n), &big, |b, n| {
            b.iter(|| occurrence_count(black_box(n)))
        });
        let word = prefix(n).unwrap();
        g.bench_with_input(BenchmarkId::new("eertree", n), &word, |b, w| {
            b.iter(|| {
                let t = Eertree::build(black_box(w));
                t.suffix_counts().iter().map(|&v| v as u64).sum::<u64>()
            })
        });
    }
    let huge = BigUint::from(10u32).pow(18);
    g.bench_function("closed-form/1e18", |b| b.iter(|| occurrence_count(black_box(&huge))));
    g.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
