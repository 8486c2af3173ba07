use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use eqcodes::search::{count_labeled_sts, max_intersecting_family_with, SearchOptions};
use eqcodes::{enumerate_grassmannian, field, sunflower_code_binary, verify_linear};

fn bench_grassmannian(c: &mut Criterion) {
    let mut group = c.benchmark_group("grassmannian");
    for (q, n, k) in [(2, 6, 3), (3, 5, 2), (5, 4, 2)] {
        let f = field(q).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(format!("G_{q}({n},{k})")), &(n, k), |b, &(n, k)| {
            b.iter(|| enumerate_grassmannian(&f, n, k).unwrap().count())
        });
    }
    group.finish();
}

fn bench_verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_linear");
    for n in [4, 5, 6] {
        let code = sunflower_code_binary(n).unwrap();
        group.bench_with_input(BenchmarkId::new("sunflower", n), &code, |b, code| {
            b.iter(|| verify_linear(black_box(code)).unwrap())
        });
    }
    group.finish();
}

fn bench_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("search");
    group.sample_size(20);
    for n in [4, 5] {
        group.bench_with_input(BenchmarkId::new("census q=2 k=2", n), &n, |b, &n| {
            b.iter(|| max_intersecting_family_with(2, n, 2, 1, &SearchOptions::default()).unwrap())
        });
    }
    group.bench_function("labeled STS(9)", |b| b.iter(|| count_labeled_sts(9).unwrap()));
    group.finish();
}

criterion_group!(benches, bench_grassmannian, bench_verify, bench_search);
criterion_main!(benches);
