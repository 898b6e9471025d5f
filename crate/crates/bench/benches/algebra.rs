use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gwa_bench::{additive, dense_element, multiplicative};
use gwa_kit::{
    from_profile, gwa_mul, max_embedding, noeth_chain_check, normalize, FactorProfile, ProfileEntry, Sign,
    DEFAULT_MAX_ORACLE_DIM,
};

fn multiplication(c: &mut Criterion) {
    let a = additive(&[(0, 2), (5, 1)]);
    let mut group = c.benchmark_group("gwa_mul");
    for n in [2, 4, 8] {
        let u = dense_element(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &u, |b, u| {
            b.iter(|| gwa_mul(&a, black_box(u), black_box(u)))
        });
    }
    group.finish();
}

fn normalization(c: &mut Criterion) {
    let additive_orbit = additive(&[(0, 1), (1, 2), (3, 1), (7, 2)]);
    c.bench_function("normalize additive", |b| b.iter(|| normalize(black_box(&additive_orbit))));
    let scattered = multiplicative(2, &[(1, 1), (2, 2), (8, 1), (3, 2), (12, 1)]);
    c.bench_function("normalize multiplicative", |b| b.iter(|| normalize(black_box(&scattered))));
}

fn chain(c: &mut Criterion) {
    let a = additive(&[(0, 2)]);
    let mut group = c.benchmark_group("noeth_chain_check");
    group.sample_size(10);
    for m in [4, 6, 8] {
        group.bench_with_input(BenchmarkId::from_parameter(m), &m, |b, &m| {
            b.iter(|| noeth_chain_check(&a, m, DEFAULT_MAX_ORACLE_DIM))
        });
    }
    group.finish();
}

fn embeddings(c: &mut Criterion) {
    let a = multiplicative(2, &[(1, 2), (3, 3)]);
    let profile = |flip: i64| {
        let mut entries = Vec::new();
        for n in -4..=4 {
            for (k, (alpha, _)) in a.f().roots().iter().enumerate() {
                let minus = (n + flip + k as i64).rem_euclid(3) == 0;
                let sign = if minus { Sign::Minus } else { Sign::Plus };
                entries.push(ProfileEntry { alpha: alpha.clone(), n, sign });
            }
        }
        FactorProfile { from: -4, to: 4, entries }
    };
    let p = from_profile(&a, &profile(0)).expect("complete profile");
    let q = from_profile(&a, &profile(1)).expect("complete profile");
    c.bench_function("max_embedding", |b| b.iter(|| max_embedding(&a, black_box(&p), black_box(&q))));
}

criterion_group!(benches, multiplication, normalization, chain, embeddings);
criterion_main!(benches);
