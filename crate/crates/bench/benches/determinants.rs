use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use recdet::families::{family_matrix, FamilyId, FamilyParams};
use recdet::hessenberg::random_hessenberg;
use recdet::{det_bareiss, det_hessenberg_fast, det_laplace, RingKind};

fn random_rational(c: &mut Criterion) {
    let mut group = c.benchmark_group("random-rational");
    for n in [4usize, 8, 16, 32, 64] {
        let m = random_hessenberg(n, RingKind::Rational, 0);
        group.bench_with_input(BenchmarkId::new("fast", n), &m, |b, m| b.iter(|| det_hessenberg_fast(m).unwrap()));
        group.bench_with_input(BenchmarkId::new("bareiss", n), &m, |b, m| b.iter(|| det_bareiss(m)));
        if n <= 8 {
            group.bench_with_input(BenchmarkId::new("laplace", n), &m, |b, m| b.iter(|| det_laplace(m).unwrap()));
        }
    }
    group.finish();
}

fn random_poly(c: &mut Criterion) {
    let mut group = c.benchmark_group("random-poly");
    for n in [4usize, 8, 16] {
        let m = random_hessenberg(n, RingKind::Poly, 0);
        group.bench_with_input(BenchmarkId::new("fast", n), &m, |b, m| b.iter(|| det_hessenberg_fast(m).unwrap()));
        group.bench_with_input(BenchmarkId::new("bareiss", n), &m, |b, m| b.iter(|| det_bareiss(m)));
    }
    group.finish();
}

fn legendre(c: &mut Criterion) {
    let mut group = c.benchmark_group("legendre");
    for n in [10usize, 20, 40] {
        let m = family_matrix(FamilyId::Legendre, n, &FamilyParams::none()).unwrap();
        group.bench_with_input(BenchmarkId::new("fast", n), &m, |b, m| b.iter(|| det_hessenberg_fast(m).unwrap()));
        group.bench_with_input(BenchmarkId::new("bareiss", n), &m, |b, m| b.iter(|| det_bareiss(m)));
    }
    group.finish();
}

criterion_group!(benches, random_rational, random_poly, legendre);
criterion_main!(benches);
