use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use sectoria_bench::{gaussian, hermitian};
use sectoria_core::linalg::{herm_eigen, matrix_exp};
use sectoria_core::numrange::compute_hull;
use sectoria_core::regions::Angle;
use sectoria_core::sectorial::random_sectorial;
use sectoria_core::semigroup::euler_error_table;

const DIMS: [usize; 3] = [4, 8, 16];

fn eigen(c: &mut Criterion) {
    let mut g = c.benchmark_group("herm_eigen");
    for n in DIMS {
        let h = hermitian(n, 11);
        g.bench_with_input(BenchmarkId::from_parameter(n), &h, |b, h| b.iter(|| herm_eigen(black_box(h)).unwrap()));
    }
    g.finish();
}

fn exp(c: &mut Criterion) {
    let mut g = c.benchmark_group("matrix_exp");
    for n in DIMS {
        let a = gaussian(n, 12);
        g.bench_with_input(BenchmarkId::from_parameter(n), &a, |b, a| b.iter(|| matrix_exp(black_box(a))));
    }
    g.finish();
}

fn hull(c: &mut Criterion) {
    let mut g = c.benchmark_group("compute_hull_720");
    g.sample_size(20);
    for n in DIMS {
        let a = gaussian(n, 13);
        g.bench_with_input(BenchmarkId::from_parameter(n), &a, |b, a| b.iter(|| compute_hull(black_box(a), 720)));
    }
    g.finish();
}

fn euler(c: &mut Criterion) {
    let mut g = c.benchmark_group("euler_table_1_to_256");
    g.sample_size(20);
    let ns: Vec<u64> = (1..=256).collect();
    for n in [4, 8] {
        let sm = random_sectorial(n, Angle::new(0.6).unwrap(), 14).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(n), &sm, |b, sm| {
            b.iter(|| euler_error_table(black_box(sm), 1.0, &ns).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, eigen, exp, hull, euler);
criterion_main!(benches);
