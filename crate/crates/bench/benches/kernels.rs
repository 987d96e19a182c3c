use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use refine_core::lab::genfun::{asm_genfun, dpp_genfun};
use refine_core::lab::matrices::{k_matrix, Refinement};
use refine_core::sixvertex::{ik_determinant, random_point, sv_partition_function};
use refine_core::{enumerate_asms, enumerate_dpps};

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate");
    for n in [5usize, 6] {
        g.bench_with_input(BenchmarkId::new("asm", n), &n, |b, &n| b.iter(|| enumerate_asms(n).count()));
        g.bench_with_input(BenchmarkId::new("dpp", n), &n, |b, &n| b.iter(|| enumerate_dpps(n as u32).count()));
        g.bench_with_input(BenchmarkId::new("asm_genfun", n), &n, |b, &n| b.iter(|| asm_genfun(n, 6).unwrap()));
    }
    g.finish();
}

fn determinants(c: &mut Criterion) {
    let mut g = c.benchmark_group("det_k");
    g.sample_size(10);
    for n in [4usize, 6, 7] {
        let k = k_matrix(n, Refinement::Doubly).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(n), &k, |b, k| b.iter(|| k.det().unwrap()));
    }
    g.finish();
}

fn polynomial_product(c: &mut Criterion) {
    let a = asm_genfun(5, 6).unwrap();
    let d = dpp_genfun(4, 6).unwrap();
    c.bench_function("mpoly_mul_z5_z4", |b| b.iter(|| black_box(&a) * black_box(&d)));
}

fn six_vertex(c: &mut Criterion) {
    let mut g = c.benchmark_group("six_vertex");
    for n in [3usize, 4] {
        let p = random_point(n, &mut ChaCha8Rng::seed_from_u64(1));
        g.bench_with_input(BenchmarkId::new("determinant", n), &p, |b, p| b.iter(|| ik_determinant(p).unwrap()));
        g.bench_with_input(BenchmarkId::new("brute_force", n), &p, |b, p| {
            b.iter(|| sv_partition_function(p, 5).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, enumeration, determinants, polynomial_product, six_vertex);
criterion_main!(benches);
