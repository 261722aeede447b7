use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use sphere_fields::exactmath::factorize_int;
use sphere_fields::fields::{example4, random_points, sampled_independence, FieldFamily};
use sphere_fields::james::{nu_full, nu_refined, FieldTag};
use sphere_fields::{rho_oracle, rho_theorem8};

fn rho_routes(c: &mut Criterion) {
    let ns: Vec<_> = (1..=2000).map(|n| factorize_int(n).unwrap()).collect();
    let mut g = c.benchmark_group("rho_1_to_2000");
    for field in [FieldTag::C, FieldTag::H] {
        g.bench_with_input(BenchmarkId::new("direct", field), &field, |b, &f| {
            b.iter(|| ns.iter().map(|n| rho_theorem8(f, n).unwrap()).sum::<u64>())
        });
        g.bench_with_input(BenchmarkId::new("oracle", field), &field, |b, &f| {
            b.iter(|| ns.iter().map(|n| rho_oracle(f, n)).sum::<u64>())
        });
    }
    g.finish();
}

fn valuations(c: &mut Criterion) {
    let mut g = c.benchmark_group("nu");
    for m in [50u64, 200, 1000] {
        g.bench_with_input(BenchmarkId::new("full", m), &m, |b, &m| {
            b.iter(|| nu_full(FieldTag::C, 2, black_box(m)))
        });
        g.bench_with_input(BenchmarkId::new("refined", m), &m, |b, &m| {
            b.iter(|| nu_refined(FieldTag::C, 2, black_box(m)).unwrap())
        });
    }
    g.finish();
}

fn certification(c: &mut Criterion) {
    let mut g = c.benchmark_group("sampled_independence");
    g.sample_size(20);
    for dim in [8usize, 32, 64] {
        let (m1, m2) = example4(dim / 2).unwrap();
        let pair = FieldFamily::new(FieldTag::R, vec![m1, m2]).unwrap();
        let points = random_points(dim, 20, 1);
        g.bench_with_input(BenchmarkId::from_parameter(dim), &dim, |b, _| {
            b.iter(|| sampled_independence(&pair, &points).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, rho_routes, valuations, certification);
criterion_main!(benches);
