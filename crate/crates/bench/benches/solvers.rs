use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use plhom::analysis::{default_tolerance, witness_report};
use plhom::classifier::classify;
use plhom::exact_algebra::int;
use plhom::interpolation::MonomialMatrix;
use plhom::partition::{BruteForce, Elimination, SymMatrix};
use plhom::poly_solvers::{count_weighted_matchings, dispatch_solve, solve_affine_gauss, solve_ising};
use plhom_bench::grid;

fn ising(c: &mut Criterion) {
    let m = SymMatrix::from_ints(&[&[2, 1], &[1, 2]]).unwrap();
    let mut group = c.benchmark_group("ising_grid");
    for side in [3usize, 4] {
        let g = grid(side, side);
        group.bench_with_input(BenchmarkId::new("fkt", side), &g, |b, g| {
            b.iter(|| solve_ising(&int(2), &int(1), g.graph(), Some(g)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("brute", side), &g, |b, g| b.iter(|| BruteForce::default().z(&m, g.graph()).unwrap()));
        group.bench_with_input(BenchmarkId::new("elimination", side), &g, |b, g| b.iter(|| Elimination::default().z(&m, g.graph()).unwrap()));
    }
    let big = grid(8, 8);
    group.bench_function("fkt/8", |b| b.iter(|| solve_ising(&int(2), &int(1), big.graph(), Some(&big)).unwrap()));
    group.finish();
}

fn matchings(c: &mut Criterion) {
    let g = grid(6, 6);
    let weights = vec![int(1); g.graph().edge_count()];
    c.bench_function("perfect_matchings_grid6", |b| b.iter(|| count_weighted_matchings(black_box(&g), &weights).unwrap()));
}

fn gauss(c: &mut Criterion) {
    let g = grid(10, 10);
    c.bench_function("gauss_sum_grid10", |b| b.iter(|| solve_affine_gauss(&int(1), true, false, black_box(g.graph()))));
}

fn dispatch(c: &mut Criterion) {
    let m = SymMatrix::from_ints(&[&[1, 2, 3], &[2, 4, 6], &[3, 6, 9]]).unwrap();
    let cls = classify(&m);
    let g = grid(7, 7);
    c.bench_function("rank_one_grid7", |b| b.iter(|| dispatch_solve(&m, g.graph(), Some(&g), &cls).unwrap()));
    let hard = SymMatrix::from_ints(&[&[4, 2, 1], &[2, 4, 2], &[1, 2, 4]]).unwrap();
    c.bench_function("classify_lattice_3x3", |b| b.iter(|| classify(black_box(&hard))));
}

fn witness(c: &mut Criterion) {
    let x = MonomialMatrix::from_rows(&[&[2, 1, 0], &[1, 2, 1], &[0, 1, 2]]).unwrap();
    let mut group = c.benchmark_group("witness_report");
    group.sample_size(10);
    group.bench_function("tridiagonal_50_digits", |b| b.iter(|| witness_report(&x, None, 50, &default_tolerance()).unwrap()));
    group.finish();
}

criterion_group!(benches, ising, matchings, gauss, dispatch, witness);
criterion_main!(benches);
