use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use vnlw_bench::{coherent_density, gap_source, operator, quadratic_boundary};
use vnlw_core::evolution::{extract_gaps, propagate_vnlw};
use vnlw_core::solver::{reduce_problem, solve_spectral, weak_residual, GalerkinSolver};
use vnlw_core::{EvolutionConfig, ReducedProblem};

fn build_operator(c: &mut Criterion) {
    let mut group = c.benchmark_group("operator");
    for (n, dim) in [(64, 1), (256, 1), (16, 2)] {
        group.bench_with_input(
            BenchmarkId::new(format!("dim{dim}"), n),
            &(n, dim),
            |b, &(n, dim)| b.iter(|| operator(black_box(n), dim)),
        );
    }
    group.finish();
}

fn spectral(c: &mut Criterion) {
    let mut group = c.benchmark_group("spectral_solve");
    for (n, dim) in [(32, 1), (128, 1), (12, 2)] {
        let op = operator(n, dim);
        let f = quadratic_boundary(&op);
        group.bench_with_input(BenchmarkId::new(format!("dim{dim}"), n), &op, |b, op| {
            b.iter(|| {
                let p = reduce_problem(&f, op).unwrap();
                let sol = solve_spectral(&p).unwrap();
                weak_residual(&sol.theta, &p).unwrap()
            })
        });
    }
    group.finish();
}

fn galerkin(c: &mut Criterion) {
    let mut group = c.benchmark_group("galerkin");
    group.sample_size(10);
    for n in [8, 16] {
        let op = operator(n, 1);
        group.bench_with_input(BenchmarkId::new("assemble", n), &op, |b, op| {
            b.iter(|| GalerkinSolver::new(op).unwrap())
        });
        let solver = GalerkinSolver::new(&op).unwrap();
        let p = ReducedProblem::from_source(gap_source(&op), &op).unwrap();
        group.bench_with_input(BenchmarkId::new("solve", n), &p, |b, p| {
            b.iter(|| solver.solve(p).unwrap())
        });
    }
    group.finish();
}

fn evolution(c: &mut Criterion) {
    let mut group = c.benchmark_group("evolution");
    for n in [8, 32] {
        let op = operator(n, 1);
        let psi0 = coherent_density(&op);
        let cfg = EvolutionConfig::uniform(&op, 0.01, 256).unwrap();
        group.bench_with_input(BenchmarkId::new("propagate_256", n), &psi0, |b, psi0| {
            b.iter(|| propagate_vnlw(psi0, &cfg).unwrap())
        });
        let traj = propagate_vnlw(&psi0, &cfg).unwrap();
        group.bench_with_input(BenchmarkId::new("extract_gaps", n), &psi0, |b, probe| {
            b.iter(|| extract_gaps(&traj, probe).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, build_operator, spectral, galerkin, evolution);
criterion_main!(benches);
