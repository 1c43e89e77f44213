#![allow(dead_code)]

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use vnlw_core::discretization::{
    BipartiteField, BoxDomain, DirichletOperator, Grid1D, GridFunction,
};
use vnlw_core::{CMatrix, CVector, C64};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn complex(rng: &mut impl Rng) -> C64 {
    C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

pub fn interval_op(n_cells: usize) -> DirichletOperator {
    DirichletOperator::interval(Grid1D::new(1.0, n_cells).unwrap(), None).unwrap()
}

/// `(1/h²) tridiag(-1, 2, -1)` on `[0, 1]`, written out directly.
pub fn laplacian_1d(n_cells: usize) -> DMatrix<f64> {
    let m = n_cells - 1;
    let h = 1.0 / n_cells as f64;
    DMatrix::from_fn(m, m, |i, j| {
        let v = if i == j {
            2.0
        } else if i.abs_diff(j) == 1 {
            -1.0
        } else {
            0.0
        };
        v / (h * h)
    })
}

pub fn random_matrix(rng: &mut impl Rng, m: usize) -> CMatrix {
    CMatrix::from_fn(m, m, |_, _| complex(rng))
}

pub fn random_field(rng: &mut impl Rng, domain: BoxDomain) -> BipartiteField {
    BipartiteField::new(domain, random_matrix(rng, domain.sites())).unwrap()
}

pub fn random_hermitian(rng: &mut impl Rng, domain: BoxDomain) -> BipartiteField {
    random_field(rng, domain).hermitian_project()
}

pub fn random_state(rng: &mut impl Rng, domain: BoxDomain) -> GridFunction {
    let v = CVector::from_fn(domain.sites(), |_, _| complex(rng));
    GridFunction::new(domain, v).unwrap()
}

/// Random anti-Hermitian source with no content on zero gaps.
pub fn gap_supported_source(rng: &mut impl Rng, op: &DirichletOperator) -> BipartiteField {
    let m = op.sites();
    let mut w_hat = CMatrix::zeros(m, m);
    for i in 0..m {
        for j in 0..i {
            if !op.is_zero_gap(i, j) {
                let z = complex(rng);
                w_hat[(i, j)] = z;
                w_hat[(j, i)] = -z.conj();
            }
        }
    }
    BipartiteField::new(op.domain(), op.from_eigenbasis(&w_hat)).unwrap()
}

pub fn real_vector(rng: &mut impl Rng, k: usize) -> DVector<f64> {
    DVector::from_fn(k, |_, _| rng.gen_range(-1.0..1.0))
}

/// Numerical nullity of a real matrix from the eigenvalues of `M^T M`.
pub fn brute_force_nullity(m: &DMatrix<f64>) -> usize {
    let gram = m.transpose() * m;
    let eig = gram.symmetric_eigen();
    let top = eig.eigenvalues.iter().cloned().fold(0.0, f64::max);
    eig.eigenvalues
        .iter()
        .filter(|&&v| v <= 1e-12 * top)
        .count()
}

/// Matrix of `Θ ↦ AΘ - ΘA` on Hermitian `Θ`, in the coordinates
/// `Re Θ_ij (i <= j)`, `Im Θ_ij (i < j)` to real and imaginary parts of the
/// image.
pub fn commutator_matrix(a: &DMatrix<f64>) -> DMatrix<f64> {
    let m = a.nrows();
    let mut columns = Vec::new();
    for i in 0..m {
        for j in i..m {
            for imaginary in [false, true] {
                if imaginary && i == j {
                    continue;
                }
                let mut theta = CMatrix::zeros(m, m);
                let z = if imaginary {
                    C64::new(0.0, 1.0)
                } else {
                    C64::new(1.0, 0.0)
                };
                theta[(i, j)] = z;
                theta[(j, i)] = z.conj();
                let ac = a.map(|v| C64::new(v, 0.0));
                let image = &ac * &theta - &theta * &ac;
                let col: Vec<f64> = image
                    .iter()
                    .map(|z| z.re)
                    .chain(image.iter().map(|z| z.im))
                    .collect();
                columns.push(DVector::from_vec(col));
            }
        }
    }
    DMatrix::from_columns(&columns)
}
