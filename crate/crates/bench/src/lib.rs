//! Deterministic problem fixtures shared by the benchmarks.

use vnlw_core::discretization::{BoxDomain, ClosedField, DirichletOperator, Grid1D};
use vnlw_core::{BipartiteField, CMatrix, C64};

pub fn operator(n_cells: usize, dim: usize) -> DirichletOperator {
    let domain = BoxDomain::new(Grid1D::new(1.0, n_cells).expect("grid"), dim).expect("domain");
    DirichletOperator::new(domain, None).expect("operator")
}

/// `F = x² y²` (products of squared coordinates on squares).
pub fn quadratic_boundary(op: &DirichletOperator) -> ClosedField {
    let g = |p: &[f64]| p.iter().map(|v| v * v).product::<f64>();
    ClosedField::from_fn(op.domain(), |x, y| C64::new(g(x) * g(y), 0.0))
}

/// Anti-Hermitian source with a fixed pattern on every nonzero gap.
pub fn gap_source(op: &DirichletOperator) -> BipartiteField {
    let m = op.sites();
    let mut w_hat = CMatrix::zeros(m, m);
    for i in 0..m {
        for j in 0..i {
            if !op.is_zero_gap(i, j) {
                let z = C64::new(
                    ((i * 7 + j * 3) % 5) as f64 - 2.0,
                    ((i + 2 * j) % 3) as f64 - 1.0,
                );
                w_hat[(i, j)] = z;
                w_hat[(j, i)] = -z.conj();
            }
        }
    }
    BipartiteField::new(op.domain(), op.from_eigenbasis(&w_hat)).expect("field")
}

/// Density of the normalized sum of the lowest three modes.
pub fn coherent_density(op: &DirichletOperator) -> BipartiteField {
    let psi = (op.mode(0) + op.mode(1) + op.mode(2)) * C64::new(1.0 / 3f64.sqrt(), 0.0);
    BipartiteField::tensor(op.domain(), &psi, &psi.conjugate()).expect("field")
}
