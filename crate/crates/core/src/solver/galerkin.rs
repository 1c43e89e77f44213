use nalgebra::DMatrix;

use super::ReducedProblem;
use crate::aip::{AntiInnerSpace, SkewSystem, ALGEBRAIC_TOL};
use crate::discretization::{hermitian_basis, BasisElement, BipartiteField, DirichletOperator};
use crate::{CMatrix, CVector, Error, Result, C64};

/// Largest dense Galerkin basis accepted: `(N-1)² <= 23²`, i.e. `N <= 24`
/// on an interval.
pub const GALERKIN_MAX_DIM: usize = 23 * 23;

/// Dense Galerkin discretisation of the weak problem over the real basis of
/// Hermitian fields. The skew matrix is factorised once and reused for every
/// source on the same operator.
#[derive(Debug, Clone)]
pub struct GalerkinSolver<'a> {
    op: &'a DirichletOperator,
    basis: Vec<BasisElement>,
    system: SkewSystem,
}

impl<'a> GalerkinSolver<'a> {
    pub fn new(op: &'a DirichletOperator) -> Result<Self> {
        let m = op.sites();
        let dim = m * m;
        if dim > GALERKIN_MAX_DIM {
            return Err(Error::TooLarge {
                dim,
                limit: GALERKIN_MAX_DIM,
            });
        }
        let basis = hermitian_basis(m);
        let domain = op.domain();
        let weight = domain.product_weight();
        // K[j][k] = -i anti(e_j, e_k), anti(e_j, e_k) = h^d Σ (A e_j - e_j A) conj(e_k)
        let commutators: Vec<CMatrix> = basis
            .iter()
            .map(|e| op.commutator(e.to_field(domain).values()))
            .collect();
        let k = DMatrix::from_fn(dim, dim, |j, l| {
            weight * basis[l].paired_by(&commutators[j]).im
        });
        Ok(GalerkinSolver {
            op,
            basis,
            system: SkewSystem::new(k),
        })
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn skew_matrix(&self) -> &DMatrix<f64> {
        self.system.matrix()
    }

    /// Dimension of the null space of the skew matrix.
    pub fn kernel_dim(&self) -> usize {
        self.system.nullity()
    }

    /// Minimum-norm `Θ` with `<e_j, Θ> = l(e_j)` in the least-squares sense
    /// and the residual `|K θ - c|`, `c_j = -i l(e_j)`.
    pub fn solve(&self, p: &ReducedProblem<'_>) -> Result<(BipartiteField, f64)> {
        let other = p.operator();
        if other.domain() != self.op.domain() || other.potential() != self.op.potential() {
            return Err(Error::GridMismatch);
        }
        let w = p.source().values();
        let weight = C64::new(self.op.domain().product_weight(), 0.0);
        let l_values: Vec<C64> = self.basis.iter().map(|e| weight * e.pair_with(w)).collect();
        let rep = self.system.represent(&l_values, ALGEBRAIC_TOL)?;
        let mut theta = BipartiteField::zeros(self.op.domain());
        for (c, e) in rep.coefficients.iter().zip(&self.basis) {
            for &(i, j, v) in &e.entries {
                theta.values_mut()[(i, j)] += v * *c;
            }
        }
        Ok((theta, rep.residual))
    }
}

/// One-shot Galerkin solve.
pub fn solve_galerkin(p: &ReducedProblem<'_>) -> Result<(BipartiteField, f64)> {
    GalerkinSolver::new(p.operator())?.solve(p)
}

/// The discrete Hermitian fields as an [`AntiInnerSpace`]: ambient space of
/// all fields (row-major `x · m + y`), metric `G = h^d (A ⊗ I)` so that
/// `(Ψ, Φ)_G` is the `S` form, and the real Hermitian basis.
pub fn discrete_hermitian_space(op: &DirichletOperator) -> Result<AntiInnerSpace> {
    let m = op.sites();
    let weight = op.domain().product_weight();
    let a = op.matrix().map(|v| C64::new(v * weight, 0.0));
    let metric = a.kronecker(&CMatrix::identity(m, m));
    let basis = hermitian_basis(m)
        .iter()
        .map(|e| {
            let mut v = CVector::zeros(m * m);
            for &(i, j, z) in &e.entries {
                v[i * m + j] = z;
            }
            v
        })
        .collect();
    AntiInnerSpace::new(basis, metric)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discretization::Grid1D;
    use crate::solver::solve_spectral;

    fn op(n: usize) -> DirichletOperator {
        DirichletOperator::interval(Grid1D::new(1.0, n).unwrap(), None).unwrap()
    }

    #[test]
    fn zero_source() {
        let op = op(6);
        let p = ReducedProblem::from_source(BipartiteField::zeros(op.domain()), &op).unwrap();
        let (theta, residual) = solve_galerkin(&p).unwrap();
        assert_eq!(theta.max_abs(), 0.0);
        assert_eq!(residual, 0.0);
    }

    #[test]
    fn diagonal_source_leaves_residual() {
        let op = op(3);
        let w_hat = CMatrix::identity(2, 2) * C64::new(0.0, 1.0);
        let w = BipartiteField::new(op.domain(), op.from_eigenbasis(&w_hat)).unwrap();
        let p = ReducedProblem::from_source(w, &op).unwrap();
        let (theta, residual) = solve_galerkin(&p).unwrap();
        assert!(theta.max_abs() < 1e-14);
        let h2 = op.domain().product_weight();
        assert!((residual - h2 * 2f64.sqrt()).abs() < 1e-14);
        assert!((residual - h2 * solve_spectral(&p).unwrap().kernel_obstruction).abs() < 1e-14);
    }

    #[test]
    fn skew_matrix_matches_space_gram() {
        let op = op(5);
        let solver = GalerkinSolver::new(&op).unwrap();
        let space = discrete_hermitian_space(&op).unwrap();
        let k = space.skew_gram();
        assert!((&k + k.transpose()).amax() == 0.0);
        assert!((solver.skew_matrix() - k).amax() < 1e-12 * solver.skew_matrix().amax());
        assert_eq!(solver.kernel_dim(), 4);
    }

    #[test]
    fn too_large_is_rejected() {
        let op = op(25);
        assert!(matches!(
            GalerkinSolver::new(&op),
            Err(Error::TooLarge { dim: 576, .. })
        ));
        assert!(GalerkinSolver::new(&self::op(24)).is_ok());
    }
}
