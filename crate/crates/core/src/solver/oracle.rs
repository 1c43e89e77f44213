use nalgebra::DVector;

use super::{reduce_problem, solve_spectral};
use crate::discretization::{BipartiteField, BoxDomain, ClosedField, DirichletOperator, Grid1D};
use crate::{Error, Result, C64};

/// Solves the discrete `(-Δ + U) u = 0` with `u = f` on the boundary of the
/// box by a direct (dense LU) solve. Returns `u` at the interior nodes.
pub fn laplace_oracle(f: impl Fn(&[f64]) -> f64, op: &DirichletOperator) -> Result<DVector<f64>> {
    let domain = op.domain();
    let n = domain.grid().n_cells();
    let inv_h2 = 1.0 / (domain.spacing() * domain.spacing());
    let rhs = DVector::from_iterator(
        domain.sites(),
        (0..domain.sites()).map(|s| {
            let idx = domain.site_indices(s);
            let mut acc = 0.0;
            for axis in 0..domain.dim() {
                for delta in [-1isize, 1] {
                    let mut nb = idx.clone();
                    nb[axis] = (nb[axis] as isize + delta) as usize;
                    if nb[axis] == 0 || nb[axis] == n {
                        let c = domain.closed_index(&nb);
                        acc += f(&domain.closed_point(c)) * inv_h2;
                    }
                }
            }
            acc
        }),
    );
    op.matrix()
        .clone()
        .lu()
        .solve(&rhs)
        .ok_or(Error::SingularSystem)
}

/// `Φ = Θ + F` at the interior nodes. On the boundary `Φ` is `F` itself.
pub fn compose_solution(theta: &BipartiteField, f: &ClosedField) -> Result<BipartiteField> {
    if theta.domain() != f.domain() {
        return Err(Error::GridMismatch);
    }
    theta.add(&f.interior())
}

/// Error of the composed solution against a tensor-product oracle over a
/// sequence of refinements.
#[derive(Debug, Clone)]
pub struct ConvergenceStudy {
    pub n_cells: Vec<usize>,
    /// `max |Φ_h - u ⊗ u|` over interior nodes.
    pub errors: Vec<f64>,
    /// Observed orders between consecutive refinements,
    /// `ln(e_k / e_{k+1}) / ln(h_k / h_{k+1})`.
    pub orders: Vec<f64>,
}

impl ConvergenceStudy {
    pub fn final_order(&self) -> Option<f64> {
        self.orders.last().copied()
    }
}

/// Runs the tensor-product check: boundary data `F(x, y) = g(x) g(y)` for a
/// real extension `g` of boundary values `f`, solved spectrally and compared
/// against `u(x) u(y)` with `u` the discrete harmonic extension of `f`.
pub fn tensor_oracle_study(
    length: f64,
    dim: usize,
    n_cells: &[usize],
    g: impl Fn(&[f64]) -> f64,
) -> Result<ConvergenceStudy> {
    let mut errors = Vec::with_capacity(n_cells.len());
    for &n in n_cells {
        let domain = BoxDomain::new(Grid1D::new(length, n)?, dim)?;
        let op = DirichletOperator::new(domain, None)?;
        let f = ClosedField::from_fn(domain, |x, y| C64::new(g(x) * g(y), 0.0));
        let problem = reduce_problem(&f, &op)?;
        let solution = solve_spectral(&problem)?;
        let phi = compose_solution(&solution.theta, &f)?;
        let u = laplace_oracle(&g, &op)?.map(|v| C64::new(v, 0.0));
        let oracle = BipartiteField::tensor(domain, &u, &u)?;
        errors.push(phi.max_diff(&oracle)?);
    }
    let orders = errors
        .windows(2)
        .zip(n_cells.windows(2))
        .map(|(e, n)| (e[0] / e[1]).ln() / (n[1] as f64 / n[0] as f64).ln())
        .collect();
    Ok(ConvergenceStudy {
        n_cells: n_cells.to_vec(),
        errors,
        orders,
    })
}
