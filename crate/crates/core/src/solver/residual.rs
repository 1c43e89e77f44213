use super::ReducedProblem;
use crate::discretization::{hermitian_basis, BipartiteField};
use crate::{Error, Result, C64};

/// Weak-form defect of a candidate solution:
/// `max_k |<e_k, Θ> - l(e_k)| / max(1, |W|)` over the real Hermitian basis,
/// with `|W|` the quadrature L² norm of the source.
///
/// Uses the exact discrete summation by parts
/// `<e_k, Θ> = h^d Σ e_k conj((A ⊗ I - I ⊗ A) Θ)`, so the whole residual is
/// `h^d Σ e_k conj(AΘ - ΘA - W)`.
pub fn weak_residual(theta: &BipartiteField, p: &ReducedProblem<'_>) -> Result<f64> {
    let op = p.operator();
    if theta.domain() != op.domain() {
        return Err(Error::GridMismatch);
    }
    let defect = op.commutator(theta.values()) - p.source().values();
    let weight = C64::new(op.domain().product_weight(), 0.0);
    let worst = hermitian_basis(op.sites())
        .iter()
        .map(|e| (weight * e.pair_with(&defect)).norm())
        .fold(0.0, f64::max);
    Ok(worst / p.source().norm().max(1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discretization::{
        dirichlet_form, functional_l, DirichletOperator, FormKind, Grid1D,
    };
    use crate::solver::solve_spectral;
    use crate::CMatrix;

    fn gap_supported(op: &DirichletOperator) -> BipartiteField {
        let m = op.sites();
        let w_hat = CMatrix::from_fn(m, m, |i, j| {
            let (a, b) = (i as f64, j as f64);
            C64::new(a - b, (a * b + 1.0).sin() * if i == j { 0.0 } else { 1.0 })
        });
        BipartiteField::new(op.domain(), op.from_eigenbasis(&w_hat))
            .unwrap()
            .anti_hermitian_part()
    }

    #[test]
    fn agrees_with_literal_forms() {
        let op = DirichletOperator::interval(Grid1D::new(1.0, 6).unwrap(), None).unwrap();
        let p = ReducedProblem::from_source(gap_supported(&op), &op).unwrap();
        let theta = BipartiteField::from_fn(op.domain(), |x, y| {
            C64::new(x[0] * y[0], (x[0] - y[0]) * 0.3)
        });
        let literal = hermitian_basis(op.sites())
            .iter()
            .map(|e| {
                let f = e.to_field(op.domain());
                let a = dirichlet_form(&f, &theta, &op, FormKind::Anti).unwrap();
                (a - functional_l(&f, p.source()).unwrap()).norm()
            })
            .fold(0.0, f64::max)
            / p.source().norm().max(1.0);
        let fast = weak_residual(&theta, &p).unwrap();
        assert!((literal - fast).abs() <= 1e-12 * literal.max(1.0));
    }

    #[test]
    fn spectral_solution_has_tiny_residual_and_zero_does_not() {
        let op = DirichletOperator::interval(Grid1D::new(1.0, 9).unwrap(), None).unwrap();
        let p = ReducedProblem::from_source(gap_supported(&op), &op).unwrap();
        let sol = solve_spectral(&p).unwrap();
        assert!(weak_residual(&sol.theta, &p).unwrap() <= 1e-10);

        let zero = BipartiteField::zeros(op.domain());
        let expect = hermitian_basis(op.sites())
            .iter()
            .map(|e| {
                functional_l(&e.to_field(op.domain()), p.source())
                    .unwrap()
                    .norm()
            })
            .fold(0.0, f64::max)
            / p.source().norm().max(1.0);
        let got = weak_residual(&zero, &p).unwrap();
        assert!(got > 0.0);
        assert!((got - expect).abs() <= 1e-14 * expect);
    }
}
