use super::{BipartiteField, DirichletOperator};
use crate::{CMatrix, Error, Result, C64};

/// Which discrete Dirichlet form to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormKind {
    /// x-gradients plus y-gradients: the Dirichlet inner product.
    Full,
    /// x-gradients only.
    S,
    /// x-gradients minus y-gradients: the anti-inner product.
    Anti,
}

/// `Σ a · conj(b)`.
pub fn frobenius(a: &CMatrix, b: &CMatrix) -> C64 {
    a.iter().zip(b.iter()).map(|(x, y)| x * y.conj()).sum()
}

/// Discrete Dirichlet forms, built from the stiffness operator so that
/// summation by parts holds exactly:
///
/// * `S(Ψ,Φ) = h^d Σ ((A ⊗ I) Ψ) conj(Φ)`
/// * `T(Ψ,Φ) = h^d Σ ((I ⊗ A) Ψ) conj(Φ)`
/// * full `= S + T`, anti `= S - T`.
///
/// With `U = 0`, `S` is exactly the discrete `∫ ∇_x Ψ · conj(∇_x Φ)`.
/// On Hermitian fields `T(Ψ,Φ) = S(Φ,Ψ)`.
pub fn dirichlet_form(
    psi: &BipartiteField,
    phi: &BipartiteField,
    op: &DirichletOperator,
    kind: FormKind,
) -> Result<C64> {
    psi.ensure_same_grid(phi)?;
    if psi.domain() != op.domain() {
        return Err(Error::GridMismatch);
    }
    let w = C64::new(psi.domain().product_weight(), 0.0);
    let s = || frobenius(&op.apply_x(psi.values()), phi.values());
    let t = || frobenius(&op.apply_y(psi.values()), phi.values());
    Ok(w * match kind {
        FormKind::S => s(),
        FormKind::Full => s() + t(),
        FormKind::Anti => s() - t(),
    })
}

/// `l(Ψ) = h^d Σ Ψ conj(W)`, the discrete `∫ Ψ conj(W)`.
pub fn functional_l(psi: &BipartiteField, w: &BipartiteField) -> Result<C64> {
    psi.ensure_same_grid(w)?;
    Ok(C64::new(psi.domain().product_weight(), 0.0) * frobenius(psi.values(), w.values()))
}
