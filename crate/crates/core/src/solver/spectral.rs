use super::ReducedProblem;
use crate::discretization::BipartiteField;
use crate::{CMatrix, Result, C64};

/// Minimum-norm generalized solution expressed in the eigen-tensor basis.
#[derive(Debug, Clone)]
pub struct SpectralSolution {
    /// `C[i][j]`, coefficient of `q_i ⊗ q_j`. Hermitian.
    pub coefficients: CMatrix,
    pub theta: BipartiteField,
    /// Euclidean norm of the source coefficients sitting on zero gaps. These
    /// cannot be matched by any Θ and are dropped.
    pub kernel_obstruction: f64,
    /// Smallest `|λ_i - λ_j|` that divided a nonzero coefficient; infinite if none did.
    pub gap_floor: f64,
}

/// Solves `(λ_i - λ_j) C_ij = Ŵ_ij` with `Ŵ = Q^T W Q`, leaving `C_ij = 0` on
/// zero gaps (`|λ_i - λ_j| <= 1e-9 λ_max`). Incompatible source content is
/// reported through `kernel_obstruction`, never as an error.
pub fn solve_spectral(p: &ReducedProblem<'_>) -> Result<SpectralSolution> {
    let op = p.operator();
    let w_hat = op.to_eigenbasis(p.source().values());
    // exact anti-Hermitian part of Ŵ
    let w_hat = (&w_hat - w_hat.adjoint()) * C64::new(0.5, 0.0);

    let m = w_hat.nrows();
    let mut coefficients = CMatrix::zeros(m, m);
    let mut obstruction = 0.0;
    let mut gap_floor = f64::INFINITY;
    for i in 0..m {
        for j in 0..m {
            let w = w_hat[(i, j)];
            if op.is_zero_gap(i, j) {
                obstruction += w.norm_sqr();
            } else if w != C64::new(0.0, 0.0) {
                let gap = op.gap(i, j);
                gap_floor = gap_floor.min(gap.abs());
                coefficients[(i, j)] = w / gap;
            }
        }
    }
    debug_assert!(
        (0..m).all(|i| (0..m).all(|j| coefficients[(i, j)] == coefficients[(j, i)].conj()))
    );

    let theta =
        BipartiteField::new(op.domain(), op.from_eigenbasis(&coefficients))?.hermitian_project();
    Ok(SpectralSolution {
        coefficients,
        theta,
        kernel_obstruction: obstruction.sqrt(),
        gap_floor,
    })
}
