//! The weak Dirichlet problem on the discrete Hermitian space.
//!
//! The boundary-value problem `(-Δx + Δy) Φ = 0`, `Φ = F` on the boundary is
//! reduced to `(-Δx + Δy) Θ = W` with `Θ = Φ - F` vanishing on the boundary
//! ([`reduce_problem`]). A generalized solution is a Hermitian `Θ` with
//! `<Ψ, Θ> = l(Ψ)` for every Hermitian test field `Ψ`. It is computed two
//! independent ways: by division in the eigen-tensor basis
//! ([`solve_spectral`]) and by a dense Galerkin skew system
//! ([`solve_galerkin`]). Both return the minimum-norm solution. The
//! pairing annihilates the zero-gap (diagonal) modes.

mod galerkin;
mod oracle;
mod reduce;
mod residual;
mod spectral;

pub use galerkin::{discrete_hermitian_space, solve_galerkin, GalerkinSolver, GALERKIN_MAX_DIM};
pub use oracle::{compose_solution, laplace_oracle, tensor_oracle_study, ConvergenceStudy};
pub use reduce::{check_source_symmetry, reduce_problem, ReducedProblem};
pub use residual::weak_residual;
pub use spectral::{solve_spectral, SpectralSolution};
