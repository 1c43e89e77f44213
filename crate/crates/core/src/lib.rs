//! Solvers for the Dirichlet problem of the stationary von Neumann-Landau
//! wave equation `(-Δx + Δy) Φ = 0` on product box domains `Ω × Ω`.
//!
//! The crate is organised bottom-up:
//!
//! * [`aip`] - finite-dimensional anti-inner product spaces, axiom and
//!   separation diagnostics, and the representation solver for purely
//!   imaginary functionals.
//! * [`discretization`] - grids, discrete Dirichlet operators with their
//!   eigendecompositions, bipartite fields and the discrete Dirichlet forms.
//! * [`solver`] - reduction to the homogeneous problem, the spectral and
//!   Galerkin solves of the weak problem, and the Laplace tensor oracle.
//! * [`evolution`] - exact eigenbasis propagation of the time-dependent
//!   equation, norm conservation and energy-gap extraction.

pub mod aip;
pub mod discretization;
mod error;
pub mod evolution;
pub mod solver;

pub use error::{Error, Result};

pub use aip::{AntiInnerForm, AntiInnerSpace, AntiProductReport, Det2Form, Scalars};
pub use discretization::{
    BipartiteField, BoxDomain, ClosedField, DirichletOperator, FormKind, Grid1D, GridFunction,
};
pub use evolution::{EvolutionConfig, Trajectory};
pub use solver::{GalerkinSolver, ReducedProblem, SpectralSolution};

/// Complex scalar used throughout.
pub type C64 = nalgebra::Complex<f64>;
/// Dense complex matrix.
pub type CMatrix = nalgebra::DMatrix<C64>;
/// Dense complex vector.
pub type CVector = nalgebra::DVector<C64>;
