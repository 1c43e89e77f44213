//! Box grids, discrete Dirichlet operators, bipartite fields and the discrete
//! Dirichlet forms on the product grid `Ω_h × Ω_h`.
//!
//! A site is an interior node of `Ω_h`. Sites of a square (`dim = 2`) are
//! numbered row-major, so every bipartite field is a `sites × sites` complex
//! matrix `Ψ[x][y]` regardless of the spatial dimension.

mod csv_io;
mod field;
mod forms;
mod grid;
mod operator;

pub use csv_io::{read_closed_field, read_field, write_closed_field, write_field};
pub use field::{hermitian_basis, BasisElement, BipartiteField, ClosedField, GridFunction};
pub use forms::{dirichlet_form, frobenius, functional_l, FormKind};
pub use grid::{BoxDomain, Grid1D};
pub use operator::DirichletOperator;
