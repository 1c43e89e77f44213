use nalgebra::{DMatrix, DVector, SymmetricEigen};

use super::{BoxDomain, Grid1D};
use crate::{CMatrix, Error, Result, C64};

/// Discrete `-Δ + U` on the interior nodes of a box with zero Dirichlet
/// values (three-point stencil per axis, `ħ = 1`, `2m = 1`), together with
/// its full eigendecomposition.
///
/// On a square the operator is the Kronecker sum `A₁ ⊗ I + I ⊗ A₁` of the
/// interval operator plus the diagonal potential.
#[derive(Debug, Clone)]
pub struct DirichletOperator {
    domain: BoxDomain,
    potential: Vec<f64>,
    matrix: DMatrix<f64>,
    eigenvalues: DVector<f64>,
    eigenvectors: DMatrix<f64>,
    matrix_c: CMatrix,
    eigenvectors_c: CMatrix,
}

impl DirichletOperator {
    pub fn new(domain: BoxDomain, potential: Option<&[f64]>) -> Result<Self> {
        let sites = domain.sites();
        let potential = match potential {
            Some(u) if u.len() != sites => {
                return Err(Error::BadDimension {
                    expected: sites,
                    got: u.len(),
                })
            }
            Some(u) => {
                if u.iter().any(|v| !v.is_finite()) {
                    return Err(Error::InvalidGrid("potential must be finite".into()));
                }
                u.to_vec()
            }
            None => vec![0.0; sites],
        };

        let a1 = stencil_1d(domain.grid());
        let mut matrix = match domain.dim() {
            1 => a1,
            _ => {
                let id = DMatrix::<f64>::identity(a1.nrows(), a1.ncols());
                a1.kronecker(&id) + id.kronecker(&a1)
            }
        };
        for (i, u) in potential.iter().enumerate() {
            matrix[(i, i)] += u;
        }

        let (eigenvalues, eigenvectors) = sorted_eigen(&matrix);
        let matrix_c = matrix.map(|v| C64::new(v, 0.0));
        let eigenvectors_c = eigenvectors.map(|v| C64::new(v, 0.0));
        Ok(DirichletOperator {
            domain,
            potential,
            matrix,
            eigenvalues,
            eigenvectors,
            matrix_c,
            eigenvectors_c,
        })
    }

    /// Interval operator, the common case.
    pub fn interval(grid: Grid1D, potential: Option<&[f64]>) -> Result<Self> {
        Self::new(BoxDomain::interval(grid), potential)
    }

    pub fn domain(&self) -> BoxDomain {
        self.domain
    }

    pub fn potential(&self) -> &[f64] {
        &self.potential
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> &DVector<f64> {
        &self.eigenvalues
    }

    /// Orthonormal eigenvectors as columns, in eigenvalue order.
    pub fn eigenvectors(&self) -> &DMatrix<f64> {
        &self.eigenvectors
    }

    pub fn sites(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn lambda_min(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn lambda_max(&self) -> f64 {
        self.eigenvalues[self.eigenvalues.len() - 1]
    }

    /// `|λ_i - λ_j|` at or below this is treated as a zero gap.
    pub fn degeneracy_cutoff(&self) -> f64 {
        1e-9 * self.eigenvalues.amax()
    }

    /// `λ_i - λ_j`.
    pub fn gap(&self, i: usize, j: usize) -> f64 {
        self.eigenvalues[i] - self.eigenvalues[j]
    }

    pub fn is_zero_gap(&self, i: usize, j: usize) -> bool {
        self.gap(i, j).abs() <= self.degeneracy_cutoff()
    }

    /// Sharp discrete Poincaré constant `M_h = 1 / (2 λ_min)`:
    /// `h^d Σ |Ψ|² <= M_h · full(Ψ, Ψ)` for every bipartite field.
    /// Infinite when the operator is not positive definite.
    pub fn poincare_constant(&self) -> f64 {
        let lmin = self.lambda_min();
        if lmin > 0.0 {
            1.0 / (2.0 * lmin)
        } else {
            f64::INFINITY
        }
    }

    /// `(A ⊗ I) Ψ`, the operator acting on the first variable.
    pub fn apply_x(&self, psi: &CMatrix) -> CMatrix {
        &self.matrix_c * psi
    }

    /// `(I ⊗ A) Ψ`, the operator acting on the second variable.
    pub fn apply_y(&self, psi: &CMatrix) -> CMatrix {
        psi * &self.matrix_c
    }

    /// `(A ⊗ I - I ⊗ A) Ψ = AΨ - ΨA`.
    pub fn commutator(&self, psi: &CMatrix) -> CMatrix {
        self.apply_x(psi) - self.apply_y(psi)
    }

    /// Coefficients `Q^T Ψ Q` in the eigen-tensor basis `q_i ⊗ q_j`.
    pub fn to_eigenbasis(&self, psi: &CMatrix) -> CMatrix {
        self.eigenvectors_c.tr_mul(psi) * &self.eigenvectors_c
    }

    /// Grid values `Q C Q^T` from eigen-tensor coefficients.
    pub fn from_eigenbasis(&self, coefficients: &CMatrix) -> CMatrix {
        &self.eigenvectors_c * coefficients * self.eigenvectors_c.transpose()
    }

    /// Single-particle coefficients `Q^T ψ`.
    pub fn vector_to_eigenbasis(&self, psi: &crate::CVector) -> crate::CVector {
        self.eigenvectors_c.tr_mul(psi)
    }

    pub fn vector_from_eigenbasis(&self, coefficients: &crate::CVector) -> crate::CVector {
        &self.eigenvectors_c * coefficients
    }

    /// Eigenvector `q_k` as a complex column.
    pub fn mode(&self, k: usize) -> crate::CVector {
        self.eigenvectors_c.column(k).into_owned()
    }
}

fn stencil_1d(grid: Grid1D) -> DMatrix<f64> {
    let m = grid.interior_count();
    let inv_h2 = 1.0 / (grid.spacing() * grid.spacing());
    DMatrix::from_fn(m, m, |i, j| {
        if i == j {
            2.0 * inv_h2
        } else if i.abs_diff(j) == 1 {
            -inv_h2
        } else {
            0.0
        }
    })
}

/// Ascending eigenpairs with a deterministic sign: the first component of
/// non-negligible size is positive.
fn sorted_eigen(matrix: &DMatrix<f64>) -> (DVector<f64>, DMatrix<f64>) {
    let eig = SymmetricEigen::new(matrix.clone());
    let n = matrix.nrows();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = DVector::from_iterator(n, order.iter().map(|&k| eig.eigenvalues[k]));
    let mut vectors = DMatrix::zeros(n, n);
    for (col, &k) in order.iter().enumerate() {
        let mut v = eig.eigenvectors.column(k).into_owned();
        let tiny = 1e-8 * v.amax();
        if let Some(first) = v.iter().find(|x| x.abs() > tiny) {
            if *first < 0.0 {
                v.neg_mut();
            }
        }
        vectors.set_column(col, &v);
    }
    (values, vectors)
}
