//! Finite-dimensional anti-inner product spaces.
//!
//! An anti-inner product is a form that is linear in its first slot and
//! antisymmetric, `<x, y> = -<y, x>`. The standard construction takes a
//! Hermitian inner product `(x, y)` and sets `<x, y> = (x, y) - (y, x)`,
//! which is `2i Im (x, y)`; on a real subspace of a complex space this is a
//! real anti-inner product. [`AntiInnerSpace`] realises that construction in
//! coordinates, [`Det2Form`] is the determinant form on `C²`.
//!
//! Separatedness (every nonzero vector pairs nontrivially with something) is
//! reported as a diagnostic. Degenerate spaces are accepted everywhere.

use nalgebra::{DMatrix, DVector, SVD};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{CMatrix, CVector, Error, Result, C64};

/// Tolerance for algebraic identities.
pub const ALGEBRAIC_TOL: f64 = 1e-12;
/// Relative singular-value cutoff used by every pseudoinverse in this module.
pub const SINGULAR_CUTOFF: f64 = 1e-12;

/// A sesquilinear-free antisymmetric pairing on a real spanning set.
pub trait AntiInnerForm {
    /// Complex coordinate dimension of the vectors handed to [`pair`](Self::pair).
    fn ambient_dim(&self) -> usize;

    fn pair(&self, x: &CVector, y: &CVector) -> C64;

    /// Norm used to scale defects. Any norm for which `|<x,y>| <= C |x| |y|`
    /// with `C` of order one will do.
    fn norm(&self, x: &CVector) -> f64;

    /// Real basis of the space. Vectors are sampled as real combinations.
    fn real_basis(&self) -> &[CVector];

    /// Matrix of pairings `M[j][k] = <e_j, e_k>` over the real basis.
    fn gram(&self) -> CMatrix {
        let basis = self.real_basis();
        let k = basis.len();
        CMatrix::from_fn(k, k, |i, j| self.pair(&basis[i], &basis[j]))
    }
}

/// Which scalars the linearity check draws.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scalars {
    Real,
    Complex,
}

/// Result of [`axiom_check`] or [`separation_kernel`].
#[derive(Debug, Clone)]
pub struct AntiProductReport {
    /// Max scaled violation of `<αx+βy, z> = α<x,z> + β<y,z>`.
    pub additivity_defect: f64,
    /// Max scaled violation of `<x,y> = -<y,x>`.
    pub antisymmetry_defect: f64,
    pub separated: bool,
    /// Basis of the vectors that pair to zero with the whole space.
    pub kernel_basis: Vec<CVector>,
}

impl AntiProductReport {
    pub fn kernel_dim(&self) -> usize {
        self.kernel_basis.len()
    }
}

/// Real subspace `V` of `C^d` carrying `<x, y> = (x, y)_G - (y, x)_G` where
/// `(x, y)_G = y^H G x` for a Hermitian positive definite `G`.
#[derive(Debug, Clone)]
pub struct AntiInnerSpace {
    ambient_dim: usize,
    basis: Vec<CVector>,
    metric: CMatrix,
}

impl AntiInnerSpace {
    /// Validates `metric` (Hermitian positive definite) and the real linear
    /// independence of `basis`.
    pub fn new(basis: Vec<CVector>, metric: CMatrix) -> Result<Self> {
        let d = metric.nrows();
        if metric.ncols() != d {
            return Err(Error::BadDimension {
                expected: d,
                got: metric.ncols(),
            });
        }
        if d == 0 {
            return Err(Error::InvalidSpace(
                "ambient dimension must be positive".into(),
            ));
        }
        if let Some(v) = basis.iter().find(|v| v.len() != d) {
            return Err(Error::BadDimension {
                expected: d,
                got: v.len(),
            });
        }
        let scale = metric.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let herm_defect = (0..d)
            .flat_map(|i| (0..d).map(move |j| (i, j)))
            .map(|(i, j)| (metric[(i, j)] - metric[(j, i)].conj()).norm())
            .fold(0.0, f64::max);
        if herm_defect > ALGEBRAIC_TOL * scale.max(1.0) {
            return Err(Error::InvalidSpace(format!(
                "metric is not Hermitian (defect {herm_defect:e})"
            )));
        }
        let embedded = DMatrix::from_fn(2 * d, 2 * d, |r, c| {
            let z = metric[(r % d, c % d)];
            match (r < d, c < d) {
                (true, true) | (false, false) => z.re,
                (true, false) => -z.im,
                (false, true) => z.im,
            }
        });
        if embedded.cholesky().is_none() {
            return Err(Error::InvalidSpace(
                "metric is not positive definite".into(),
            ));
        }
        let space = AntiInnerSpace {
            ambient_dim: d,
            basis,
            metric,
        };
        if !space.basis.is_empty() {
            let applied = space.applied_basis();
            let k = space.basis.len();
            let real_gram = DMatrix::from_fn(k, k, |i, j| space.basis[j].dotc(&applied[i]).re);
            if real_gram.cholesky().is_none() {
                return Err(Error::InvalidSpace(
                    "basis vectors are not real-linearly independent".into(),
                ));
            }
        }
        Ok(space)
    }

    /// Same as [`new`](Self::new) with `G = I`.
    pub fn with_identity(basis: Vec<CVector>, ambient_dim: usize) -> Result<Self> {
        Self::new(basis, CMatrix::identity(ambient_dim, ambient_dim))
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn metric(&self) -> &CMatrix {
        &self.metric
    }

    pub fn basis(&self) -> &[CVector] {
        &self.basis
    }

    /// `(x, y)_G = y^H G x`, linear in `x`.
    pub fn inner(&self, x: &CVector, y: &CVector) -> C64 {
        y.dotc(&(&self.metric * x))
    }

    /// Real combination `Σ θ_j e_j`.
    pub fn combine(&self, coefficients: &[f64]) -> CVector {
        let mut out = CVector::zeros(self.ambient_dim);
        for (c, e) in coefficients.iter().zip(&self.basis) {
            out.axpy(C64::new(*c, 0.0), e, C64::new(1.0, 0.0));
        }
        out
    }

    /// Real skew matrix `K[j][k] = -i <e_j, e_k>`.
    pub fn skew_gram(&self) -> DMatrix<f64> {
        self.gram().map(|z| z.im)
    }

    fn applied_basis(&self) -> Vec<CVector> {
        self.basis.iter().map(|e| &self.metric * e).collect()
    }
}

impl AntiInnerForm for AntiInnerSpace {
    fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    fn pair(&self, x: &CVector, y: &CVector) -> C64 {
        anti_inner(x, y, self)
    }

    fn norm(&self, x: &CVector) -> f64 {
        self.inner(x, x).re.max(0.0).sqrt()
    }

    fn real_basis(&self) -> &[CVector] {
        &self.basis
    }

    fn gram(&self) -> CMatrix {
        // (e_j, e_k)_G = e_k^H (G e_j); one matrix-vector product per basis vector.
        let applied = self.applied_basis();
        let k = self.basis.len();
        let inner = CMatrix::from_fn(k, k, |j, l| self.basis[l].dotc(&applied[j]));
        CMatrix::from_fn(k, k, |j, l| {
            C64::new(0.0, inner[(j, l)].im - inner[(l, j)].im)
        })
    }
}

/// `<x, y> = (x, y)_G - (y, x)_G`.
///
/// The real part cancels analytically and is dropped, so the result is
/// purely imaginary, `<x, x>` is exactly zero and antisymmetry is exact.
pub fn anti_inner(x: &CVector, y: &CVector, space: &AntiInnerSpace) -> C64 {
    let xy = space.inner(x, y);
    let yx = space.inner(y, x);
    C64::new(0.0, xy.im - yx.im)
}

/// Determinant `ad - bc` of `u = (a, b)`, `v = (c, d)`.
pub fn anti_inner_det2(u: [C64; 2], v: [C64; 2]) -> C64 {
    u[0] * v[1] - u[1] * v[0]
}

/// The determinant form on `C²`, viewed as a real space with basis
/// `{e1, i e1, e2, i e2}`. It is complex bilinear.
#[derive(Debug, Clone)]
pub struct Det2Form {
    basis: Vec<CVector>,
}

impl Default for Det2Form {
    fn default() -> Self {
        let one = C64::new(1.0, 0.0);
        let i = C64::new(0.0, 1.0);
        let zero = C64::new(0.0, 0.0);
        Det2Form {
            basis: vec![
                CVector::from_vec(vec![one, zero]),
                CVector::from_vec(vec![i, zero]),
                CVector::from_vec(vec![zero, one]),
                CVector::from_vec(vec![zero, i]),
            ],
        }
    }
}

impl AntiInnerForm for Det2Form {
    fn ambient_dim(&self) -> usize {
        2
    }

    fn pair(&self, x: &CVector, y: &CVector) -> C64 {
        anti_inner_det2([x[0], x[1]], [y[0], y[1]])
    }

    fn norm(&self, x: &CVector) -> f64 {
        x.norm()
    }

    fn real_basis(&self) -> &[CVector] {
        &self.basis
    }
}

/// One randomized linearity/antisymmetry probe.
#[derive(Debug, Clone)]
pub struct AxiomSample {
    pub x: CVector,
    pub y: CVector,
    pub z: CVector,
    pub alpha: C64,
    pub beta: C64,
}

/// Deterministic sample set used by [`axiom_check`]. Vectors are real
/// combinations of the form's basis with coefficients in `[-1, 1]`.
pub fn axiom_samples<F: AntiInnerForm + ?Sized>(
    form: &F,
    sample_count: usize,
    seed: u64,
    scalars: Scalars,
) -> Vec<AxiomSample> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let basis = form.real_basis();
    let vector = |rng: &mut ChaCha8Rng| {
        let mut v = CVector::zeros(form.ambient_dim());
        for e in basis {
            let c: f64 = rng.gen_range(-1.0..1.0);
            v.axpy(C64::new(c, 0.0), e, C64::new(1.0, 0.0));
        }
        v
    };
    let scalar = |rng: &mut ChaCha8Rng| match scalars {
        Scalars::Real => C64::new(rng.gen_range(-1.0..1.0), 0.0),
        Scalars::Complex => C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
    };
    (0..sample_count)
        .map(|_| {
            let x = vector(&mut rng);
            let y = vector(&mut rng);
            let z = vector(&mut rng);
            let alpha = scalar(&mut rng);
            let beta = scalar(&mut rng);
            AxiomSample {
                x,
                y,
                z,
                alpha,
                beta,
            }
        })
        .collect()
}

/// Samples random triples and scalars and reports the largest violations of
/// first-slot linearity and antisymmetry, each scaled by the product of the
/// input norms. Separation is filled in from [`separation_kernel`].
pub fn axiom_check<F: AntiInnerForm + ?Sized>(
    form: &F,
    sample_count: usize,
    seed: u64,
    scalars: Scalars,
) -> AntiProductReport {
    let mut additivity: f64 = 0.0;
    let mut antisymmetry: f64 = 0.0;
    for s in axiom_samples(form, sample_count.max(1), seed, scalars) {
        let combo = &s.x * s.alpha + &s.y * s.beta;
        let lhs = form.pair(&combo, &s.z);
        let rhs = s.alpha * form.pair(&s.x, &s.z) + s.beta * form.pair(&s.y, &s.z);
        let (nx, ny, nz) = (form.norm(&s.x), form.norm(&s.y), form.norm(&s.z));
        let scale = (s.alpha.norm() * nx + s.beta.norm() * ny) * nz;
        additivity = additivity.max(scaled((lhs - rhs).norm(), scale));

        let sym = form.pair(&s.x, &s.y) + form.pair(&s.y, &s.x);
        antisymmetry = antisymmetry.max(scaled(sym.norm(), nx * ny));
    }
    let separation = separation_kernel(form);
    AntiProductReport {
        additivity_defect: additivity,
        antisymmetry_defect: antisymmetry,
        ..separation
    }
}

fn scaled(value: f64, scale: f64) -> f64 {
    if scale > 0.0 {
        value / scale
    } else {
        value
    }
}

/// Finds the real vectors `θ` with `<Σ θ_j e_j, y> = 0` for every `y` in the
/// space. For [`AntiInnerSpace`] this is the null space of the real skew
/// matrix `K = -i <e_j, e_k>`; in general both the real and imaginary parts
/// of the pairing matrix must annihilate `θ`.
pub fn separation_kernel<F: AntiInnerForm + ?Sized>(form: &F) -> AntiProductReport {
    let basis = form.real_basis();
    let k = basis.len();
    if k == 0 {
        return AntiProductReport {
            additivity_defect: 0.0,
            antisymmetry_defect: 0.0,
            separated: true,
            kernel_basis: Vec::new(),
        };
    }
    let gram = form.gram();
    // θ is in the kernel iff M^T θ = 0 over the reals.
    let stacked = DMatrix::from_fn(2 * k, k, |r, c| {
        if r < k {
            gram[(c, r)].re
        } else {
            gram[(c, r - k)].im
        }
    });
    let null = null_space(stacked);
    let kernel_basis: Vec<CVector> = null
        .iter()
        .map(|theta| {
            let mut v = CVector::zeros(form.ambient_dim());
            for (c, e) in theta.iter().zip(basis) {
                v.axpy(C64::new(*c, 0.0), e, C64::new(1.0, 0.0));
            }
            v
        })
        .collect();
    AntiProductReport {
        additivity_defect: 0.0,
        antisymmetry_defect: 0.0,
        separated: kernel_basis.is_empty(),
        kernel_basis,
    }
}

/// Orthonormal basis of the null space of a tall (or square) real matrix.
fn null_space(m: DMatrix<f64>) -> Vec<DVector<f64>> {
    let ncols = m.ncols();
    let svd = SVD::new(m, false, true);
    let v_t = svd.v_t.expect("v_t requested");
    let sigma_max = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    let cutoff = SINGULAR_CUTOFF * sigma_max;
    (0..ncols)
        .filter(|&i| sigma_max == 0.0 || svd.singular_values[i] <= cutoff)
        .map(|i| v_t.row(i).transpose())
        .collect()
}

/// Minimum-norm least-squares solver for a real skew system `K θ = c`,
/// factorised once and reusable across right-hand sides.
///
/// The factorisation is the Hermitian eigendecomposition of `i (K - Kᵀ)/2`,
/// whose eigenvalues come in pairs `±σ` with `σ` the singular values of `K`.
#[derive(Debug, Clone)]
pub struct SkewSystem {
    k: DMatrix<f64>,
    eigenvectors: CMatrix,
    eigenvalues: DVector<f64>,
    cutoff: f64,
}

/// Coordinates of a representer and the least-squares residual `|K θ - c|`.
#[derive(Debug, Clone)]
pub struct Representation {
    pub coefficients: DVector<f64>,
    pub residual: f64,
}

impl SkewSystem {
    pub fn new(k: DMatrix<f64>) -> Self {
        let h = CMatrix::from_fn(k.nrows(), k.ncols(), |i, j| {
            C64::new(0.0, 0.5 * (k[(i, j)] - k[(j, i)]))
        });
        let eig = h.symmetric_eigen();
        let sigma_max = eig.eigenvalues.amax();
        SkewSystem {
            k,
            eigenvectors: eig.eigenvectors,
            eigenvalues: eig.eigenvalues,
            cutoff: SINGULAR_CUTOFF * sigma_max,
        }
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.k
    }

    /// Number of singular values at or below the cutoff.
    pub fn nullity(&self) -> usize {
        self.eigenvalues
            .iter()
            .filter(|&&mu| mu.abs() <= self.cutoff)
            .count()
    }

    /// Solves `<e_j, y> = l(e_j)` for `y = Σ θ_k e_k`, i.e. `K θ = -i l`.
    ///
    /// Fails with [`Error::NotPurelyImaginary`] if any `|Re l(e_j)|` exceeds
    /// `tol` times the largest `|l(e_j)|`.
    pub fn represent(&self, l_values: &[C64], tol: f64) -> Result<Representation> {
        let k = self.k.nrows();
        if l_values.len() != k {
            return Err(Error::BadDimension {
                expected: k,
                got: l_values.len(),
            });
        }
        let scale = l_values.iter().map(|z| z.norm()).fold(0.0, f64::max);
        if let Some((index, z)) = l_values
            .iter()
            .enumerate()
            .find(|(_, z)| z.re.abs() > tol * scale)
        {
            return Err(Error::NotPurelyImaginary {
                index,
                real_part: z.re.abs(),
            });
        }
        // c_j = -i l_j
        let c = DVector::from_iterator(k, l_values.iter().map(|z| z.im));
        let coefficients = self.pseudo_solve(&c);
        let residual = (&self.k * &coefficients - &c).norm();
        Ok(Representation {
            coefficients,
            residual,
        })
    }

    // K = -i H, so K⁺ c = i H⁺ c
    fn pseudo_solve(&self, c: &DVector<f64>) -> DVector<f64> {
        let c = c.map(|v| C64::new(v, 0.0));
        let mut projected = self.eigenvectors.ad_mul(&c);
        for (p, &mu) in projected.iter_mut().zip(self.eigenvalues.iter()) {
            *p = if mu.abs() > self.cutoff && mu != 0.0 {
                *p * C64::new(0.0, 1.0 / mu)
            } else {
                C64::new(0.0, 0.0)
            };
        }
        (&self.eigenvectors * projected).map(|z| z.re)
    }
}

/// Representer of a purely imaginary functional given by its values on the
/// real basis: the minimum-norm `y ∈ V` with `<e_j, y> = l(e_j)` in the
/// least-squares sense, plus the residual. A zero residual certifies
/// representability; a nonzero one can only occur on degenerate spaces.
pub fn represent_functional(space: &AntiInnerSpace, l_values: &[C64]) -> Result<(CVector, f64)> {
    let system = SkewSystem::new(space.skew_gram());
    let rep = system.represent(l_values, ALGEBRAIC_TOL)?;
    Ok((space.combine(rep.coefficients.as_slice()), rep.residual))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn cv(v: &[C64]) -> CVector {
        CVector::from_row_slice(v)
    }

    /// real span{1, i} in C¹
    fn line_space() -> AntiInnerSpace {
        AntiInnerSpace::with_identity(vec![cv(&[c(1.0, 0.0)]), cv(&[c(0.0, 1.0)])], 1).unwrap()
    }

    #[test]
    fn det2_examples() {
        let one = c(1.0, 0.0);
        let zero = c(0.0, 0.0);
        assert_eq!(anti_inner_det2([one, zero], [zero, one]), one);
        assert_eq!(
            anti_inner_det2([c(2.0, 0.0), c(3.0, 0.0)], [c(4.0, 0.0), c(5.0, 0.0)]),
            c(-2.0, 0.0)
        );
        let a = c(0.3, -1.7);
        let b = c(-2.2, 0.9);
        assert_eq!(anti_inner_det2([a, b], [a, b]), zero);
    }

    #[test]
    fn anti_inner_examples() {
        let space = AntiInnerSpace::with_identity(
            vec![
                cv(&[c(1.0, 0.0), c(0.0, 0.0)]),
                cv(&[c(0.0, 1.0), c(0.0, 0.0)]),
            ],
            2,
        )
        .unwrap();
        let x = cv(&[c(1.0, 0.0), c(0.0, 0.0)]);
        let y = cv(&[c(0.0, 1.0), c(0.0, 0.0)]);
        assert_eq!(anti_inner(&x, &y, &space), c(0.0, -2.0));

        let z = cv(&[c(0.7, -0.2), c(1.5, 3.0)]);
        assert_eq!(anti_inner(&z, &z, &space), c(0.0, 0.0));

        let r1 = cv(&[c(0.7, 0.0), c(1.5, 0.0)]);
        let r2 = cv(&[c(-2.0, 0.0), c(0.25, 0.0)]);
        assert_eq!(anti_inner(&r1, &r2, &space), c(0.0, 0.0));
    }

    #[test]
    fn rejects_bad_metric_and_dependent_basis() {
        let not_pd =
            CMatrix::from_row_slice(2, 2, &[c(1.0, 0.0), c(2.0, 0.0), c(2.0, 0.0), c(1.0, 0.0)]);
        assert!(AntiInnerSpace::new(vec![], not_pd).is_err());
        let not_herm =
            CMatrix::from_row_slice(2, 2, &[c(1.0, 0.0), c(0.0, 0.1), c(0.0, 0.1), c(1.0, 0.0)]);
        assert!(AntiInnerSpace::new(vec![], not_herm).is_err());
        let dependent = vec![cv(&[c(1.0, 0.0)]), cv(&[c(2.0, 0.0)])];
        assert!(AntiInnerSpace::with_identity(dependent, 1).is_err());
        // 1 and i are complex-dependent but real-independent
        assert!(
            AntiInnerSpace::with_identity(vec![cv(&[c(1.0, 0.0)]), cv(&[c(0.0, 1.0)])], 1).is_ok()
        );
    }

    #[test]
    fn separation_of_line_space() {
        let space = line_space();
        let k = space.skew_gram();
        assert_eq!(k, DMatrix::from_row_slice(2, 2, &[0.0, -2.0, 2.0, 0.0]));
        let report = separation_kernel(&space);
        assert!(report.separated);
        assert!(report.kernel_basis.is_empty());
    }

    #[test]
    fn real_plane_is_totally_degenerate() {
        let space = AntiInnerSpace::with_identity(
            vec![
                cv(&[c(1.0, 0.0), c(0.0, 0.0)]),
                cv(&[c(0.0, 0.0), c(1.0, 0.0)]),
            ],
            2,
        )
        .unwrap();
        let report = separation_kernel(&space);
        assert!(!report.separated);
        assert_eq!(report.kernel_dim(), 2);
    }

    #[test]
    fn det2_is_separated() {
        assert!(separation_kernel(&Det2Form::default()).separated);
    }

    #[test]
    fn represent_examples() {
        let space = line_space();
        let (y, residual) = represent_functional(&space, &[c(0.0, 0.0), c(0.0, 2.0)]).unwrap();
        assert!((y[0] - c(1.0, 0.0)).norm() < 1e-14);
        assert!(residual < 1e-14);

        let (y, residual) = represent_functional(&space, &[c(0.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert_eq!(y[0], c(0.0, 0.0));
        assert_eq!(residual, 0.0);

        let err = represent_functional(&space, &[c(1.0, 0.0), c(0.0, 0.0)]).unwrap_err();
        assert!(matches!(err, Error::NotPurelyImaginary { index: 0, .. }));
    }

    #[test]
    fn degenerate_space_reports_residual() {
        // R² in C²: every functional representable is zero.
        let space = AntiInnerSpace::with_identity(
            vec![
                cv(&[c(1.0, 0.0), c(0.0, 0.0)]),
                cv(&[c(0.0, 0.0), c(1.0, 0.0)]),
            ],
            2,
        )
        .unwrap();
        let (y, residual) = represent_functional(&space, &[c(0.0, 3.0), c(0.0, 4.0)]).unwrap();
        assert_eq!(y.norm(), 0.0);
        assert!((residual - 5.0).abs() < 1e-14);
    }

    #[test]
    fn example_construction_satisfies_axioms() {
        let metric =
            CMatrix::from_row_slice(2, 2, &[c(2.0, 0.0), c(0.5, 0.3), c(0.5, -0.3), c(1.0, 0.0)]);
        let basis = vec![
            cv(&[c(1.0, 0.0), c(0.0, 0.0)]),
            cv(&[c(0.0, 1.0), c(0.0, 0.0)]),
            cv(&[c(0.0, 0.0), c(1.0, 0.5)]),
        ];
        let space = AntiInnerSpace::new(basis, metric).unwrap();
        for seed in 0..4 {
            let report = axiom_check(&space, 500, seed, Scalars::Real);
            assert!(report.additivity_defect <= 1e-12, "{report:?}");
            assert!(report.antisymmetry_defect <= 1e-12, "{report:?}");
        }
        // odd dimension: a skew form is always degenerate
        assert!(!separation_kernel(&space).separated);
    }

    #[test]
    fn det2_is_complex_linear() {
        let report = axiom_check(&Det2Form::default(), 500, 7, Scalars::Complex);
        assert!(report.additivity_defect <= 1e-12);
        assert!(report.antisymmetry_defect <= 1e-12);
    }

    #[test]
    fn example_construction_is_not_complex_linear() {
        let report = axiom_check(&line_space(), 200, 3, Scalars::Complex);
        assert!(report.additivity_defect > 1e-2);
    }
}
