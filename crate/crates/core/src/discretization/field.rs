use std::f64::consts::FRAC_1_SQRT_2;

use super::BoxDomain;
use crate::{CMatrix, CVector, Error, Result, C64};

/// Complex grid function `Ψ(x, y)` on the interior product nodes, stored as
/// a `sites × sites` matrix indexed `[x][y]`.
#[derive(Debug, Clone, PartialEq)]
pub struct BipartiteField {
    domain: BoxDomain,
    values: CMatrix,
}

impl BipartiteField {
    pub fn new(domain: BoxDomain, values: CMatrix) -> Result<Self> {
        let m = domain.sites();
        if values.nrows() != m || values.ncols() != m {
            return Err(Error::BadDimension {
                expected: m * m,
                got: values.len(),
            });
        }
        Ok(BipartiteField { domain, values })
    }

    pub fn zeros(domain: BoxDomain) -> Self {
        let m = domain.sites();
        BipartiteField {
            domain,
            values: CMatrix::zeros(m, m),
        }
    }

    /// Samples `f(x, y)` at the interior product nodes.
    pub fn from_fn(domain: BoxDomain, f: impl Fn(&[f64], &[f64]) -> C64) -> Self {
        let m = domain.sites();
        let points: Vec<Vec<f64>> = (0..m).map(|s| domain.site_point(s)).collect();
        let values = CMatrix::from_fn(m, m, |i, j| f(&points[i], &points[j]));
        BipartiteField { domain, values }
    }

    /// `(a ⊗ b)(x, y) = a(x) b(y)`.
    pub fn tensor(domain: BoxDomain, a: &CVector, b: &CVector) -> Result<Self> {
        Self::new(domain, a * b.transpose())
    }

    pub fn domain(&self) -> BoxDomain {
        self.domain
    }

    pub fn values(&self) -> &CMatrix {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut CMatrix {
        &mut self.values
    }

    pub fn into_values(self) -> CMatrix {
        self.values
    }

    pub fn ensure_same_grid(&self, other: &BipartiteField) -> Result<()> {
        if self.domain == other.domain {
            Ok(())
        } else {
            Err(Error::GridMismatch)
        }
    }

    /// `(SΨ)(x, y) = conj(Ψ(y, x))`. An exact involution.
    pub fn swap_adjoint(&self) -> Self {
        BipartiteField {
            domain: self.domain,
            values: self.values.adjoint(),
        }
    }

    /// `(Ψ + SΨ) / 2`, the projection onto Hermitian fields. The output is
    /// exactly Hermitian and the map is exactly idempotent.
    pub fn hermitian_project(&self) -> Self {
        let values = (&self.values + self.values.adjoint()) * C64::new(0.5, 0.0);
        BipartiteField {
            domain: self.domain,
            values,
        }
    }

    /// `(Ψ - SΨ) / 2`, exactly anti-Hermitian.
    pub fn anti_hermitian_part(&self) -> Self {
        let values = (&self.values - self.values.adjoint()) * C64::new(0.5, 0.0);
        BipartiteField {
            domain: self.domain,
            values,
        }
    }

    /// `max |Ψ(x,y) - conj(Ψ(y,x))|`.
    pub fn hermiticity_defect(&self) -> f64 {
        symmetry_defect(&self.values, 1.0)
    }

    /// `max |Ψ(x,y) + conj(Ψ(y,x))|`.
    pub fn anti_hermiticity_defect(&self) -> f64 {
        symmetry_defect(&self.values, -1.0)
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Quadrature `h^d Σ |Ψ|²`.
    pub fn norm_sq(&self) -> f64 {
        self.domain.product_weight() * self.values.norm_squared()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn scale(&self, by: C64) -> Self {
        BipartiteField {
            domain: self.domain,
            values: &self.values * by,
        }
    }

    pub fn add(&self, other: &BipartiteField) -> Result<Self> {
        self.ensure_same_grid(other)?;
        Ok(BipartiteField {
            domain: self.domain,
            values: &self.values + &other.values,
        })
    }

    pub fn sub(&self, other: &BipartiteField) -> Result<Self> {
        self.ensure_same_grid(other)?;
        Ok(BipartiteField {
            domain: self.domain,
            values: &self.values - &other.values,
        })
    }

    /// `max |Ψ - Φ|`.
    pub fn max_diff(&self, other: &BipartiteField) -> Result<f64> {
        self.ensure_same_grid(other)?;
        Ok(self
            .values
            .iter()
            .zip(other.values.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }
}

fn symmetry_defect(v: &CMatrix, sign: f64) -> f64 {
    let m = v.nrows();
    let mut worst: f64 = 0.0;
    for i in 0..m {
        for j in i..m {
            worst = worst.max((v[(i, j)] - v[(j, i)].conj() * sign).norm());
        }
    }
    worst
}

/// Field on the closed product grid, boundary nodes included. Needed for
/// boundary data, whose stencil uses the boundary values.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedField {
    domain: BoxDomain,
    values: CMatrix,
}

impl ClosedField {
    pub fn new(domain: BoxDomain, values: CMatrix) -> Result<Self> {
        let m = domain.closed_sites();
        if values.nrows() != m || values.ncols() != m {
            return Err(Error::BadDimension {
                expected: m * m,
                got: values.len(),
            });
        }
        Ok(ClosedField { domain, values })
    }

    pub fn zeros(domain: BoxDomain) -> Self {
        let m = domain.closed_sites();
        ClosedField {
            domain,
            values: CMatrix::zeros(m, m),
        }
    }

    pub fn from_fn(domain: BoxDomain, f: impl Fn(&[f64], &[f64]) -> C64) -> Self {
        let m = domain.closed_sites();
        let points: Vec<Vec<f64>> = (0..m).map(|c| domain.closed_point(c)).collect();
        let values = CMatrix::from_fn(m, m, |i, j| f(&points[i], &points[j]));
        ClosedField { domain, values }
    }

    pub fn domain(&self) -> BoxDomain {
        self.domain
    }

    pub fn values(&self) -> &CMatrix {
        &self.values
    }

    pub fn at(&self, x: usize, y: usize) -> C64 {
        self.values[(x, y)]
    }

    pub fn hermiticity_defect(&self) -> f64 {
        symmetry_defect(&self.values, 1.0)
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn hermitian_project(&self) -> Self {
        let values = (&self.values + self.values.adjoint()) * C64::new(0.5, 0.0);
        ClosedField {
            domain: self.domain,
            values,
        }
    }

    /// Values at the interior product nodes.
    pub fn interior(&self) -> BipartiteField {
        let d = self.domain;
        let idx: Vec<usize> = (0..d.sites()).map(|s| d.closed_index_of_site(s)).collect();
        let values = CMatrix::from_fn(idx.len(), idx.len(), |i, j| self.values[(idx[i], idx[j])]);
        BipartiteField { domain: d, values }
    }
}

/// Single-particle grid function `ψ(x)` on the interior nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    domain: BoxDomain,
    values: CVector,
}

impl GridFunction {
    pub fn new(domain: BoxDomain, values: CVector) -> Result<Self> {
        if values.len() != domain.sites() {
            return Err(Error::BadDimension {
                expected: domain.sites(),
                got: values.len(),
            });
        }
        Ok(GridFunction { domain, values })
    }

    pub fn from_fn(domain: BoxDomain, f: impl Fn(&[f64]) -> C64) -> Self {
        let values = CVector::from_iterator(
            domain.sites(),
            (0..domain.sites()).map(|s| f(&domain.site_point(s))),
        );
        GridFunction { domain, values }
    }

    pub fn domain(&self) -> BoxDomain {
        self.domain
    }

    pub fn values(&self) -> &CVector {
        &self.values
    }

    /// Quadrature `h^n Σ |ψ|²`.
    pub fn norm_sq(&self) -> f64 {
        self.domain.site_weight() * self.values.norm_squared()
    }

    /// `Ψ(x, y) = ψ(x) conj(ψ(y))`.
    pub fn density(&self) -> BipartiteField {
        BipartiteField {
            domain: self.domain,
            values: &self.values * self.values.adjoint(),
        }
    }
}

/// Sparse element of the real orthonormal basis of Hermitian fields.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisElement {
    pub entries: Vec<(usize, usize, C64)>,
}

impl BasisElement {
    pub fn to_field(&self, domain: BoxDomain) -> BipartiteField {
        let mut f = BipartiteField::zeros(domain);
        for &(i, j, v) in &self.entries {
            f.values[(i, j)] = v;
        }
        f
    }

    /// `Σ e · conj(v)` over the element's support.
    pub fn pair_with(&self, v: &CMatrix) -> C64 {
        self.entries
            .iter()
            .map(|&(i, j, e)| e * v[(i, j)].conj())
            .sum()
    }

    /// `Σ v · conj(e)`.
    pub fn paired_by(&self, v: &CMatrix) -> C64 {
        self.entries
            .iter()
            .map(|&(i, j, e)| v[(i, j)] * e.conj())
            .sum()
    }

    /// Coordinate of `v` along this element under the real Frobenius pairing.
    pub fn coordinate(&self, v: &CMatrix) -> f64 {
        self.paired_by(v).re
    }
}

/// Real basis of the Hermitian `m × m` matrices, orthonormal under
/// `Re Σ a conj(b)`: `E_ii`, then `(E_ij + E_ji)/√2` and `i(E_ij - E_ji)/√2`
/// for `i < j`. It has `m²` elements.
pub fn hermitian_basis(m: usize) -> Vec<BasisElement> {
    let one = C64::new(1.0, 0.0);
    let s = C64::new(FRAC_1_SQRT_2, 0.0);
    let is = C64::new(0.0, FRAC_1_SQRT_2);
    let mut out = Vec::with_capacity(m * m);
    for i in 0..m {
        out.push(BasisElement {
            entries: vec![(i, i, one)],
        });
    }
    for i in 0..m {
        for j in i + 1..m {
            out.push(BasisElement {
                entries: vec![(i, j, s), (j, i, s)],
            });
        }
    }
    for i in 0..m {
        for j in i + 1..m {
            out.push(BasisElement {
                entries: vec![(i, j, is), (j, i, -is)],
            });
        }
    }
    out
}
