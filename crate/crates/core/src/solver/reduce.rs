use crate::aip::ALGEBRAIC_TOL;
use crate::discretization::{BipartiteField, ClosedField, DirichletOperator};
use crate::{CMatrix, Error, Result, C64};

/// `(-Δx + Δy) Θ = W`, `Θ = 0` on the boundary, together with the boundary
/// data `F` it came from (zero when the source was given directly).
#[derive(Debug, Clone)]
pub struct ReducedProblem<'a> {
    source: BipartiteField,
    boundary: ClosedField,
    op: &'a DirichletOperator,
}

impl<'a> ReducedProblem<'a> {
    /// Problem with a prescribed source and homogeneous boundary data. The
    /// source must be anti-Hermitian to `1e-12` relative; it is then replaced
    /// by its exact anti-Hermitian part.
    pub fn from_source(source: BipartiteField, op: &'a DirichletOperator) -> Result<Self> {
        if source.domain() != op.domain() {
            return Err(Error::GridMismatch);
        }
        if !check_source_symmetry(&source) {
            return Err(Error::NotAntiHermitianSource {
                defect: source.anti_hermiticity_defect(),
            });
        }
        let boundary = ClosedField::zeros(op.domain());
        Ok(ReducedProblem {
            source: source.anti_hermitian_part(),
            boundary,
            op,
        })
    }

    pub fn source(&self) -> &BipartiteField {
        &self.source
    }

    pub fn boundary(&self) -> &ClosedField {
        &self.boundary
    }

    pub fn operator(&self) -> &'a DirichletOperator {
        self.op
    }
}

/// True iff `conj(W(x,y)) = -W(y,x)` at every node to `1e-12 · max|W|`.
pub fn check_source_symmetry(w: &BipartiteField) -> bool {
    w.anti_hermiticity_defect() <= ALGEBRAIC_TOL * w.max_abs()
}

/// Computes `W = -(H_x - H_y) F` at the interior nodes, `H = -Δ_h + U`, using
/// the boundary values of `F` in the stencil. With `U = 0` this is
/// `(Δx - Δy) F`.
///
/// `F` must be Hermitian to `1e-12` relative. It is symmetrised exactly
/// first and `W` comes out exactly anti-Hermitian.
pub fn reduce_problem<'a>(
    f: &ClosedField,
    op: &'a DirichletOperator,
) -> Result<ReducedProblem<'a>> {
    let domain = op.domain();
    if f.domain() != domain {
        return Err(Error::GridMismatch);
    }
    let defect = f.hermiticity_defect();
    if defect > ALGEBRAIC_TOL * f.max_abs() {
        return Err(Error::NotHermitianData { defect });
    }
    let f = f.hermitian_project();
    let fv = f.values();

    let m = domain.sites();
    let stride = domain.grid().n_cells() + 1;
    let strides: Vec<usize> = (0..domain.dim())
        .rev()
        .map(|a| stride.pow(a as u32))
        .collect();
    let closed: Vec<usize> = (0..m).map(|s| domain.closed_index_of_site(s)).collect();
    let inv_h2 = 1.0 / (domain.spacing() * domain.spacing());
    let centre = C64::new(2.0 * domain.dim() as f64, 0.0);
    let u = op.potential();

    let lap_x = |cx: usize, cy: usize| -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        for &s in &strides {
            acc += fv[(cx + s, cy)] + fv[(cx - s, cy)];
        }
        acc - centre * fv[(cx, cy)]
    };
    let lap_y = |cx: usize, cy: usize| -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        for &s in &strides {
            acc += fv[(cx, cy + s)] + fv[(cx, cy - s)];
        }
        acc - centre * fv[(cx, cy)]
    };

    let w = CMatrix::from_fn(m, m, |i, j| {
        let (cx, cy) = (closed[i], closed[j]);
        (lap_x(cx, cy) - lap_y(cx, cy)) * inv_h2 - fv[(cx, cy)] * (u[i] - u[j])
    });
    let source = BipartiteField::new(domain, w)?;
    debug_assert_eq!(source.anti_hermiticity_defect(), 0.0);
    Ok(ReducedProblem {
        source,
        boundary: f,
        op,
    })
}
