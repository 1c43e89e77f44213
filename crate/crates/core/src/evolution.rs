//! Time evolution of bipartite wave functions under
//! `iħ ∂Ψ/∂t = (H(x) - H(y)) Ψ` and of single-particle states under
//! `iħ ∂ψ/∂t = H ψ`, by exact propagation in the eigenbasis of `H`.
//!
//! In the eigen-tensor basis each coefficient only picks up a phase,
//! `c_ij(t) = exp(-i (λ_i - λ_j) t / ħ) c_ij(0)`, so norms are conserved to
//! rounding and the energy gaps `λ_i - λ_j` show up as the frequencies of any
//! observable.

use std::f64::consts::PI;

use nalgebra::SVD;
use rustfft::FftPlanner;

use crate::discretization::{functional_l, BipartiteField, DirichletOperator, GridFunction};
use crate::{CMatrix, CVector, Error, Result, C64};

/// Fewest samples [`extract_gaps`] accepts.
pub const MIN_GAP_SAMPLES: usize = 64;
/// Peaks below this fraction of the largest spectral magnitude are ignored.
pub const PEAK_THRESHOLD: f64 = 0.05;

#[derive(Debug, Clone)]
pub struct EvolutionConfig<'a> {
    op: &'a DirichletOperator,
    hbar: f64,
    times: Vec<f64>,
}

impl<'a> EvolutionConfig<'a> {
    pub fn new(op: &'a DirichletOperator, hbar: f64, times: Vec<f64>) -> Result<Self> {
        if !(hbar.is_finite() && hbar > 0.0) {
            return Err(Error::InvalidGrid(format!(
                "hbar must be positive, got {hbar}"
            )));
        }
        if times.iter().any(|t| !t.is_finite()) || times.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::UnorderedTimes);
        }
        Ok(EvolutionConfig { op, hbar, times })
    }

    /// `count` samples `t_k = k dt`, `ħ = 1`.
    pub fn uniform(op: &'a DirichletOperator, dt: f64, count: usize) -> Result<Self> {
        Self::new(op, 1.0, (0..count).map(|k| k as f64 * dt).collect())
    }

    pub fn operator(&self) -> &'a DirichletOperator {
        self.op
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }
}

/// Anything with a quadrature L² norm.
pub trait QuadratureNorm {
    fn norm_sq(&self) -> f64;
}

impl QuadratureNorm for BipartiteField {
    fn norm_sq(&self) -> f64 {
        BipartiteField::norm_sq(self)
    }
}

impl QuadratureNorm for GridFunction {
    fn norm_sq(&self) -> f64 {
        GridFunction::norm_sq(self)
    }
}

/// States at the sample times together with their L² norms.
#[derive(Debug, Clone)]
pub struct Trajectory<S> {
    times: Vec<f64>,
    states: Vec<S>,
    norms: Vec<f64>,
}

impl<S: QuadratureNorm> Trajectory<S> {
    pub fn new(times: Vec<f64>, states: Vec<S>) -> Result<Self> {
        if times.len() != states.len() {
            return Err(Error::BadDimension {
                expected: times.len(),
                got: states.len(),
            });
        }
        let norms = states.iter().map(|s| s.norm_sq().sqrt()).collect();
        Ok(Trajectory {
            times,
            states,
            norms,
        })
    }
}

impl<S> Trajectory<S> {
    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn states(&self) -> &[S] {
        &self.states
    }

    pub fn norms(&self) -> &[f64] {
        &self.norms
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }
}

fn phase(gap: f64, t: f64, hbar: f64) -> C64 {
    C64::from_polar(1.0, -gap * t / hbar)
}

fn evolve_coefficients(op: &DirichletOperator, c0: &CMatrix, t: f64, hbar: f64) -> CMatrix {
    let m = c0.nrows();
    CMatrix::from_fn(m, m, |i, j| c0[(i, j)] * phase(op.gap(i, j), t, hbar))
}

/// `Ψ(t)` from `Ψ(0)` for a single time.
pub fn propagate_vnlw_to(
    psi: &BipartiteField,
    op: &DirichletOperator,
    t: f64,
    hbar: f64,
) -> Result<BipartiteField> {
    if psi.domain() != op.domain() {
        return Err(Error::GridMismatch);
    }
    let c0 = op.to_eigenbasis(psi.values());
    BipartiteField::new(
        op.domain(),
        op.from_eigenbasis(&evolve_coefficients(op, &c0, t, hbar)),
    )
}

/// Exact spectral propagation of `iħ ∂Ψ/∂t = (H(x) - H(y)) Ψ`.
pub fn propagate_vnlw(
    psi0: &BipartiteField,
    cfg: &EvolutionConfig<'_>,
) -> Result<Trajectory<BipartiteField>> {
    let op = cfg.op;
    if psi0.domain() != op.domain() {
        return Err(Error::GridMismatch);
    }
    let c0 = op.to_eigenbasis(psi0.values());
    let states = cfg
        .times
        .iter()
        .map(|&t| {
            let c = evolve_coefficients(op, &c0, t, cfg.hbar);
            BipartiteField::new(op.domain(), op.from_eigenbasis(&c))
        })
        .collect::<Result<Vec<_>>>()?;
    Trajectory::new(cfg.times.clone(), states)
}

/// Exact spectral propagation of `iħ ∂ψ/∂t = H ψ`.
pub fn propagate_schrodinger(
    psi0: &GridFunction,
    cfg: &EvolutionConfig<'_>,
) -> Result<Trajectory<GridFunction>> {
    let op = cfg.op;
    if psi0.domain() != op.domain() {
        return Err(Error::GridMismatch);
    }
    let a0 = op.vector_to_eigenbasis(psi0.values());
    let lambda = op.eigenvalues();
    let states = cfg
        .times
        .iter()
        .map(|&t| {
            let a = CVector::from_fn(a0.len(), |k, _| a0[k] * phase(lambda[k], t, cfg.hbar));
            GridFunction::new(op.domain(), op.vector_from_eigenbasis(&a))
        })
        .collect::<Result<Vec<_>>>()?;
    Trajectory::new(cfg.times.clone(), states)
}

/// `max_t |‖Ψ(t)‖² - ‖Ψ(0)‖²| / ‖Ψ(0)‖²` (absolute when `Ψ(0) = 0`).
pub fn norm_drift<S>(traj: &Trajectory<S>) -> Result<f64> {
    let first = traj.norms.first().ok_or(Error::EmptyTrajectory)?;
    let n0 = first * first;
    let worst = traj
        .norms
        .iter()
        .map(|n| (n * n - n0).abs())
        .fold(0.0, f64::max);
    Ok(if n0 > 0.0 { worst / n0 } else { worst })
}

/// Evolves `ψ0 ⊗ conj(ψ0)` under the bipartite equation and `ψ0` under the
/// single-particle one and returns `max_t max |Ψ(t) - ψ(t) ⊗ conj(ψ(t))|`.
pub fn product_form_check(psi0: &GridFunction, cfg: &EvolutionConfig<'_>) -> Result<f64> {
    let bipartite = propagate_vnlw(&psi0.density(), cfg)?;
    let single = propagate_schrodinger(psi0, cfg)?;
    let mut worst: f64 = 0.0;
    for (big, small) in bipartite.states.iter().zip(&single.states) {
        worst = worst.max(big.max_diff(&small.density())?);
    }
    Ok(worst)
}

/// `σ₂ / σ₁` of the field as a matrix: zero iff `Ψ = a ⊗ b`.
pub fn factorization_defect(psi: &BipartiteField) -> f64 {
    let svd = SVD::new(psi.values().clone(), false, false);
    let mut s: Vec<f64> = svd.singular_values.iter().copied().collect();
    s.sort_by(|a, b| b.total_cmp(a));
    match s.as_slice() {
        [first, second, ..] if *first > 0.0 => second / first,
        _ => 0.0,
    }
}

/// Angular frequency resolution `2π / (n dt)` of a uniformly sampled trajectory.
pub fn fourier_bin_width<S>(traj: &Trajectory<S>) -> Result<f64> {
    let dt = uniform_step(&traj.times)?;
    Ok(2.0 * PI / (traj.times.len() as f64 * dt))
}

fn uniform_step(times: &[f64]) -> Result<f64> {
    if times.len() < 2 {
        return Err(Error::TooFewSamples {
            needed: 2,
            got: times.len(),
        });
    }
    let dt = times[1] - times[0];
    let span = times[times.len() - 1] - times[0];
    let uniform = times
        .iter()
        .enumerate()
        .all(|(k, t)| (t - times[0] - k as f64 * dt).abs() <= 1e-9 * span);
    if dt > 0.0 && uniform {
        Ok(dt)
    } else {
        Err(Error::NonuniformTimes)
    }
}

/// Frequencies of `t ↦ h^d Σ probe · conj(Ψ(t))`.
///
/// A component `Ψ ∝ exp(-i ω t)` shows up at `ω`, so a mode pair `(i, j)`
/// appears at `(λ_i - λ_j) / ħ`. Peaks are located on a Hann-windowed FFT
/// (refined by parabolic interpolation) and returned in ascending order. They
/// are accurate to about one bin, see [`fourier_bin_width`].
pub fn extract_gaps(traj: &Trajectory<BipartiteField>, probe: &BipartiteField) -> Result<Vec<f64>> {
    let n = traj.times.len();
    if n < MIN_GAP_SAMPLES {
        return Err(Error::TooFewSamples {
            needed: MIN_GAP_SAMPLES,
            got: n,
        });
    }
    let dt = uniform_step(&traj.times)?;
    let mut signal = traj
        .states
        .iter()
        .enumerate()
        .map(|(k, state)| {
            let hann = 0.5 * (1.0 - (2.0 * PI * k as f64 / n as f64).cos());
            Ok(functional_l(probe, state)? * hann)
        })
        .collect::<Result<Vec<C64>>>()?;
    FftPlanner::new().plan_fft_forward(n).process(&mut signal);

    let mags: Vec<f64> = signal.iter().map(|z| z.norm()).collect();
    let top = mags.iter().cloned().fold(0.0, f64::max);
    if top == 0.0 {
        return Ok(Vec::new());
    }
    let mut peaks = Vec::new();
    for k in 0..n {
        let (a, b, c) = (mags[(k + n - 1) % n], mags[k], mags[(k + 1) % n]);
        if b < PEAK_THRESHOLD * top || b <= a || b < c {
            continue;
        }
        let curvature = a - 2.0 * b + c;
        let offset = if curvature != 0.0 {
            0.5 * (a - c) / curvature
        } else {
            0.0
        };
        let bin = if k > n / 2 {
            k as f64 - n as f64
        } else {
            k as f64
        };
        peaks.push(2.0 * PI * (bin + offset) / (n as f64 * dt));
    }
    peaks.sort_by(f64::total_cmp);
    Ok(peaks)
}

/// All gaps `λ_i - λ_j`, sorted, duplicates within the degeneracy cutoff merged.
pub fn gap_table(op: &DirichletOperator) -> Vec<f64> {
    let m = op.sites();
    let mut gaps: Vec<f64> = (0..m)
        .flat_map(|i| (0..m).map(move |j| (i, j)))
        .map(|(i, j)| op.gap(i, j))
        .collect();
    gaps.sort_by(f64::total_cmp);
    let tol = op.degeneracy_cutoff();
    gaps.dedup_by(|a, b| (*a - *b).abs() <= tol);
    gaps
}

/// The table entry closest to `omega`.
pub fn nearest_gap(table: &[f64], omega: f64) -> Option<f64> {
    table
        .iter()
        .copied()
        .min_by(|a, b| (a - omega).abs().total_cmp(&(b - omega).abs()))
}
