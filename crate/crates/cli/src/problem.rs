//! Problem files: JSON documents describing one solve, evolve or verify run.
//!
//! ```json
//! {
//!   "mode": "solve",
//!   "n": 1,
//!   "length": 1.0,
//!   "n_cells": 32,
//!   "potential": [0.0, ...],
//!   "data": "tensor-quadratic",
//!   "convergence": [16, 32, 64],
//!   "times": {"start": 0.0, "end": 1.0, "count": 100},
//!   "hbar": 1.0,
//!   "seed": 0,
//!   "tolerances": {"weak": 1e-10, "algebraic": 1e-12}
//! }
//! ```
//!
//! `data` is either a builtin (`tensor-quadratic`, `tensor-linear`,
//! `sine-gap K L`, `coherent-mix`) or `{"file": "path.csv", "kind": K}` with
//! `K` one of `boundary` (closed-grid `F`), `source` (interior `W`) or
//! `initial` (interior `Ψ(0)`). Relative paths are resolved against the
//! directory of the problem file.

use std::fs::File;
use std::path::{Path, PathBuf};

use serde::Deserialize;
use vnlw_core::discretization::{read_closed_field, read_field};
use vnlw_core::solver::check_source_symmetry;
use vnlw_core::{BipartiteField, BoxDomain, ClosedField, Grid1D};

use crate::CliError;

pub const DEFAULT_TOL_WEAK: f64 = 1e-10;
pub const DEFAULT_TOL_ALG: f64 = 1e-12;
/// Largest `n_cells` accepted on square domains.
pub const MAX_SQUARE_CELLS: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Solve,
    Evolve,
    Verify,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Solve => "solve",
            Mode::Evolve => "evolve",
            Mode::Verify => "verify",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FileKind {
    Boundary,
    Source,
    Initial,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum RawData {
    Builtin(String),
    File { file: PathBuf, kind: FileKind },
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum RawTimes {
    List(Vec<f64>),
    Range { start: f64, end: f64, count: usize },
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTolerances {
    weak: Option<f64>,
    algebraic: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProblem {
    mode: Option<Mode>,
    n: usize,
    length: f64,
    n_cells: usize,
    potential: Option<Vec<f64>>,
    data: Option<RawData>,
    times: Option<RawTimes>,
    convergence: Option<Vec<usize>>,
    hbar: Option<f64>,
    seed: Option<u64>,
    #[serde(default)]
    tolerances: RawTolerances,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Builtin {
    /// `F = g(x) g(y)` with `g` the product of squared coordinates.
    TensorQuadratic,
    /// `F = g(x) g(y)` with `g` the product of coordinates.
    TensorLinear,
    /// `W = q_k ⊗ q_l - q_l ⊗ q_k` from eigenmodes `k`, `l` (1-based).
    SineGap { k: usize, l: usize },
    /// `Ψ(0) = ψ ψ^H` with `ψ` the normalized sum of the lowest three modes.
    CoherentMix,
}

#[derive(Debug, Clone)]
pub enum Data {
    Builtin(Builtin),
    Boundary(ClosedField),
    Source(BipartiteField),
    Initial(BipartiteField),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub weak: f64,
    pub algebraic: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            weak: DEFAULT_TOL_WEAK,
            algebraic: DEFAULT_TOL_ALG,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ProblemSpec {
    pub mode: Mode,
    pub domain: BoxDomain,
    pub potential: Option<Vec<f64>>,
    /// Absent only in verify mode.
    pub data: Option<Data>,
    /// Empty unless the mode is evolve.
    pub times: Vec<f64>,
    pub convergence: Vec<usize>,
    pub hbar: f64,
    pub seed: u64,
    pub tolerances: Tolerances,
}

impl ProblemSpec {
    pub fn n(&self) -> usize {
        self.domain.dim()
    }

    pub fn n_cells(&self) -> usize {
        self.domain.grid().n_cells()
    }
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Validation(msg.into())
}

/// Reads and validates a problem file. `command` is the subcommand the file
/// is run under; a `mode` key in the file must agree with it.
pub fn parse_problem(path: &Path, command: Option<Mode>) -> Result<ProblemSpec, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Parse {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    let raw: RawProblem = serde_json::from_str(&text).map_err(|e| CliError::Parse {
        path: path.to_path_buf(),
        message: format!("line {} column {}: {e}", e.line(), e.column()),
    })?;
    let base = path.parent().unwrap_or(Path::new("."));
    validate(raw, command, base)
}

fn validate(raw: RawProblem, command: Option<Mode>, base: &Path) -> Result<ProblemSpec, CliError> {
    let mode = match (raw.mode, command) {
        (Some(file), Some(cmd)) if file != cmd => {
            return Err(invalid(format!(
                "mode `{}` in file conflicts with command `{}`",
                file.name(),
                cmd.name()
            )))
        }
        (Some(m), _) | (None, Some(m)) => m,
        (None, None) => return Err(invalid("mode: missing")),
    };
    if raw.n != 1 && raw.n != 2 {
        return Err(invalid(format!("n: must be 1 or 2, got {}", raw.n)));
    }
    if raw.n_cells < 2 {
        return Err(invalid(format!(
            "n_cells: must be at least 2, got {}",
            raw.n_cells
        )));
    }
    if raw.n == 2 && raw.n_cells > MAX_SQUARE_CELLS {
        return Err(invalid(format!(
            "n_cells: square domains are limited to {MAX_SQUARE_CELLS} cells, got {}",
            raw.n_cells
        )));
    }
    if !(raw.length.is_finite() && raw.length > 0.0) {
        return Err(invalid(format!(
            "length: must be positive, got {}",
            raw.length
        )));
    }
    let grid = Grid1D::new(raw.length, raw.n_cells).map_err(|e| invalid(e.to_string()))?;
    let domain = BoxDomain::new(grid, raw.n).map_err(|e| invalid(e.to_string()))?;

    if let Some(p) = &raw.potential {
        if p.len() != domain.sites() {
            return Err(invalid(format!(
                "potential: expected {} interior values, got {}",
                domain.sites(),
                p.len()
            )));
        }
        if p.iter().any(|v| !v.is_finite()) {
            return Err(invalid("potential: values must be finite"));
        }
    }

    let data = match raw.data {
        Some(d) => Some(load_data(d, mode, domain, base)?),
        None if mode == Mode::Verify => None,
        None => return Err(invalid(format!("data: required in {} mode", mode.name()))),
    };

    let times = match (mode, raw.times) {
        (Mode::Evolve, Some(t)) => expand_times(t)?,
        (Mode::Evolve, None) => return Err(invalid("times: required in evolve mode")),
        _ => Vec::new(),
    };

    let convergence = raw.convergence.unwrap_or_default();
    if let Some(bad) = convergence
        .iter()
        .find(|&&c| c < 2 || (raw.n == 2 && c > MAX_SQUARE_CELLS))
    {
        return Err(invalid(format!("convergence: invalid cell count {bad}")));
    }
    if convergence.windows(2).any(|w| w[1] <= w[0]) {
        return Err(invalid(
            "convergence: cell counts must be strictly increasing",
        ));
    }

    let hbar = raw.hbar.unwrap_or(1.0);
    if !(hbar.is_finite() && hbar > 0.0) {
        return Err(invalid(format!("hbar: must be positive, got {hbar}")));
    }
    let tolerances = Tolerances {
        weak: positive(
            "tolerances.weak",
            raw.tolerances.weak.unwrap_or(DEFAULT_TOL_WEAK),
        )?,
        algebraic: positive(
            "tolerances.algebraic",
            raw.tolerances.algebraic.unwrap_or(DEFAULT_TOL_ALG),
        )?,
    };

    Ok(ProblemSpec {
        mode,
        domain,
        potential: raw.potential,
        data,
        times,
        convergence,
        hbar,
        seed: raw.seed.unwrap_or(0),
        tolerances,
    })
}

pub fn positive(name: &str, v: f64) -> Result<f64, CliError> {
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(invalid(format!("{name}: must be positive, got {v}")))
    }
}

fn expand_times(raw: RawTimes) -> Result<Vec<f64>, CliError> {
    let times = match raw {
        RawTimes::List(t) => t,
        RawTimes::Range { start, end, count } => {
            if count < 2 || end.partial_cmp(&start) != Some(std::cmp::Ordering::Greater) {
                return Err(invalid("times: a range needs count >= 2 and end > start"));
            }
            let dt = (end - start) / (count - 1) as f64;
            (0..count).map(|k| start + k as f64 * dt).collect()
        }
    };
    if times.is_empty() {
        return Err(invalid("times: must not be empty"));
    }
    if times.iter().any(|t| !t.is_finite()) || times.windows(2).any(|w| w[1] <= w[0]) {
        return Err(invalid("times: must be finite and strictly ascending"));
    }
    Ok(times)
}

fn parse_builtin(text: &str) -> Result<Builtin, CliError> {
    let mut words = text.split_whitespace();
    let name = words.next().unwrap_or("");
    let params: Vec<&str> = words.collect();
    let builtin = match (name, params.as_slice()) {
        ("tensor-quadratic", []) => Builtin::TensorQuadratic,
        ("tensor-linear", []) => Builtin::TensorLinear,
        ("coherent-mix", []) => Builtin::CoherentMix,
        ("sine-gap", [k, l]) => {
            let index = |s: &str| {
                s.parse::<usize>().ok().filter(|&v| v >= 1).ok_or_else(|| {
                    invalid(format!(
                        "data: sine-gap mode index `{s}` must be a positive integer"
                    ))
                })
            };
            Builtin::SineGap {
                k: index(k)?,
                l: index(l)?,
            }
        }
        ("sine-gap", _) => {
            return Err(invalid(
                "data: sine-gap takes two mode indices, e.g. `sine-gap 1 2`",
            ))
        }
        _ => return Err(invalid(format!("data: unknown builtin `{text}`"))),
    };
    Ok(builtin)
}

fn load_data(raw: RawData, mode: Mode, domain: BoxDomain, base: &Path) -> Result<Data, CliError> {
    let data = match raw {
        RawData::Builtin(text) => {
            let builtin = parse_builtin(&text)?;
            if let Builtin::SineGap { k, l } = builtin {
                if k.max(l) > domain.sites() {
                    return Err(invalid(format!(
                        "data: sine-gap indices must not exceed the {} interior modes",
                        domain.sites()
                    )));
                }
            }
            if builtin == Builtin::CoherentMix && domain.sites() < 3 {
                return Err(invalid(
                    "data: coherent-mix needs at least three interior modes",
                ));
            }
            Data::Builtin(builtin)
        }
        RawData::File { file, kind } => {
            let path = if file.is_absolute() {
                file
            } else {
                base.join(file)
            };
            let open = || {
                File::open(&path)
                    .map_err(|e| invalid(format!("data: cannot open {}: {e}", path.display())))
            };
            let context = |e: vnlw_core::Error| invalid(format!("data: {}: {e}", path.display()));
            match kind {
                FileKind::Boundary => {
                    let f = read_closed_field(open()?, domain).map_err(context)?;
                    if f.hermiticity_defect() > DEFAULT_TOL_ALG * f.max_abs().max(1.0) {
                        return Err(invalid("data: boundary field is not Hermitian"));
                    }
                    Data::Boundary(f)
                }
                FileKind::Source => {
                    let w = read_field(open()?, domain).map_err(context)?;
                    if !check_source_symmetry(&w) {
                        return Err(invalid("data: source field is not anti-Hermitian"));
                    }
                    Data::Source(w)
                }
                FileKind::Initial => Data::Initial(read_field(open()?, domain).map_err(context)?),
            }
        }
    };
    let allowed = match (&data, mode) {
        (Data::Builtin(Builtin::CoherentMix), m) => m != Mode::Solve,
        (Data::Initial(_), m) => m != Mode::Solve,
        (Data::Builtin(_) | Data::Boundary(_) | Data::Source(_), m) => m != Mode::Evolve,
    };
    if !allowed {
        return Err(invalid(format!("data: not usable in {} mode", mode.name())));
    }
    Ok(data)
}
