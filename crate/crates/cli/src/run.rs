use std::fmt::Display;
use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vnlw_core::aip::{anti_inner, axiom_check, axiom_samples, separation_kernel};
use vnlw_core::discretization::{dirichlet_form, write_closed_field, write_field, FormKind};
use vnlw_core::evolution::{
    extract_gaps, fourier_bin_width, gap_table, nearest_gap, norm_drift, propagate_vnlw,
    MIN_GAP_SAMPLES,
};
use vnlw_core::solver::{
    compose_solution, discrete_hermitian_space, reduce_problem, solve_spectral,
    tensor_oracle_study, weak_residual, GalerkinSolver, GALERKIN_MAX_DIM,
};
use vnlw_core::{
    BipartiteField, BoxDomain, CMatrix, ClosedField, Det2Form, DirichletOperator, EvolutionConfig,
    GridFunction, ReducedProblem, Scalars, C64,
};

use crate::problem::{Builtin, Data, Mode, ProblemSpec};
use crate::CliError;

/// Orders outside `2.0 ± ORDER_BAND` fail the convergence check.
const ORDER_BAND: f64 = 0.1;
/// Relative agreement required between independent solution paths.
const CROSS_CHECK_TOL: f64 = 1e-8;

/// `key = value` lines, written in insertion order.
#[derive(Debug, Default)]
struct Report {
    lines: Vec<(String, String)>,
}

impl Report {
    fn put(&mut self, key: impl Into<String>, value: impl Display) {
        self.lines.push((key.into(), value.to_string()));
    }

    fn write(&self, path: &Path) -> Result<(), CliError> {
        let mut out = BufWriter::new(File::create(path)?);
        for (k, v) in &self.lines {
            writeln!(out, "{k} = {v}")?;
        }
        out.flush()?;
        Ok(())
    }
}

/// Named pass/fail checks in evaluation order.
#[derive(Debug, Default)]
struct Checks {
    results: Vec<(String, bool, String)>,
}

impl Checks {
    fn record(&mut self, name: &str, pass: bool, detail: String) {
        self.results.push((name.to_string(), pass, detail));
    }

    fn print(&self) {
        for (name, pass, detail) in &self.results {
            println!("{} {name}: {detail}", if *pass { "PASS" } else { "FAIL" });
        }
    }

    fn into_report(self, report: &mut Report) -> Result<(), CliError> {
        let mut failed = Vec::new();
        for (name, pass, _) in &self.results {
            report.put(format!("check.{name}"), if *pass { "PASS" } else { "FAIL" });
            if !pass {
                failed.push(name.clone());
            }
        }
        report.put(
            "status",
            if failed.is_empty() {
                "ok".to_string()
            } else {
                format!("failed: {}", failed.join(", "))
            },
        );
        if failed.is_empty() {
            Ok(())
        } else {
            Err(CliError::Checks(failed))
        }
    }
}

fn numerical(stage: &'static str) -> impl Fn(vnlw_core::Error) -> CliError {
    move |e| CliError::Numerical {
        stage,
        message: e.to_string(),
    }
}

fn sci(v: f64) -> String {
    format!("{v:e}")
}

/// Runs the pipeline for `spec.mode`, writing all artifacts into `out`.
/// Failing numerical checks are reported after every artifact is written.
pub fn run(spec: &ProblemSpec, out: &Path) -> Result<(), CliError> {
    fs::create_dir_all(out)?;
    let op = DirichletOperator::new(spec.domain, spec.potential.as_deref())
        .map_err(numerical("operator"))?;
    let mut report = Report::default();
    report.put("mode", spec.mode.name());
    report.put("n", spec.n());
    report.put("length", spec.domain.grid().length());
    report.put("n_cells", spec.n_cells());
    report.put("sites", op.sites());
    report.put("lambda_min", sci(op.lambda_min()));
    report.put("lambda_max", sci(op.lambda_max()));
    report.put("poincare_constant", sci(op.poincare_constant()));
    let mut checks = Checks::default();
    match spec.mode {
        Mode::Solve => solve(spec, &op, out, &mut report, &mut checks)?,
        Mode::Evolve => evolve(spec, &op, out, &mut report, &mut checks)?,
        Mode::Verify => verify(spec, &op, &mut report, &mut checks)?,
    }
    checks.print();
    let result = checks.into_report(&mut report);
    report.write(&out.join("report.txt"))?;
    result
}

fn tensor_profile(builtin: &Builtin) -> Option<fn(&[f64]) -> f64> {
    match builtin {
        Builtin::TensorQuadratic => Some(|p| p.iter().map(|v| v * v).product()),
        Builtin::TensorLinear => Some(|p| p.iter().product()),
        _ => None,
    }
}

fn mode_pair_source(op: &DirichletOperator, k: usize, l: usize) -> BipartiteField {
    let m = op.sites();
    let mut w_hat = CMatrix::zeros(m, m);
    w_hat[(k - 1, l - 1)] += C64::new(1.0, 0.0);
    w_hat[(l - 1, k - 1)] -= C64::new(1.0, 0.0);
    BipartiteField::new(op.domain(), op.from_eigenbasis(&w_hat)).expect("operator-shaped field")
}

fn solve(
    spec: &ProblemSpec,
    op: &DirichletOperator,
    out: &Path,
    report: &mut Report,
    checks: &mut Checks,
) -> Result<(), CliError> {
    let domain = spec.domain;
    let data = spec.data.as_ref().expect("validated");
    let (problem, label) = match data {
        Data::Builtin(b @ (Builtin::TensorQuadratic | Builtin::TensorLinear)) => {
            let g = tensor_profile(b).expect("tensor builtin");
            let f = ClosedField::from_fn(domain, |x, y| C64::new(g(x) * g(y), 0.0));
            let label = if *b == Builtin::TensorQuadratic {
                "tensor-quadratic"
            } else {
                "tensor-linear"
            };
            (
                reduce_problem(&f, op).map_err(numerical("reduce"))?,
                label.to_string(),
            )
        }
        Data::Builtin(Builtin::SineGap { k, l }) => {
            let w = mode_pair_source(op, *k, *l);
            (
                ReducedProblem::from_source(w, op).map_err(numerical("reduce"))?,
                format!("sine-gap {k} {l}"),
            )
        }
        Data::Boundary(f) => (
            reduce_problem(f, op).map_err(numerical("reduce"))?,
            "boundary file".to_string(),
        ),
        Data::Source(w) => (
            ReducedProblem::from_source(w.clone(), op).map_err(numerical("reduce"))?,
            "source file".to_string(),
        ),
        Data::Builtin(Builtin::CoherentMix) | Data::Initial(_) => {
            unreachable!("rejected by validation")
        }
    };
    report.put("data", label);

    let solution = solve_spectral(&problem).map_err(numerical("spectral solve"))?;
    let phi_interior =
        compose_solution(&solution.theta, problem.boundary()).map_err(numerical("compose"))?;
    let phi = closed_with_interior(problem.boundary(), &phi_interior);
    let residual = weak_residual(&solution.theta, &problem).map_err(numerical("weak residual"))?;
    let hermiticity = solution.theta.hermiticity_defect();

    write_field(File::create(out.join("theta.csv"))?, &solution.theta)
        .map_err(numerical("write theta"))?;
    write_closed_field(File::create(out.join("phi.csv"))?, &phi).map_err(numerical("write phi"))?;

    report.put("weak_residual", sci(residual));
    report.put("kernel_obstruction", sci(solution.kernel_obstruction));
    report.put("hermiticity_defect", sci(hermiticity));
    report.put("gap_floor", sci(solution.gap_floor));
    if solution.kernel_obstruction > spec.tolerances.algebraic * problem.source().max_abs().max(1.0)
    {
        report.put(
            "warning",
            "source has zero-gap content that no solution can match",
        );
    }
    checks.record(
        "weak_residual",
        residual <= spec.tolerances.weak,
        format!(
            "{} (tolerance {})",
            sci(residual),
            sci(spec.tolerances.weak)
        ),
    );
    checks.record(
        "hermiticity",
        hermiticity <= spec.tolerances.algebraic,
        format!(
            "{} (tolerance {})",
            sci(hermiticity),
            sci(spec.tolerances.algebraic)
        ),
    );

    match data {
        Data::Builtin(b @ (Builtin::TensorQuadratic | Builtin::TensorLinear))
            if spec.potential.is_none() =>
        {
            tensor_oracle(
                spec,
                tensor_profile(b).expect("tensor builtin"),
                report,
                checks,
            )?;
        }
        Data::Builtin(Builtin::SineGap { k, l }) => {
            let (i, j) = (k - 1, l - 1);
            if op.is_zero_gap(i, j) {
                report.put("oracle", "none (zero gap)");
            } else {
                let sym = BipartiteField::tensor(domain, &op.mode(i), &op.mode(j))
                    .and_then(|a| a.add(&BipartiteField::tensor(domain, &op.mode(j), &op.mode(i))?))
                    .map_err(numerical("oracle"))?;
                let exact = sym.scale(C64::new(1.0 / op.gap(i, j), 0.0));
                let err = solution
                    .theta
                    .max_diff(&exact)
                    .map_err(numerical("oracle"))?;
                report.put("oracle", "closed-form mode pair");
                report.put("oracle_error", sci(err));
                let limit = CROSS_CHECK_TOL * exact.max_abs();
                checks.record(
                    "oracle",
                    err <= limit,
                    format!("{} (tolerance {})", sci(err), sci(limit)),
                );
            }
        }
        _ => report.put("oracle", "none"),
    }
    Ok(())
}

fn closed_with_interior(boundary: &ClosedField, interior: &BipartiteField) -> ClosedField {
    let domain = boundary.domain();
    let mut values = boundary.values().clone();
    for s in 0..domain.sites() {
        for t in 0..domain.sites() {
            let (cs, ct) = (
                domain.closed_index_of_site(s),
                domain.closed_index_of_site(t),
            );
            values[(cs, ct)] = interior.values()[(s, t)];
        }
    }
    ClosedField::new(domain, values).expect("closed-grid shape")
}

fn tensor_oracle(
    spec: &ProblemSpec,
    g: fn(&[f64]) -> f64,
    report: &mut Report,
    checks: &mut Checks,
) -> Result<(), CliError> {
    let (length, dim) = (spec.domain.grid().length(), spec.n());
    report.put(
        "oracle",
        "u(x) u(y), u the discrete harmonic extension of the boundary profile",
    );
    let single =
        tensor_oracle_study(length, dim, &[spec.n_cells()], g).map_err(numerical("oracle"))?;
    report.put("oracle_error", sci(single.errors[0]));
    if spec.convergence.len() < 2 {
        return Ok(());
    }
    let study = tensor_oracle_study(length, dim, &spec.convergence, g)
        .map_err(numerical("convergence study"))?;
    for (n, e) in study.n_cells.iter().zip(&study.errors) {
        report.put(format!("convergence.n{n}.error"), sci(*e));
    }
    let order = study.final_order().expect("two or more refinements");
    let last = *study.errors.last().expect("nonempty");
    report.put("oracle_order", format!("{order:.6}"));
    let exact = last <= spec.tolerances.weak;
    checks.record(
        "oracle_order",
        exact || (order - 2.0).abs() <= ORDER_BAND,
        if exact {
            format!("exact to {}", sci(last))
        } else {
            format!("observed order {order:.4}, expected 2.0 ± {ORDER_BAND}")
        },
    );
    Ok(())
}

fn coherent_mix(op: &DirichletOperator) -> BipartiteField {
    let psi = (op.mode(0) + op.mode(1) + op.mode(2)) * C64::new(1.0 / 3f64.sqrt(), 0.0);
    GridFunction::new(op.domain(), psi)
        .expect("operator-shaped state")
        .density()
}

fn evolve(
    spec: &ProblemSpec,
    op: &DirichletOperator,
    out: &Path,
    report: &mut Report,
    checks: &mut Checks,
) -> Result<(), CliError> {
    let psi0 = match spec.data.as_ref().expect("validated") {
        Data::Builtin(Builtin::CoherentMix) => {
            report.put("data", "coherent-mix");
            coherent_mix(op)
        }
        Data::Initial(f) => {
            report.put("data", "initial file");
            f.clone()
        }
        _ => unreachable!("rejected by validation"),
    };
    let cfg =
        EvolutionConfig::new(op, spec.hbar, spec.times.clone()).map_err(numerical("configure"))?;
    let traj = propagate_vnlw(&psi0, &cfg).map_err(numerical("propagate"))?;

    let mut norms = BufWriter::new(File::create(out.join("norms.csv"))?);
    writeln!(norms, "t,norm_sq")?;
    for (k, (t, state)) in traj.times().iter().zip(traj.states()).enumerate() {
        write_field(File::create(out.join(format!("state_{k:04}.csv")))?, state)
            .map_err(numerical("write state"))?;
        writeln!(norms, "{:.16e},{:.16e}", t, traj.norms()[k].powi(2))?;
    }
    norms.flush()?;

    let tol = spec.tolerances.algebraic;
    let drift = norm_drift(&traj).map_err(numerical("norm drift"))?;
    report.put("hbar", spec.hbar);
    report.put("samples", traj.len());
    report.put("norm_drift", sci(drift));
    checks.record(
        "norm_drift",
        drift <= tol,
        format!("{} (tolerance {})", sci(drift), sci(tol)),
    );

    let scale = psi0.max_abs().max(1.0);
    if psi0.hermiticity_defect() <= tol * scale {
        let worst = traj
            .states()
            .iter()
            .map(|s| s.hermiticity_defect())
            .fold(0.0, f64::max);
        report.put("hermiticity_defect", sci(worst));
        checks.record(
            "hermiticity",
            worst <= tol * scale,
            format!("{} (tolerance {})", sci(worst), sci(tol * scale)),
        );
    }

    if traj.len() < MIN_GAP_SAMPLES {
        report.put(
            "gap_extraction",
            format!("skipped (needs {MIN_GAP_SAMPLES} samples)"),
        );
        return Ok(());
    }
    let peaks = match extract_gaps(&traj, &psi0) {
        Ok(p) => p,
        Err(e) => {
            report.put("gap_extraction", format!("skipped ({e})"));
            return Ok(());
        }
    };
    let bin = fourier_bin_width(&traj).map_err(numerical("gap extraction"))?;
    let table = gap_table(op);
    let mut gaps = BufWriter::new(File::create(out.join("gaps.csv"))?);
    writeln!(gaps, "frequency,nearest_gap,difference")?;
    let mut worst: f64 = 0.0;
    for &w in &peaks {
        let g = nearest_gap(&table, w).expect("nonempty table");
        worst = worst.max((w - g).abs());
        writeln!(gaps, "{:.16e},{:.16e},{:.16e}", w, g, w - g)?;
    }
    gaps.flush()?;
    let mut table_out = BufWriter::new(File::create(out.join("gap_table.csv"))?);
    writeln!(table_out, "gap")?;
    for g in &table {
        writeln!(table_out, "{g:.16e}")?;
    }
    table_out.flush()?;
    report.put("gap_bin_width", sci(bin));
    report.put("gap_peaks", peaks.len());
    report.put("gap_max_mismatch", sci(worst));
    checks.record(
        "gap_peaks",
        worst <= bin,
        format!(
            "{} peaks, worst mismatch {} (bin width {})",
            peaks.len(),
            sci(worst),
            sci(bin)
        ),
    );
    Ok(())
}

fn random_field(rng: &mut ChaCha8Rng, domain: BoxDomain) -> BipartiteField {
    let m = domain.sites();
    let values = CMatrix::from_fn(m, m, |_, _| {
        C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    });
    BipartiteField::new(domain, values).expect("domain-shaped field")
}

fn gap_supported_source(rng: &mut ChaCha8Rng, op: &DirichletOperator) -> BipartiteField {
    let m = op.sites();
    let mut w_hat = CMatrix::zeros(m, m);
    for i in 0..m {
        for j in 0..i {
            if !op.is_zero_gap(i, j) {
                let z = C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                w_hat[(i, j)] = z;
                w_hat[(j, i)] = -z.conj();
            }
        }
    }
    BipartiteField::new(op.domain(), op.from_eigenbasis(&w_hat)).expect("operator-shaped field")
}

fn verify(
    spec: &ProblemSpec,
    op: &DirichletOperator,
    report: &mut Report,
    checks: &mut Checks,
) -> Result<(), CliError> {
    let tol = spec.tolerances.algebraic;
    let domain = spec.domain;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);

    let det2 = axiom_check(&Det2Form::default(), 1000, spec.seed, Scalars::Complex);
    let defect = det2.additivity_defect.max(det2.antisymmetry_defect);
    checks.record(
        "axioms_det2",
        defect <= tol,
        format!("max defect {}", sci(defect)),
    );

    let space = discrete_hermitian_space(op).map_err(numerical("hermitian space"))?;
    let axioms = axiom_check(&space, 200, spec.seed, Scalars::Real);
    let defect = axioms.additivity_defect.max(axioms.antisymmetry_defect);
    let self_zero = axiom_samples(&space, 200, spec.seed, Scalars::Real)
        .iter()
        .all(|s| anti_inner(&s.x, &s.x, &space) == C64::new(0.0, 0.0));
    checks.record(
        "axioms_hermitian_fields",
        defect <= tol && self_zero,
        format!("max defect {}, <x,x> = 0 exactly: {self_zero}", sci(defect)),
    );

    let mut sbp: f64 = 0.0;
    for _ in 0..20 {
        let (psi, theta) = (
            random_field(&mut rng, domain),
            random_field(&mut rng, domain),
        );
        let anti = dirichlet_form(&psi, &theta, op, FormKind::Anti).map_err(numerical("forms"))?;
        let (at, ta) = (op.apply_x(theta.values()), op.apply_y(theta.values()));
        let w = domain.product_weight();
        let strong: C64 = psi
            .values()
            .iter()
            .zip((&at - &ta).iter())
            .map(|(p, q)| p * q.conj())
            .sum::<C64>()
            * w;
        let scale: f64 = psi
            .values()
            .iter()
            .zip(at.iter().zip(ta.iter()))
            .map(|(p, (u, v))| p.norm() * (u.norm() + v.norm()))
            .sum::<f64>()
            * w;
        sbp = sbp.max((anti - strong).norm() / scale);
    }
    checks.record(
        "summation_by_parts",
        sbp <= tol,
        format!("max relative mismatch {}", sci(sbp)),
    );

    let mut identity: f64 = 0.0;
    let mut poincare_ok = true;
    let m_h = op.poincare_constant();
    for _ in 0..100 {
        let psi = random_field(&mut rng, domain);
        let full = dirichlet_form(&psi, &psi, op, FormKind::Full).map_err(numerical("forms"))?;
        poincare_ok &= psi.norm_sq() <= m_h * full.re * (1.0 + tol);
        let herm = psi.hermitian_project();
        let full = dirichlet_form(&herm, &herm, op, FormKind::Full).map_err(numerical("forms"))?;
        let s = dirichlet_form(&herm, &herm, op, FormKind::S).map_err(numerical("forms"))?;
        identity = identity.max((full - s * 2.0).norm() / full.norm());
    }
    checks.record(
        "norm_identity",
        identity <= tol,
        format!("max relative mismatch {}", sci(identity)),
    );
    checks.record("poincare", poincare_ok, format!("constant {}", sci(m_h)));

    let kernel = separation_kernel(&space).kernel_basis;
    let m = op.sites();
    let expected = (0..m)
        .flat_map(|i| (0..m).map(move |j| (i, j)))
        .filter(|&(i, j)| op.is_zero_gap(i, j))
        .count();
    report.put("kernel_dimension", kernel.len());
    report.put("expected_kernel_dimension", expected);
    checks.record(
        "separation_kernel",
        kernel.len() == expected,
        format!("dimension {} (zero-gap count {expected})", kernel.len()),
    );

    if m * m <= GALERKIN_MAX_DIM {
        let galerkin = GalerkinSolver::new(op).map_err(numerical("galerkin"))?;
        let (mut disagreement, mut residual, mut shift): (f64, f64, f64) = (0.0, 0.0, 0.0);
        for _ in 0..3 {
            let p = ReducedProblem::from_source(gap_supported_source(&mut rng, op), op)
                .map_err(numerical("reduce"))?;
            let spectral = solve_spectral(&p).map_err(numerical("spectral solve"))?;
            let (theta, _) = galerkin.solve(&p).map_err(numerical("galerkin"))?;
            let scale = spectral.theta.max_abs().max(f64::MIN_POSITIVE);
            disagreement = disagreement.max(
                spectral
                    .theta
                    .max_diff(&theta)
                    .map_err(numerical("compare"))?
                    / scale,
            );
            let base = weak_residual(&spectral.theta, &p).map_err(numerical("weak residual"))?;
            residual = residual.max(base);
            let mut kappa = CMatrix::zeros(m, m);
            for v in &kernel {
                kappa += CMatrix::from_fn(m, m, |x, y| v[x * m + y])
                    * C64::new(rng.gen_range(-1.0..1.0), 0.0);
            }
            let shifted = spectral
                .theta
                .add(&BipartiteField::new(domain, kappa).expect("shape"))
                .expect("shape");
            shift = shift.max(
                (weak_residual(&shifted, &p).map_err(numerical("weak residual"))? - base).abs(),
            );
        }
        checks.record(
            "cross_validation",
            disagreement <= CROSS_CHECK_TOL && residual <= spec.tolerances.weak,
            format!(
                "relative disagreement {}, weak residual {}",
                sci(disagreement),
                sci(residual)
            ),
        );
        checks.record(
            "kernel_invariance",
            shift <= tol,
            format!("residual shift {}", sci(shift)),
        );
    } else {
        report.put(
            "cross_validation",
            format!(
                "skipped (Galerkin dimension {} > {GALERKIN_MAX_DIM})",
                m * m
            ),
        );
    }

    let psi0 = random_field(&mut rng, domain).hermitian_project();
    let cfg = EvolutionConfig::new(op, spec.hbar, (0..20).map(|k| k as f64 / 19.0).collect())
        .map_err(numerical("configure"))?;
    let traj = propagate_vnlw(&psi0, &cfg).map_err(numerical("propagate"))?;
    let drift = norm_drift(&traj).map_err(numerical("norm drift"))?;
    let herm = traj
        .states()
        .iter()
        .map(|s| s.hermiticity_defect())
        .fold(0.0, f64::max);
    checks.record(
        "conservation",
        drift <= tol && herm <= tol,
        format!(
            "norm drift {}, Hermiticity defect {}",
            sci(drift),
            sci(herm)
        ),
    );
    Ok(())
}
