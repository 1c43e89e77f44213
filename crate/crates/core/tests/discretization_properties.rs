mod common;

use common::*;
use nalgebra::DMatrix;
use proptest::prelude::*;
use rand::Rng;
use vnlw_core::discretization::{
    dirichlet_form, BipartiteField, BoxDomain, DirichletOperator, FormKind, Grid1D,
};
use vnlw_core::C64;

const KINDS: [FormKind; 3] = [FormKind::Full, FormKind::S, FormKind::Anti];

fn operator(seed: u64, n_cells: usize, dim: usize, with_potential: bool) -> DirichletOperator {
    let domain = BoxDomain::new(Grid1D::new(1.0, n_cells).unwrap(), dim).unwrap();
    let mut r = rng(seed);
    let potential: Vec<f64> = (0..domain.sites()).map(|_| r.gen_range(0.0..5.0)).collect();
    DirichletOperator::new(domain, with_potential.then_some(potential.as_slice())).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn summation_by_parts(seed in any::<u64>(), n in 3usize..14, pot in any::<bool>()) {
        let op = operator(seed, n, 1, pot);
        let mut r = rng(seed ^ 1);
        let psi = random_field(&mut r, op.domain());
        let theta = random_field(&mut r, op.domain());
        let anti = dirichlet_form(&psi, &theta, &op, FormKind::Anti).unwrap();
        let a = op.matrix().map(|v| C64::new(v, 0.0));
        let (at, ta) = (&a * theta.values(), theta.values() * &a);
        let w = op.domain().product_weight();
        let strong: C64 = psi.values().iter().zip((&at - &ta).iter()).map(|(p, q)| p * q.conj()).sum::<C64>() * w;
        let scale: f64 = psi.values().iter().zip(at.iter().zip(ta.iter()))
            .map(|(p, (u, v))| p.norm() * (u.norm() + v.norm())).sum::<f64>() * w;
        prop_assert!((anti - strong).norm() <= 1e-12 * scale);
    }

    #[test]
    fn forms_are_sesquilinear(seed in any::<u64>(), n in 3usize..10, dim in 1usize..=2) {
        let n = if dim == 2 { n.min(6) } else { n };
        let op = operator(seed, n, dim, true);
        let mut r = rng(seed ^ 2);
        let (x, y, z) = (random_field(&mut r, op.domain()), random_field(&mut r, op.domain()), random_field(&mut r, op.domain()));
        let (a, b) = (complex(&mut r), complex(&mut r));
        let combo = x.scale(a).add(&y.scale(b)).unwrap();
        for kind in KINDS {
            let form = |p: &BipartiteField, q: &BipartiteField| dirichlet_form(p, q, &op, kind).unwrap();
            let scale = op.lambda_max() * x.norm().max(y.norm()) * z.norm() * 8.0;
            let first = form(&combo, &z) - (a * form(&x, &z) + b * form(&y, &z));
            let second = form(&z, &combo) - (a.conj() * form(&z, &x) + b.conj() * form(&z, &y));
            prop_assert!(first.norm() <= 1e-12 * scale);
            prop_assert!(second.norm() <= 1e-12 * scale);
        }
    }

    #[test]
    fn full_form_is_positive(seed in any::<u64>(), n in 3usize..12, pot in any::<bool>()) {
        let op = operator(seed, n, 1, pot);
        let psi = random_field(&mut rng(seed ^ 3), op.domain());
        let v = dirichlet_form(&psi, &psi, &op, FormKind::Full).unwrap();
        prop_assert!(v.re > 0.0);
        prop_assert!(v.im.abs() <= 1e-12 * v.re);
        let zero = BipartiteField::zeros(op.domain());
        prop_assert_eq!(dirichlet_form(&zero, &zero, &op, FormKind::Full).unwrap(), C64::new(0.0, 0.0));
    }

    #[test]
    fn anti_form_on_hermitian_fields_is_imaginary(seed in any::<u64>(), n in 3usize..12) {
        let op = operator(seed, n, 1, true);
        let mut r = rng(seed ^ 4);
        let (psi, theta) = (random_hermitian(&mut r, op.domain()), random_hermitian(&mut r, op.domain()));
        let v = dirichlet_form(&psi, &theta, &op, FormKind::Anti).unwrap();
        let s = dirichlet_form(&psi, &theta, &op, FormKind::S).unwrap();
        prop_assert!(v.re.abs() <= 1e-12 * s.norm().max(1e-300) * 4.0);
    }

    #[test]
    fn hermitian_projection_is_idempotent_and_real_linear(seed in any::<u64>(), n in 3usize..10) {
        let op = operator(seed, n, 1, false);
        let mut r = rng(seed ^ 5);
        let (x, y) = (random_field(&mut r, op.domain()), random_field(&mut r, op.domain()));
        let px = x.hermitian_project();
        prop_assert_eq!(px.hermiticity_defect(), 0.0);
        prop_assert!(px.hermitian_project().max_diff(&px).unwrap() <= 1e-15);
        let (a, b): (f64, f64) = (r.gen_range(-2.0..2.0), r.gen_range(-2.0..2.0));
        let lhs = x.scale(C64::new(a, 0.0)).add(&y.scale(C64::new(b, 0.0))).unwrap().hermitian_project();
        let rhs = px.scale(C64::new(a, 0.0)).add(&y.hermitian_project().scale(C64::new(b, 0.0))).unwrap();
        prop_assert!(lhs.max_diff(&rhs).unwrap() <= 1e-14);
    }

    #[test]
    fn operator_invariants(seed in any::<u64>(), n in 2usize..20, pot in any::<bool>()) {
        let op = operator(seed, n, 1, pot);
        let a = op.matrix();
        prop_assert_eq!(a, &a.transpose());
        prop_assert!(op.eigenvalues().iter().all(|&l| l > 0.0));
        let q = op.eigenvectors();
        let defect = (q.transpose() * q - DMatrix::identity(q.ncols(), q.ncols())).abs().max();
        prop_assert!(defect <= 1e-12);
    }
}

#[test]
fn poincare_inequality_on_random_fields() {
    for (n, dim) in [(16, 1), (5, 2)] {
        let op = operator(99, n, dim, true);
        let m_h = op.poincare_constant();
        let mut r = rng(100 + n as u64);
        for _ in 0..1000 {
            let psi = random_field(&mut r, op.domain());
            let full = dirichlet_form(&psi, &psi, &op, FormKind::Full).unwrap().re;
            assert!(psi.norm_sq() <= m_h * full * (1.0 + 1e-12));
        }
    }
}

#[test]
fn poincare_constant_matches_brute_force() {
    for n in [4, 9, 16] {
        let op = interval_op(n);
        let a = laplacian_1d(n);
        let m = a.nrows();
        let id = DMatrix::<f64>::identity(m, m);
        let kron = a.kronecker(&id) + id.kronecker(&a);
        let lowest = kron
            .symmetric_eigen()
            .eigenvalues
            .iter()
            .cloned()
            .fold(f64::INFINITY, f64::min);
        assert!((op.poincare_constant() - 1.0 / lowest).abs() <= 1e-12 / lowest);
    }
}
