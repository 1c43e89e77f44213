mod common;

use common::*;
use nalgebra::{DMatrix, DVector};
use proptest::prelude::*;
use rand::Rng;
use vnlw_core::aip::{anti_inner, represent_functional, separation_kernel, SkewSystem};
use vnlw_core::{AntiInnerSpace, CMatrix, CVector, C64};

fn space(seed: u64, ambient: usize, real_dim: usize) -> AntiInnerSpace {
    let mut rng = rng(seed);
    let b = random_matrix(&mut rng, ambient);
    let metric = b.adjoint() * &b + CMatrix::identity(ambient, ambient);
    let basis = (0..real_dim)
        .map(|_| CVector::from_fn(ambient, |_, _| complex(&mut rng)))
        .collect();
    AntiInnerSpace::new(basis, metric).unwrap()
}

fn vector(rng: &mut impl Rng, d: usize) -> CVector {
    CVector::from_fn(d, |_, _| complex(rng))
}

/// Orthonormal basis of `null(M)` for a square real matrix.
fn null_basis(m: &DMatrix<f64>) -> Vec<DVector<f64>> {
    let eig = (m.transpose() * m).symmetric_eigen();
    let top = eig.eigenvalues.iter().cloned().fold(0.0, f64::max);
    (0..m.ncols())
        .filter(|&i| eig.eigenvalues[i] <= 1e-14 * top)
        .map(|i| eig.eigenvectors.column(i).into_owned())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn self_pairing_vanishes_exactly(seed in any::<u64>(), d in 1usize..6) {
        let s = space(seed, d, 0);
        let x = vector(&mut rng(seed ^ 1), d);
        prop_assert_eq!(anti_inner(&x, &x, &s), C64::new(0.0, 0.0));
    }

    #[test]
    fn antisymmetric_and_real_linear_in_both_slots(seed in any::<u64>(), d in 1usize..6) {
        let s = space(seed, d, 0);
        let mut r = rng(seed ^ 2);
        let (x, y, z) = (vector(&mut r, d), vector(&mut r, d), vector(&mut r, d));
        let (a, b): (f64, f64) = (r.gen_range(-2.0..2.0), r.gen_range(-2.0..2.0));
        let scale = x.norm() * y.norm() * s.metric().norm();
        prop_assert!((anti_inner(&x, &y, &s) + anti_inner(&y, &x, &s)).norm() <= 1e-12 * scale);

        let combo = &x * C64::new(a, 0.0) + &y * C64::new(b, 0.0);
        let right = anti_inner(&z, &combo, &s);
        let expect = anti_inner(&z, &x, &s) * a + anti_inner(&z, &y, &s) * b;
        let scale = z.norm() * (a.abs() * x.norm() + b.abs() * y.norm()) * s.metric().norm();
        prop_assert!((right - expect).norm() <= 1e-12 * scale);
    }

    #[test]
    fn roundtrip_on_separated_spaces(seed in any::<u64>(), half in 1usize..=4) {
        let k = 2 * half;
        let s = space(seed, k, k);
        prop_assume!(separation_kernel(&s).separated);
        let hidden = s.combine(real_vector(&mut rng(seed ^ 3), k).as_slice());
        let l: Vec<C64> = s.basis().iter().map(|e| anti_inner(e, &hidden, &s)).collect();
        let (found, residual) = represent_functional(&s, &l).unwrap();
        let sv = s.skew_gram().singular_values();
        let cond = sv.max() / sv.min();
        prop_assert!((&found - &hidden).norm() <= 1e-14 * cond.max(1e4) * hidden.norm());
        let l_scale = l.iter().map(|z| z.norm()).fold(0.0, f64::max);
        prop_assert!(residual <= 1e-10 * l_scale);
    }

    #[test]
    fn kernel_vectors_pair_to_zero(seed in any::<u64>(), d in 1usize..5, k in 1usize..=8) {
        let k = k.min(2 * d);
        let s = space(seed, d, k);
        let report = separation_kernel(&s);
        let scale = s.metric().norm();
        for v in &report.kernel_basis {
            for e in s.basis() {
                prop_assert!(anti_inner(v, e, &s).norm() <= 1e-10 * scale * e.norm() * v.norm().max(1.0));
            }
        }
    }

    /// The least-squares residual is exactly the part of `c` in `null(K^T)`,
    /// so it vanishes iff `c` is orthogonal to that null space.
    #[test]
    fn residual_is_the_cokernel_component(seed in any::<u64>(), d in 1usize..5, k in 1usize..=8) {
        let k = k.min(2 * d);
        let s = space(seed, d, k);
        let kmat = s.skew_gram();
        let system = SkewSystem::new(kmat.clone());
        let mut r = rng(seed ^ 4);
        let c = real_vector(&mut r, k);
        let cokernel = null_basis(&kmat.transpose());
        let projected: f64 = cokernel.iter().map(|n| n.dot(&c).powi(2)).sum::<f64>().sqrt();
        let l: Vec<C64> = c.iter().map(|&v| C64::new(0.0, v)).collect();
        let rep = system.represent(&l, 1e-12).unwrap();
        prop_assert!((rep.residual - projected).abs() <= 1e-9 * c.norm());
        prop_assert_eq!(rep.residual <= 1e-10 * c.norm(), projected <= 1e-10 * c.norm());

        let in_range = &kmat * real_vector(&mut r, k);
        let l: Vec<C64> = in_range.iter().map(|&v| C64::new(0.0, v)).collect();
        let rep = system.represent(&l, 1e-12).unwrap();
        prop_assert!(rep.residual <= 1e-10 * in_range.norm().max(1e-300));
    }
}
