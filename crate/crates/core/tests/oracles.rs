mod common;

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use boostent::entanglement::{
    assemble_tau, concurrence_reduced, concurrence_wootters, log_negativity_closed,
    log_negativity_numeric, pt_eigenvalues_closed, pt_eigenvalues_numeric, reduced_density,
};
use boostent::kinematics::{
    bloch_from_amplitudes, boosted_basis_spinor, wigner_angle, wigner_rotate_spinor,
    ParticleRapidity, SpinAmplitudePair,
};
use boostent::{BoostRapidity, ComplexMatrix, Polarization, StateParameter, WignerAngle};

#[test]
fn wigner_angle_matches_boost_composition() {
    for &(xi, delta) in &[(1.0, 1.0), (0.3, 2.0), (3.0, 0.1), (5.0, 5.0)] {
        let oracle = common::wigner_angle_by_composition(xi, delta);
        let th = wigner_angle(
            BoostRapidity::from_xi(xi).unwrap(),
            ParticleRapidity::from_delta(delta).unwrap(),
        );
        assert!(
            (th.theta - oracle).abs() < 1e-9,
            "({xi}, {delta}): {} vs {oracle}",
            th.theta
        );
    }
    assert!((common::wigner_angle_by_composition(1.0, 1.0) - 0.420_783_961_638_073).abs() < 1e-12);
}

#[test]
fn wootters_matches_char_poly_on_random_states() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..200 {
        let rho = common::random_density(&mut rng);
        let fast = concurrence_wootters(&rho).unwrap();
        let slow = common::wootters_by_char_poly(&rho);
        assert!((fast - slow).abs() < 1e-10, "{fast} vs {slow}");
    }
}

#[test]
fn wootters_matches_x_formula_on_tau_family() {
    // ρρ̃ has eigenvalues down to ~1e-8 here, where the characteristic
    // polynomial is too ill-conditioned to serve as a 1e-10 reference
    for a in [0.1, 0.45, 0.8] {
        for n in [0.05, 0.5, 0.95] {
            let tau = assemble_tau(
                StateParameter::new(a).unwrap(),
                Polarization::new(n).unwrap(),
            );
            let fast = concurrence_wootters(&tau.matrix).unwrap();
            let x = common::x_state_concurrence(&tau.matrix);
            assert!((fast - x).abs() < 1e-12, "alpha {a}, n {n}: {fast} vs {x}");
        }
    }
}

#[test]
fn bloch_of_rotated_ensemble_gives_polarization() {
    // ±θ samples: n_z = cos θ, transverse components cancel
    let th = 0.8_f64;
    let samples = [
        (0.5, boosted_basis_spinor(1, WignerAngle::new(th))),
        (0.5, boosted_basis_spinor(1, WignerAngle::new(-th))),
    ];
    let b = bloch_from_amplitudes(&samples).unwrap();
    assert!((b.nz - th.cos()).abs() < 1e-15);
    assert!(b.nx.abs() < 1e-15 && b.ny.abs() < 1e-15);
}

#[test]
fn spinor_rotation_preserves_norm_and_orthogonality() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    use rand::Rng;
    for _ in 0..1000 {
        let a1 = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let a2 = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let norm = (a1.norm_sqr() + a2.norm_sqr()).sqrt();
        let s = SpinAmplitudePair::new(a1 / norm, a2 / norm);
        let th = WignerAngle::new(rng.gen_range(-PI..PI));
        let r = wigner_rotate_spinor(s, th);
        assert!((r.norm_sqr() - 1.0).abs() < 1e-12);
        let e1 = boosted_basis_spinor(1, th);
        let e2 = boosted_basis_spinor(2, th);
        assert!(e1.inner(&e2).norm() < 1e-12);
    }
}

fn hermitian_strategy() -> impl Strategy<Value = ComplexMatrix> {
    prop::collection::vec(-1.0f64..1.0, 16).prop_map(|v| {
        let mut m = ComplexMatrix::zeros(4).unwrap();
        let mut k = 0;
        for i in 0..4 {
            m[(i, i)] = Complex64::new(v[k], 0.0);
            k += 1;
            for j in (i + 1)..4 {
                let z = Complex64::new(v[k], v[k + 1]);
                k += 2;
                m[(i, j)] = z;
                m[(j, i)] = z.conj();
            }
        }
        m
    })
}

fn general_strategy() -> impl Strategy<Value = ComplexMatrix> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 16).prop_map(|v| {
        let e: Vec<Complex64> = v.into_iter().map(|(a, b)| Complex64::new(a, b)).collect();
        ComplexMatrix::from_rows(4, &e).unwrap()
    })
}

proptest! {
    #[test]
    fn partial_transpose_is_an_involution(m in general_strategy()) {
        let back = m.partial_transpose_b().unwrap().partial_transpose_b().unwrap();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn partial_trace_preserves_trace(m in hermitian_strategy()) {
        let t = m.partial_trace_b().unwrap().trace();
        prop_assert!((t - m.trace()).norm() < 1e-12);
    }

    #[test]
    fn eigen_sum_and_reconstruction(m in hermitian_strategy()) {
        let e = m.eigh().unwrap();
        let sum: f64 = e.values.iter().sum();
        prop_assert!((sum - m.trace().re).abs() < 1e-12);
        prop_assert!(e.reconstruct_with(|x| x).max_abs_diff(&m) < 1e-10);
    }

    #[test]
    fn trace_norm_is_trace_for_psd(m in hermitian_strategy()) {
        let psd = &m * &m;
        prop_assert!((psd.trace_norm().unwrap() - psd.trace().re).abs() < 1e-12);
        prop_assert!(m.trace_norm().unwrap() >= m.trace().re.abs() - 1e-12);
    }

    #[test]
    fn closed_forms_agree_with_numerics(a in 0.001f64..0.999, n in 0.0f64..=1.0) {
        let p = StateParameter::new(a).unwrap();
        let n = Polarization::new(n).unwrap();
        let tau = assemble_tau(p, n);
        prop_assert!(tau.matrix.is_hermitian());
        prop_assert!(tau.matrix.eig_hermitian().unwrap()[3] >= -1e-12);
        let numeric = pt_eigenvalues_numeric(&tau.matrix).unwrap();
        for (x, y) in numeric.iter().zip(pt_eigenvalues_closed(p, n).sorted_desc()) {
            prop_assert!((x - y).abs() < 1e-10);
        }
        let nn = log_negativity_numeric(&tau.matrix).unwrap();
        prop_assert!((nn - log_negativity_closed(p, n)).abs() < 1e-10);
        let red = reduced_density(&tau);
        prop_assert!(red.max_abs_diff(&tau.matrix.partial_trace_b().unwrap()) < 1e-12);
        let cw = concurrence_wootters(&tau.matrix).unwrap();
        prop_assert!((cw - common::x_state_concurrence(&tau.matrix)).abs() < 1e-10);
    }

    #[test]
    fn partner_symmetry(a in 0.001f64..0.999, n in 0.0f64..=1.0) {
        let p = StateParameter::new(a).unwrap();
        let q = p.swapped();
        let n = Polarization::new(n).unwrap();
        let (x, y) = (pt_eigenvalues_closed(p, n), pt_eigenvalues_closed(q, n));
        for k in 0..4 {
            prop_assert!((x.lambda[k] - y.lambda[k]).abs() < 1e-12);
        }
        prop_assert!((log_negativity_closed(p, n) - log_negativity_closed(q, n)).abs() < 1e-12);
        prop_assert!((concurrence_reduced(p, n).value - concurrence_reduced(q, n).value).abs() < 1e-12);
        let (cp, cq) = (
            concurrence_wootters(&assemble_tau(p, n).matrix).unwrap(),
            concurrence_wootters(&assemble_tau(q, n).matrix).unwrap(),
        );
        prop_assert!((cp - cq).abs() < 1e-10);
    }
}

#[test]
fn bell_state_at_zero_polarization_is_separable_in_wootters_sense() {
    let tau = assemble_tau(
        StateParameter::new(FRAC_1_SQRT_2).unwrap(),
        Polarization::new(0.0).unwrap(),
    );
    assert!(concurrence_wootters(&tau.matrix).unwrap() < 1e-12);
    assert!(common::x_state_concurrence(&tau.matrix) < 1e-12);
}
