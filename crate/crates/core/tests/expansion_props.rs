mod common;

use common::{c, exp_level, l_sum, lgamma_diff, log_barnes};
use gammadet::expansion::*;
use gammadet::mellin::{EnsembleKind, EnsembleSpec, LParams};
use gammadet::{Complex, Error, QuadratureSpec};
use proptest::prelude::*;

fn q() -> QuadratureSpec {
    QuadratureSpec::default()
}

#[test]
fn identity_examples() {
    for (p, l, alpha, z) in [(20, 3.0, 1.0, c(0.7, 0.0)), (7, 0.5, 2.0, c(1.3, 0.4)), (5, 0.0, 1.0, c(0.0, 0.0))] {
        let params = LParams::new(p, l, alpha).unwrap();
        let r = l_reconstruct(params, z, &q()).unwrap();
        assert!(exp_level(r, l_sum(p, l, alpha, z)) < 1e-8, "p={p} l={l}");
    }
}

#[test]
fn remainder_within_envelope() {
    for p in [10u64, 100, 1000] {
        for z in [c(1.0, 0.0), c(0.5, 0.5), c(-0.3, 1.0)] {
            let t = expansion_terms(LParams::new(p, 0.0, 1.0).unwrap(), z, &q()).unwrap();
            assert!(t.r.norm() <= t.r_bound, "p={p} z={z}: {} > {}", t.r.norm(), t.r_bound);
        }
    }
}

#[test]
fn phi_closed_form_values() {
    let v = phi_alpha(1.0, c(1.0, 0.0), &q()).unwrap();
    assert!((v.re - 0.918_938_533_204_672_7).abs() < 1e-10 && v.im.abs() < 1e-14);
    assert!(phi_alpha(1.0, c(0.0, 0.0), &q()).unwrap().norm() < 1e-15);
    let z = c(0.5, 0.0);
    let half = z * (0.5 * 2f64.ln() + 0.5 * (2.0 * std::f64::consts::PI).ln()) - log_barnes(z * 2.0) * 0.5
        + lgamma_diff(0.5, z) * 0.5;
    assert!((phi_alpha(0.5, z, &q()).unwrap() - half).norm() < 1e-9);
}

/// `Φ^c` at `β = 2` from the Barnes product, built on the test oracle.
fn phi_c_oracle(cc: f64, z: Complex) -> Complex {
    let lg = |w: Complex| log_barnes(w - 1.0);
    lg(c(1.0 + cc, 0.0)) - lg(z + 1.0 + cc) + z * (0.5 * (2.0 * std::f64::consts::PI).ln() - (cc + 1.0)) + z
        + z * z * 0.5 * (1.0 + cc).ln()
}

#[test]
fn phi_c_two_representations() {
    for cc in [-0.5, 1.0, 2.0, 5.0] {
        for z in [c(1.0, 0.0), c(0.5, 0.7), c(-0.2, 0.0)] {
            let a = phi_c(2.0, cc, z, &q()).unwrap();
            assert!(exp_level(a, phi_c_oracle(cc, z)) < 1e-8, "c={cc} z={z}");
        }
    }
    for (beta, cc) in [(1.0, 2.0), (4.0, 0.5)] {
        assert!(phi_c(beta, cc, c(0.0, 0.0), &q()).unwrap().norm() < 1e-14);
    }
    let a = phi_c(1.0, 0.0, c(0.5, 0.0), &q()).unwrap();
    let b = phi_alpha(0.5, c(0.5, 0.0), &q()).unwrap();
    assert!((a - b).norm() < 1e-9);
}

#[test]
fn laguerre_examples() {
    let d = laguerre_modphi(2.0, 100, Regime::Full).unwrap();
    assert!((d.t_n - 100f64.ln()).abs() < 1e-12);
    assert_eq!(d.psi_limit.kind(), LimitKind::PhiAlpha);
    let d = laguerre_modphi(2.0, 50, Regime::FixedGap { c: 1.0 }).unwrap();
    assert!((d.t_n - 26f64.ln()).abs() < 1e-12);
    let d = laguerre_modphi(2.0, 10, Regime::FixedP { p: 1 }).unwrap();
    assert!((d.t_n - 10.0).abs() < 1e-12);
    assert_eq!(d.eta, LevyExponent::Stable1 { beta: 2.0, scale: 1.0 });
    for z in [c(0.5, 0.0), c(2.0, 1.0)] {
        let want = (Complex::new(1.0, 0.0) + z).powf(-0.5);
        assert!((d.psi_limit.eval(z, &q()).unwrap() - want).norm() < 1e-14);
    }
}

#[test]
fn jacobi_examples() {
    let n = 40u64;
    let d = jacobi_modphi(2.0, n, n, n, Regime::Full, None).unwrap();
    assert!((d.t_n - (n as f64 / 2.0).ln()).abs() < 1e-12);
    let pr = Proportional { n: 100, tau1: 1.0, tau2: 1.0 };
    let d = jacobi_modphi(2.0, 1, 100, 100, Regime::FixedP { p: 1 }, Some(pr)).unwrap();
    for z in [c(0.3, 0.0), c(0.0, 1.5)] {
        let want = ((z * 2.0 + 2.0) * 2.0 / (z * 2.0 + 4.0)).powf(-0.5);
        assert!((d.psi_limit.eval(z, &q()).unwrap() - want).norm() < 1e-13);
    }
    assert!(matches!(jacobi_modphi(2.0, 1, 100, 100, Regime::FixedP { p: 1 }, None), Err(Error::UnsupportedRegime(_))));
}

#[test]
fn ensemble_examples() {
    let e = EnsembleSpec::volume(EnsembleKind::ParallelotopeGaussian, 100, 100, 0.0).unwrap();
    let d = ensemble_modphi(&e, Regime::Full).unwrap();
    assert!((d.t_n - 0.5 * 100f64.ln()).abs() < 1e-12);
    let e = EnsembleSpec::bdg(1, 60).unwrap();
    let d = ensemble_modphi(&e, Regime::infer(&e).unwrap()).unwrap();
    assert!((d.t_n - (0.5 * 61.0 + 1.0f64).ln()).abs() < 1e-12);
    let e = EnsembleSpec::volume(EnsembleKind::ParallelotopeBetaPrime, 30, 30, 4.0).unwrap();
    assert!(matches!(ensemble_modphi(&e, Regime::Full), Err(Error::UnsupportedRegime(_))));
    assert!(matches!(laguerre_modphi(2.0, 100, Regime::GrowingGap { p: 50 }), Err(Error::UnsupportedRegime(_))));
}

#[test]
fn residues_approach_limits() {
    let cases: Vec<(&str, Box<dyn Fn(u64) -> ModPhiData>)> = vec![
        ("full b1", Box::new(|n| laguerre_modphi(1.0, n, Regime::Full).unwrap())),
        ("full b4", Box::new(|n| laguerre_modphi(4.0, n, Regime::Full).unwrap())),
        ("fixed gap", Box::new(|n| laguerre_modphi(2.0, n, Regime::FixedGap { c: 1.0 }).unwrap())),
        ("gue", Box::new(|n| ensemble_modphi(&EnsembleSpec::gue(n + 1).unwrap(), Regime::Full).unwrap())),
        ("ginibre", Box::new(|n| ensemble_modphi(&EnsembleSpec::ginibre(2.0, n).unwrap(), Regime::Full).unwrap())),
    ];
    for (name, f) in cases {
        for z in [c(0.5, 0.0), c(1.0, 0.5)] {
            let err: Vec<f64> = [50u64, 200, 800]
                .iter()
                .map(|&n| {
                    let d = f(n);
                    (d.psi_n(z, &q()).unwrap() - d.psi(z, &q()).unwrap()).norm()
                })
                .collect();
            assert!(err[2] < err[0] && err[2] < 0.02, "{name} z={z}: {err:?}");
        }
    }
}

#[test]
fn psi_is_one_at_origin_everywhere() {
    let datas = vec![
        laguerre_modphi(2.0, 30, Regime::Full).unwrap(),
        laguerre_modphi(1.0, 30, Regime::VanishingGap { gap: 0.3 }).unwrap(),
        laguerre_modphi(2.0, 300, Regime::GrowingGap { p: 280 }).unwrap(),
        laguerre_modphi(2.0, 30, Regime::FixedP { p: 3 }).unwrap(),
        ensemble_modphi(&EnsembleSpec::fixed_trace_gue(31).unwrap(), Regime::Full).unwrap(),
    ];
    for d in datas {
        assert!((d.psi_limit.eval(c(0.0, 0.0), &q()).unwrap() - 1.0).norm() < 1e-13, "{}", d.regime_label);
        assert!(d.eta.eval(c(0.0, 0.0)).norm() < 1e-14);
    }
}

#[test]
fn approximations_within_bounds() {
    let a = binet_shift_expansion(50.0, c(1.0, 0.0), f64::INFINITY).unwrap();
    assert!((a.main.re - 50f64.ln()).abs() < a.bound);
    let z = c(0.5, 0.5);
    let a = binet_shift_expansion(200.0, z, f64::INFINITY).unwrap();
    assert!((a.main - lgamma_diff(200.0, z)).norm() <= a.bound);
    let b = barnes_ratio_estimate(100, c(1.0, 0.0)).unwrap();
    let exact = statrs::function::gamma::ln_gamma(101.0);
    assert!((b.main.re - exact).abs() <= b.bound);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn identity_random(p in 1u64..60, l in 0.0f64..12.0, ai in 0usize..3, r in 0.0f64..2.0, th in -3.1f64..3.1) {
        let alpha = [0.5, 1.0, 2.0][ai];
        let z = Complex::from_polar(r, th);
        prop_assume!(z.re > -alpha / 2.0);
        let t = expansion_terms(LParams::new(p, l, alpha).unwrap(), z, &q()).unwrap();
        prop_assert!(exp_level(t.total(), l_sum(p, l, alpha, z)) < 1e-8);
    }

    #[test]
    fn phi_conjugate_symmetry(alpha in 0.3f64..3.0, re in -0.1f64..2.0, im in 0.1f64..3.0) {
        let z = c(re, im);
        let a = phi_alpha(alpha, z, &q()).unwrap();
        let b = phi_alpha(alpha, z.conj(), &q()).unwrap();
        prop_assert!((a - b.conj()).norm() < 1e-9 * a.norm().max(1.0));
    }
}
