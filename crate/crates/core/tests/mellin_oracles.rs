mod common;

use common::{c, exp_level, l_sum, lgamma};
use gammadet::mellin::*;
use gammadet::{Complex, Error, QuadratureSpec};
use proptest::prelude::*;
use statrs::function::gamma::digamma;

fn small_ensembles() -> Vec<EnsembleSpec> {
    use EnsembleKind::*;
    vec![
        EnsembleSpec::laguerre(1.0, 7, 4).unwrap(),
        EnsembleSpec::laguerre(2.5, 9, 9).unwrap(),
        EnsembleSpec::jacobi(2.0, 3, 4, 6).unwrap(),
        EnsembleSpec::ginibre(1.0, 5).unwrap(),
        EnsembleSpec::gue(5).unwrap(),
        EnsembleSpec::gue(6).unwrap(),
        EnsembleSpec::fixed_trace_gue(5).unwrap(),
        EnsembleSpec::chiral(4.0, 8, 5).unwrap(),
        EnsembleSpec::bdg(1, 6).unwrap(),
        EnsembleSpec::bdg(2, 6).unwrap(),
        EnsembleSpec::bdg(3, 7).unwrap(),
        EnsembleSpec::bdg(4, 5).unwrap(),
        EnsembleSpec::volume(ParallelotopeGaussian, 8, 3, 0.0).unwrap(),
        EnsembleSpec::volume(ParallelotopeBeta, 8, 3, 2.0).unwrap(),
        EnsembleSpec::volume(ParallelotopeBetaPrime, 8, 3, 7.0).unwrap(),
        EnsembleSpec::volume(ParallelotopeSpherical, 8, 3, 0.0).unwrap(),
        EnsembleSpec::volume(SimplexGaussian, 8, 3, 0.0).unwrap(),
        EnsembleSpec::volume(SimplexBeta, 8, 3, 2.0).unwrap(),
        EnsembleSpec::volume(SimplexBetaPrime, 8, 3, 9.0).unwrap(),
        EnsembleSpec::volume(SimplexSpherical, 8, 3, 0.0).unwrap(),
    ]
}

/// `log E[X^z]` from the Gamma-type form, evaluated with the test oracle.
fn form_oracle(f: &GammaMomentForm, z: Complex) -> Complex {
    let mut acc = z * f.log_d + f.log_c;
    for &(a, b) in &f.numerator {
        acc += lgamma(z * a + b);
    }
    for &(a, b) in &f.denominator {
        acc -= lgamma(z * a + b);
    }
    acc
}

#[test]
fn log_two_example() {
    let e = EnsembleSpec::laguerre(2.0, 1, 1).unwrap();
    assert!((log_mgf(&e, c(1.0, 0.0)).unwrap() - c(2f64.ln(), 0.0)).norm() < 1e-14);
    assert!(log_mgf(&e, c(0.0, 0.0)).unwrap().norm() < 1e-15);
}

#[test]
fn gamma_form_agrees_with_structured_transform() {
    for e in small_ensembles() {
        let form = lower_to_gamma_form(&e).unwrap();
        let model = e.model().unwrap();
        let (lo, hi) = model.strip();
        for z in [c(0.3, 0.0), c(-0.2, 1.5), c(1.0, -2.0)] {
            if z.re <= lo || z.re >= hi {
                continue;
            }
            let a = log_mgf(&e, z).unwrap();
            assert!(exp_level(a, form_oracle(&form, z)) < 1e-10, "{e:?} z={z}");
        }
    }
}

#[test]
fn classical_one_dimensional_laws() {
    // p = 1 real Wishart: chi-square with n degrees of freedom.
    for n in [1u64, 3, 10] {
        let e = EnsembleSpec::laguerre(1.0, n, 1).unwrap();
        let want = 2f64.ln() + digamma(n as f64 / 2.0);
        assert!((cumulant(&e, 1).unwrap() - want).abs() < 1e-12);
    }
    // p = 1 real Jacobi: Beta(n1/2, n2/2).
    let e = EnsembleSpec::jacobi(1.0, 1, 3, 5).unwrap();
    assert!((cumulant(&e, 1).unwrap() - (digamma(1.5) - digamma(4.0))).abs() < 1e-12);
    // 1 × 1 GUE: |N(0,1)| with E X² = 1.
    let e = EnsembleSpec::gue(1).unwrap();
    assert!(log_mgf(&e, c(2.0, 0.0)).unwrap().norm() < 1e-13);
}

#[test]
fn cumulants_match_finite_differences() {
    let q = QuadratureSpec::default();
    for e in small_ensembles() {
        let f = |x: f64| log_mgf_with(&e, c(x, 0.0), &q).unwrap().re;
        let h = 1e-4;
        let d1 = (f(h) - f(-h)) / (2.0 * h);
        let d2 = (f(h) - 2.0 * f(0.0) + f(-h)) / (h * h);
        assert!((cumulant(&e, 1).unwrap() - d1).abs() < 1e-7 * d1.abs().max(1.0), "{e:?}");
        assert!((cumulant(&e, 2).unwrap() - d2).abs() < 1e-4 * d2.abs().max(1.0), "{e:?}");
    }
}

#[test]
fn boundary_is_reported() {
    let e = EnsembleSpec::laguerre(2.0, 4, 4).unwrap();
    assert!(matches!(log_mgf(&e, c(-1.0, 0.0)), Err(Error::Domain(_))));
    assert!(log_mgf(&e, c(-0.999, 0.0)).is_ok());
    assert!(matches!(cumulant(&e, 3), Err(Error::Domain(_))));
}

#[test]
fn invalid_parameters_are_rejected() {
    assert!(EnsembleSpec::laguerre(2.0, 3, 5).is_err());
    assert!(EnsembleSpec::laguerre(0.0, 3, 3).is_err());
    assert!(EnsembleSpec::jacobi(2.0, 5, 3, 9).is_err());
    assert!(EnsembleSpec::bdg(2, 5).is_err());
    assert!(EnsembleSpec::chiral(3.0, 5, 5).is_err());
    assert!("no-such-kind".parse::<EnsembleKind>().is_err());
}

#[test]
fn large_p_route_matches_direct_sum() {
    let q = QuadratureSpec::default();
    for alpha in [0.5, 1.0, 2.0] {
        let p = LParams::new(6000, 2.5, alpha).unwrap();
        for z in [c(1.0, 0.0), c(0.4, 2.0)] {
            let fast = l_eval(p, z, &q).unwrap();
            assert!(exp_level(fast, l_sum(6000, 2.5, alpha, z)) < 1e-8, "alpha={alpha} z={z}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn l_exact_matches_oracle(p in 1u64..80, l in 0.0f64..20.0, ai in 0usize..4, re in -0.2f64..3.0, im in -3.0f64..3.0) {
        let alpha = [0.5, 1.0, 2.0, 1.7][ai];
        let z = c(re, im);
        let a = l_exact(LParams::new(p, l, alpha).unwrap(), z).unwrap();
        prop_assert!(exp_level(a, l_sum(p, l, alpha, z)) < 1e-9);
    }

    #[test]
    fn laguerre_conjugate_symmetry(n in 1u64..40, im in 0.1f64..5.0) {
        let e = EnsembleSpec::laguerre(1.0, n + 2, n).unwrap();
        let a = log_mgf(&e, c(0.3, im)).unwrap();
        let b = log_mgf(&e, c(0.3, -im)).unwrap();
        prop_assert!((a - b.conj()).norm() < 1e-10 * a.norm().max(1.0));
    }
}
