mod common;

use common::normal_cdf;
use gammadet::mellin::{cumulant, EnsembleKind, EnsembleSpec};
use gammadet::sampling::*;
use gammadet::{Error, QuadratureSpec};
use statrs::distribution::{Beta, ChiSquared, ContinuousCDF};

const EULER: f64 = 0.577_215_664_901_532_9;

fn q() -> QuadratureSpec {
    QuadratureSpec::default()
}

fn samplable() -> Vec<EnsembleSpec> {
    use EnsembleKind::*;
    vec![
        EnsembleSpec::laguerre(1.0, 7, 4).unwrap(),
        EnsembleSpec::laguerre(2.0, 12, 12).unwrap(),
        EnsembleSpec::laguerre(2.5, 9, 6).unwrap(),
        EnsembleSpec::jacobi(2.0, 3, 4, 6).unwrap(),
        EnsembleSpec::jacobi(1.0, 5, 5, 8).unwrap(),
        EnsembleSpec::ginibre(1.0, 6).unwrap(),
        EnsembleSpec::ginibre(2.0, 6).unwrap(),
        EnsembleSpec::gue(5).unwrap(),
        EnsembleSpec::gue(6).unwrap(),
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
    ]
}

fn exp_law() -> EnsembleSpec {
    EnsembleSpec::laguerre(2.0, 1, 1).unwrap()
}

#[test]
fn exponential_case_mean_and_tail() {
    let b = sample_log_statistic(&exp_law(), 1_000_000, 20_240_611).unwrap();
    let se = (std::f64::consts::PI.powi(2) / 6.0 / 1e6).sqrt();
    assert!((b.mean() - (2f64.ln() - EULER)).abs() < 4.0 * se, "{}", b.mean());
    let t = empirical_tail(&b.values, 2f64.ln()).unwrap();
    let want = (-1f64).exp();
    assert!((t.p_hat - want).abs() <= t.half_width, "{t:?}");
    assert_eq!(t.n_used, 1_000_000);
}

#[test]
fn empirical_edge_cases() {
    let v = [0.1, 0.5, 0.9];
    assert_eq!(empirical_tail(&v, -1.0).unwrap().p_hat, 1.0);
    assert_eq!(empirical_tail(&v, 2.0).unwrap().p_hat, 0.0);
    assert!(matches!(empirical_tail(&[], 0.0), Err(Error::EmptyBatch)));
    assert!(matches!(ks_distance(&[], |_| 0.5), Err(Error::EmptyBatch)));
    assert_eq!(ks_distance(&[0.0], normal_cdf).unwrap(), 0.5);
    // exact quantiles of the logistic law
    let n = 100;
    let qs: Vec<f64> = (0..n).map(|i| { let u = (i as f64 + 0.5) / n as f64; (u / (1.0 - u)).ln() }).collect();
    let d = ks_distance(&qs, |x| 1.0 / (1.0 + (-x).exp())).unwrap();
    assert!((d - 0.005).abs() < 1e-12);
    assert_eq!(sample_log_statistic(&exp_law(), 0, 3).unwrap().values.len(), 0);
}

#[test]
fn moments_match_cumulants() {
    let n = 100_000;
    for (i, e) in samplable().into_iter().enumerate() {
        let b = sample_log_statistic(&e, n, 1000 + i as u64).unwrap();
        let k1 = cumulant(&e, 1).unwrap();
        let k2 = cumulant(&e, 2).unwrap();
        let m = b.mean();
        let v = b.variance();
        let m4 = b.values.iter().map(|x| (x - m).powi(4)).sum::<f64>() / n as f64;
        let se_mean = (v / n as f64).sqrt();
        let se_var = ((m4 - v * v) / n as f64).sqrt();
        assert!((m - k1).abs() < 5.0 * se_mean, "{e:?}: mean {m} vs {k1}");
        assert!((v - k2).abs() < 5.0 * se_var, "{e:?}: var {v} vs {k2}");
    }
}

#[test]
fn fixed_trace_gue_is_not_samplable() {
    let e = EnsembleSpec::fixed_trace_gue(5).unwrap();
    assert!(matches!(sample_log_statistic(&e, 10, 1), Err(Error::UnsupportedKind(_))));
    assert!(CfOracle::new(&e, &q()).is_ok());
}

#[test]
fn empirical_cdf_agrees_with_oracle() {
    let n = 50_000;
    let bound = 1.36 / (n as f64).sqrt();
    for e in [
        EnsembleSpec::laguerre(1.0, 6, 3).unwrap(),
        EnsembleSpec::jacobi(2.0, 2, 3, 4).unwrap(),
        EnsembleSpec::gue(4).unwrap(),
    ] {
        let b = sample_log_statistic(&e, n, 77).unwrap();
        let o = CfOracle::new(&e, &q()).unwrap();
        for k in 0..20 {
            let x = o.mean() + o.sd() * (-3.0 + 6.0 * k as f64 / 19.0);
            let d = (empirical_cdf(&b.values, x).unwrap() - o.cdf(x).unwrap()).abs();
            assert!(d <= bound, "{e:?} x={x}: {d}");
        }
    }
}

#[test]
fn oracle_matches_closed_form_laws() {
    let v = cf_invert_cdf(&exp_law(), 2f64.ln(), &q()).unwrap();
    assert!((v - (1.0 - (-1f64).exp())).abs() < 1e-7, "{v}");
    // p = 1 real Wishart: log of a chi-square with n degrees of freedom
    for n in [1u64, 4, 11] {
        let o = CfOracle::new(&EnsembleSpec::laguerre(1.0, n, 1).unwrap(), &q()).unwrap();
        let chi = ChiSquared::new(n as f64).unwrap();
        for y in [-2.0, -0.5, 0.0, 1.0, 2.5] {
            let x = o.mean() + y * o.sd();
            assert!((o.cdf(x).unwrap() - chi.cdf(x.exp())).abs() < 1e-8, "n={n} y={y}");
        }
    }
    // p = 1 real Jacobi: log of a Beta(n1/2, n2/2)
    let o = CfOracle::new(&EnsembleSpec::jacobi(1.0, 1, 3, 20).unwrap(), &q()).unwrap();
    let beta = Beta::new(1.5, 10.0).unwrap();
    for y in [-2.0, -1.0, 0.0, 0.7, 1.5] {
        let x = o.mean() + y * o.sd();
        assert!((o.cdf(x).unwrap() - beta.cdf(x.exp())).abs() < 1e-8, "y={y}");
    }
}

#[test]
fn slow_characteristic_decay_is_reported() {
    // |φ| falls only like |u|^(-5/2) here
    let e = EnsembleSpec::jacobi(1.0, 1, 3, 5).unwrap();
    assert!(matches!(CfOracle::new(&e, &q()), Err(Error::Quadrature { .. })));
}

#[test]
fn oracle_is_a_distribution_function() {
    for e in [
        EnsembleSpec::laguerre(2.0, 10, 5).unwrap(),
        EnsembleSpec::fixed_trace_gue(6).unwrap(),
        EnsembleSpec::volume(EnsembleKind::SimplexBeta, 6, 3, 2.0).unwrap(),
    ] {
        let o = CfOracle::new(&e, &q()).unwrap();
        let (m, s) = (o.mean(), o.sd());
        assert!(o.cdf(m - 20.0 * s).unwrap() < 1e-6);
        assert!((o.cdf(m + 20.0 * s).unwrap() - 1.0).abs() < 1e-6);
        let k = 2000;
        let h = 20.0 * s / k as f64;
        let cdfs: Vec<f64> = (0..=k).map(|i| o.cdf(m - 10.0 * s + h * i as f64).unwrap()).collect();
        for w in cdfs.windows(2) {
            assert!(w[1] >= w[0] - 1e-9, "{e:?}");
        }
        let dens: Vec<f64> = (1..k).map(|i| (cdfs[i + 1] - cdfs[i - 1]) / (2.0 * h)).collect();
        // Simpson over the interior points
        let mass: f64 = dens
            .iter()
            .enumerate()
            .map(|(i, d)| d * if i == 0 || i == dens.len() - 1 { 1.0 } else if i % 2 == 1 { 4.0 } else { 2.0 })
            .sum::<f64>()
            * h
            / 3.0;
        assert!((mass - 1.0).abs() < 1e-4, "{e:?}: {mass}");
        let sf = o.sf(m + s).unwrap();
        assert!((sf + o.cdf(m + s).unwrap() - 1.0).abs() < 1e-12);
    }
}

#[test]
fn batches_are_deterministic() {
    let e = EnsembleSpec::jacobi(2.0, 4, 5, 7).unwrap();
    let a = sample_log_statistic(&e, 5000, 42).unwrap();
    let b = sample_log_statistic(&e, 5000, 42).unwrap();
    assert!(a.values.iter().zip(&b.values).all(|(x, y)| x.to_bits() == y.to_bits()));
    assert_ne!(a.values, sample_log_statistic(&e, 5000, 43).unwrap().values);
}

#[test]
fn ks_against_normal_tracks_exact_distance() {
    let n = 2000;
    let e = EnsembleSpec::laguerre(2.0, n, n).unwrap();
    let count = 100_000;
    let b = sample_log_statistic(&e, count, 9).unwrap();
    let o = CfOracle::new(&e, &q()).unwrap();
    let (m, s) = (o.mean(), o.sd());
    let ys: Vec<f64> = b.values.iter().map(|x| (x - m) / s).collect();
    let mc = ks_distance(&ys, normal_cdf).unwrap();
    assert!(mc > 0.0 && mc < 0.05, "{mc}");
    let exact = (0..=1200)
        .map(|i| -6.0 + 0.01 * i as f64)
        .map(|y| (o.cdf_standardized(y).unwrap() - normal_cdf(y)).abs())
        .fold(0.0, f64::max);
    assert!((mc - exact).abs() < 3.0 / (count as f64).sqrt(), "mc {mc} exact {exact}");
}

#[test]
fn csv_and_manifest_round_trip() {
    let e = EnsembleSpec::chiral(2.0, 6, 4).unwrap();
    let b = sample_log_statistic(&e, 200, 5).unwrap();
    let mut buf = Vec::new();
    b.write_csv(&mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let mut lines = text.lines();
    let head = lines.next().unwrap();
    assert!(head.starts_with('#') && head.contains("seed=5") && head.contains("count=200"));
    assert_eq!(lines.next(), Some("log_statistic"));
    let back: Vec<f64> = lines.map(|l| l.parse().unwrap()).collect();
    assert_eq!(back, b.values);
    let man = b.manifest(std::path::Path::new("draws.csv"));
    let json = serde_json::to_string(&man).unwrap();
    let again: SampleManifest = serde_json::from_str(&json).unwrap();
    assert_eq!(again, man);
    assert_eq!(again.schema, 1);
}
