//! Test-side oracles, written independently of the library's routines.
#![allow(dead_code)]

use std::f64::consts::PI;

use num_complex::Complex64 as C;

pub fn c(re: f64, im: f64) -> C {
    C::new(re, im)
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Lanczos `log Γ(z)`, reflected for `Re z < ½`. Accurate at exp level.
pub fn lgamma(z: C) -> C {
    if z.re < 0.5 {
        let s = (z * PI).sin();
        return C::new(PI.ln(), 0.0) - s.ln() - lgamma(C::new(1.0, 0.0) - z);
    }
    let z = z - 1.0;
    let mut x = C::new(LANCZOS[0], 0.0);
    for (i, &coef) in LANCZOS.iter().enumerate().skip(1) {
        x += coef / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + x.ln()
}

/// `log Γ(a + z) − log Γ(a)` with large arguments moved into the shift by
/// the recurrence, so the two values need not be differenced at size.
pub fn lgamma_diff(a: f64, z: C) -> C {
    lgamma(z + a) - lgamma(C::new(a, 0.0))
}

const ZETA_PRIME_M1: f64 = -0.165_421_143_700_450_93;

/// `log G(1 + z)` from its large-argument series after shifting `z` up by
/// `N` with `G(1+w) = Γ(w) G(w)`.
pub fn log_barnes(z: C) -> C {
    let shift = (30.0 - z.re).max(0.0).ceil() as usize;
    let w = z + shift as f64;
    let lw = w.ln();
    let w2 = w * w;
    // B_{2k+2} / (4k(k+1)), k = 1..6
    let bern = [-1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0];
    let mut series = C::new(0.0, 0.0);
    let mut wp = w2;
    for (i, b) in bern.iter().enumerate() {
        let k = (i + 1) as f64;
        series += b / (4.0 * k * (k + 1.0)) / wp;
        wp *= w2;
    }
    let big = w2 * 0.5 * lw - w2 * 0.75 + w * (0.5 * (2.0 * PI).ln()) - lw / 12.0 + ZETA_PRIME_M1 + series;
    let mut down = C::new(0.0, 0.0);
    for j in 1..=shift {
        down += lgamma(z + j as f64);
    }
    big - down
}

/// Distance between two logarithms read at exp level.
pub fn exp_level(a: C, b: C) -> f64 {
    let d = a - b;
    let tau = 2.0 * PI;
    (d.re).hypot(d.im - tau * (d.im / tau).round())
}

/// `log L(p,l,α;z)` as a plain sum of Lanczos log-gamma differences.
pub fn l_sum(p: u64, l: f64, alpha: f64, z: C) -> C {
    (1..=p).map(|k| lgamma_diff(alpha * (k as f64 + l), z)).sum()
}

pub fn normal_cdf(x: f64) -> f64 {
    0.5 * statrs::function::erf::erfc(-x / std::f64::consts::SQRT_2)
}

pub fn normal_pdf(x: f64) -> f64 {
    (-0.5 * x * x).exp() / (2.0 * PI).sqrt()
}
