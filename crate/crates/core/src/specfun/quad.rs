//! Adaptive Gauss–Legendre quadrature on finite and semi-infinite ranges.
//!
//! Semi-infinite integrals are split into dyadic panels `[2^k, 2^(k+1)]`
//! walking outward from `s0` in both directions. The downward walk samples
//! geometrically towards 0, which is the discrete form of the substitution
//! `s = -log u`, so integrable singularities at the origin are resolved
//! without special casing. Each panel is refined by bisection until a
//! 16-point rule and its two halves agree.

use std::sync::OnceLock;

use num_complex::Complex64 as Complex;
use serde::{Deserialize, Serialize};

use super::cmath::CompensatedSum;
use crate::{Error, Result};

/// Tolerances and limits for every integral in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Maximum bisection depth inside one panel.
    pub max_refinements: u32,
    /// Exponential decay rate of the integrand tail, used to place panels.
    pub decay_hint: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self { abs_tol: 1e-12, rel_tol: 1e-10, max_refinements: 24, decay_hint: 1.0 }
    }
}

impl QuadratureSpec {
    pub fn with_abs_tol(mut self, abs_tol: f64) -> Self {
        self.abs_tol = abs_tol;
        self
    }

    pub fn with_decay(mut self, decay_hint: f64) -> Self {
        self.decay_hint = decay_hint;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let ok = self.abs_tol > 0.0
            && self.rel_tol > 0.0
            && self.max_refinements >= 1
            && self.decay_hint > 0.0
            && self.decay_hint.is_finite();
        if ok {
            Ok(())
        } else {
            Err(Error::Domain(format!("invalid quadrature spec {self:?}")))
        }
    }
}

const GL_ORDER: usize = 16;

/// Nodes and weights of the `n`-point Gauss–Legendre rule on [-1, 1].
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre(n, x);
        if d != 0.0 {
            dp = d;
        }
        out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    out
}

fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

fn rule() -> &'static [(f64, f64)] {
    static RULE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(GL_ORDER))
}

/// Fixed 16-point rule on [a, b].
pub fn gl16<F: Fn(f64) -> Complex>(f: &F, a: f64, b: f64) -> Complex {
    let h = 0.5 * (b - a);
    let c = 0.5 * (b + a);
    let mut acc = Complex::new(0.0, 0.0);
    for &(x, w) in rule() {
        acc += f(c + h * x) * w;
    }
    acc * h
}

struct Diag {
    worst: f64,
}

fn adapt<F: Fn(f64) -> Complex>(
    f: &F,
    a: f64,
    b: f64,
    whole: Complex,
    tol: f64,
    depth: u32,
    max_depth: u32,
    diag: &mut Diag,
) -> Complex {
    let m = 0.5 * (a + b);
    let left = gl16(f, a, m);
    let right = gl16(f, m, b);
    let two = left + right;
    let delta = (two - whole).norm();
    if delta <= tol || !delta.is_finite() {
        return two;
    }
    if depth >= max_depth || m <= a || m >= b {
        diag.worst = diag.worst.max(delta);
        return two;
    }
    adapt(f, a, m, left, 0.5 * tol, depth + 1, max_depth, diag)
        + adapt(f, m, b, right, 0.5 * tol, depth + 1, max_depth, diag)
}

fn panel<F: Fn(f64) -> Complex>(f: &F, a: f64, b: f64, q: &QuadratureSpec, diag: &mut Diag) -> Complex {
    let whole = gl16(f, a, b);
    let tol = (q.abs_tol / 16.0).max(q.rel_tol * whole.norm() / 4.0);
    adapt(f, a, b, whole, tol, 0, q.max_refinements, diag)
}

fn finish(total: Complex, diag: &Diag, q: &QuadratureSpec) -> Result<Complex> {
    if !(total.re.is_finite() && total.im.is_finite()) {
        return Err(Error::NonFinite("quadrature"));
    }
    if diag.worst > q.abs_tol + q.rel_tol * total.norm() {
        return Err(Error::Quadrature { delta: diag.worst, partial: total.norm() });
    }
    Ok(total)
}

/// `∫_a^b f(s) ds` by adaptive Gauss–Legendre.
pub fn finite_integral<F: Fn(f64) -> Complex>(f: F, a: f64, b: f64, q: &QuadratureSpec) -> Result<Complex> {
    q.validate()?;
    if a == b {
        return Ok(Complex::new(0.0, 0.0));
    }
    let pieces = 8;
    let h = (b - a) / pieces as f64;
    let mut diag = Diag { worst: 0.0 };
    let mut acc = CompensatedSum::new();
    for i in 0..pieces {
        let lo = a + h * i as f64;
        let hi = if i + 1 == pieces { b } else { lo + h };
        acc.add(panel(&f, lo, hi, q, &mut diag));
    }
    finish(acc.value(), &diag, q)
}

/// `∫_0^∞ f(s) ds` for integrands with at most an integrable singularity at
/// 0 and exponential decay at infinity.
pub fn semiinf_integral<F: Fn(f64) -> Complex>(f: F, q: &QuadratureSpec) -> Result<Complex> {
    q.validate()?;
    let scale = (1.0 / q.decay_hint).clamp(1.0 / 64.0, 64.0);
    let s0 = 2f64.powi(scale.log2().round() as i32);
    let reach = 40.0 / q.decay_hint;
    let small = q.abs_tol / 10.0;
    let mut diag = Diag { worst: 0.0 };
    let mut acc = CompensatedSum::new();

    let mut lo = s0;
    let mut quiet = 0;
    let mut steps = 0;
    loop {
        let hi = 2.0 * lo;
        let v = panel(&f, lo, hi, q, &mut diag);
        acc.add(v);
        if v.norm() < small && hi >= reach.min(8.0 * scale) {
            quiet += 1;
            if quiet >= 2 {
                break;
            }
        } else {
            quiet = 0;
        }
        lo = hi;
        steps += 1;
        if steps > 200 || !hi.is_finite() {
            return Err(Error::NonDecay { at: hi, magnitude: v.norm() });
        }
    }

    let mut hi = s0;
    quiet = 0;
    steps = 0;
    loop {
        let lo = 0.5 * hi;
        let v = panel(&f, lo, hi, q, &mut diag);
        acc.add(v);
        if v.norm() < small {
            quiet += 1;
            if quiet >= 2 {
                break;
            }
        } else {
            quiet = 0;
        }
        hi = lo;
        steps += 1;
        if steps > 400 || hi < 1e-300 {
            break;
        }
    }
    finish(acc.value(), &diag, q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_integrates_polynomials() {
        let v = gl16(&|s: f64| Complex::new(s.powi(7) - 3.0 * s * s, 0.0), 0.0, 2.0);
        assert!((v.re - (32.0 - 8.0)).abs() < 1e-12);
    }

    #[test]
    fn weights_sum_to_two() {
        let w: f64 = gauss_legendre(16).iter().map(|p| p.1).sum();
        assert!((w - 2.0).abs() < 1e-14);
    }

    #[test]
    fn exponential_tail() {
        let q = QuadratureSpec::default();
        let v = semiinf_integral(|s| Complex::new((-s).exp(), 0.0), &q).unwrap();
        assert!((v.re - 1.0).abs() < 1e-12);
        let v = semiinf_integral(|s| Complex::new(s * (-s).exp(), 0.0), &q).unwrap();
        assert!((v.re - 1.0).abs() < 1e-12);
    }

    #[test]
    fn log_singularity_at_origin() {
        let q = QuadratureSpec::default();
        // ∫ log(s) e^{-s} ds = -γ
        let v = semiinf_integral(|s| Complex::new(s.ln() * (-s).exp(), 0.0), &q).unwrap();
        assert!((v.re + 0.577_215_664_901_532_9).abs() < 1e-11);
    }

    #[test]
    fn slow_decay_hint() {
        let q = QuadratureSpec::default().with_decay(0.05);
        let v = semiinf_integral(|s| Complex::new((-0.05 * s).exp(), 0.0), &q).unwrap();
        assert!((v.re - 20.0).abs() < 1e-9);
    }
}
