//! Abel–Plana summation.

use std::f64::consts::TAU;

use num_complex::Complex64 as Complex;

use super::cmath::finite;
use super::quad::{finite_integral, semiinf_integral, QuadratureSpec};
use crate::{Error, Result};

const I: Complex = Complex { re: 0.0, im: 1.0 };

/// `i ∫_0^∞ (f(a+is) − f(a−is))/(e^{2πs} − 1) ds`.
pub fn plana_boundary<F: Fn(Complex) -> Complex>(f: &F, a: f64, q: &QuadratureSpec) -> Result<Complex> {
    let g = |s: f64| (f(Complex::new(a, s)) - f(Complex::new(a, -s))) / (TAU * s).exp_m1();
    for probe in [16.0, 24.0] {
        let m = g(probe).norm();
        if !m.is_finite() || m > q.abs_tol.max(1e-300) * 1e6 && m > g(8.0).norm() {
            return Err(Error::NonDecay { at: probe, magnitude: m });
        }
    }
    let v = semiinf_integral(g, &q.with_decay(TAU))?;
    Ok(I * v)
}

/// `Σ_{k=0}^{n−1} f(k)` through the Abel–Plana formula
/// `∫_0^n f + ½f(0) − ½f(n) + i∫(f(is) − f(−is))/(e^{2πs}−1) − i∫(f(n+is) − f(n−is))/(e^{2πs}−1)`.
///
/// The caller is responsible for `f` being holomorphic on `0 ≤ Re ≤ n`
/// with growth `o(e^{2π|Im|})`.
pub fn abel_plana_sum<F: Fn(Complex) -> Complex>(f: F, n: u32, q: &QuadratureSpec) -> Result<Complex> {
    let nf = n as f64;
    let line = finite_integral(|s| f(Complex::new(s, 0.0)), 0.0, nf, q)?;
    let ends = (f(Complex::new(0.0, 0.0)) - f(Complex::new(nf, 0.0))) * 0.5;
    let left = plana_boundary(&f, 0.0, q)?;
    let right = plana_boundary(&f, nf, q)?;
    finite(line + ends + left - right, "abel_plana_sum")
}
