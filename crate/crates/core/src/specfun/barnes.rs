//! Barnes G-function.
//!
//! For `Re z > ½`,
//! `log G(z+1) = z²/2 log z − ¾z² + z/2 log 2π − ∫_0^∞ log(1 + z²/s²) s/(e^{2πs} − 1) ds`.
//! Smaller real parts are first shifted up with `G(z+1) = Γ(z) G(z)`.
//! The logarithm in the integrand is split as `log(1 + iz/s) + log(1 − iz/s)`;
//! each factor stays in one open half plane when `Re z > 0`, so the
//! principal branch is continuous along the path.

use std::f64::consts::TAU;

use num_complex::Complex64 as Complex;

use super::cmath::{finite, ln_1p};
use super::gamma::log_gamma;
use super::quad::{semiinf_integral, QuadratureSpec};
use crate::{Error, Result};

const LN_TWO_PI: f64 = 1.837_877_066_409_345_5;
const I: Complex = Complex { re: 0.0, im: 1.0 };

fn kernel(s: f64) -> f64 {
    s / (TAU * s).exp_m1()
}

fn direct(z: Complex, q: &QuadratureSpec) -> Result<Complex> {
    let q = q.with_decay(TAU);
    let integral = semiinf_integral(
        |s| (ln_1p(I * z / s) + ln_1p(-I * z / s)) * kernel(s),
        &q,
    )?;
    let z2 = z * z;
    let mut v = z2 * 0.5 * z.ln() - z2 * 0.75 + z * (0.5 * LN_TWO_PI) - integral;
    if z.im == 0.0 {
        v.im = 0.0;
    }
    Ok(v)
}

/// `log G(z+1)`; the result is real for real `z > -1`.
pub fn log_barnes_g(z: Complex, q: &QuadratureSpec) -> Result<Complex> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::NonFinite("log_barnes_g argument"));
    }
    if z.im == 0.0 && z.re <= -1.0 && z.re == z.re.floor() {
        return Err(Error::Pole { re: z.re, im: z.im });
    }
    let mut w = z;
    let mut acc = Complex::new(0.0, 0.0);
    while w.re <= 0.5 {
        acc -= log_gamma(w + 1.0)?;
        w += 1.0;
    }
    finite(direct(w, q)? + acc, "log_barnes_g")
}

/// `log G(w+z+1) − log G(w+1)`, evaluated so that the large common part of
/// the two values cancels analytically rather than numerically.
pub fn log_barnes_g_shift(w: Complex, z: Complex, q: &QuadratureSpec) -> Result<Complex> {
    if w.re <= 0.5 || (w + z).re <= 0.5 {
        return Ok(log_barnes_g(w + z, q)? - log_barnes_g(w, q)?);
    }
    let lam = ln_1p(z / w);
    let wz = w * z * 2.0 + z * z;
    let elementary = wz * 0.5 * w.ln() + (w + z) * (w + z) * 0.5 * lam - wz * 0.75 + z * (0.5 * LN_TWO_PI);
    let q = q.with_decay(TAU);
    let integral = semiinf_integral(
        |s| {
            let a = ln_1p(I * z / (I * w + s));
            let b = ln_1p(-I * z / (-I * w + s));
            (a + b) * kernel(s)
        },
        &q,
    )?;
    finite(elementary - integral, "log_barnes_g_shift")
}

/// Derivative of `log G(z)`: `(z−1)Ψ(z) − z + ½ log 2π + ½`, given `Ψ(z)`.
pub fn log_barnes_g_derivative(z: Complex, digamma_z: Complex) -> Complex {
    (z - 1.0) * digamma_z - z + 0.5 * LN_TWO_PI + 0.5
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_integer_values() {
        let q = QuadratureSpec::default();
        let g2 = log_barnes_g(Complex::new(1.0, 0.0), &q).unwrap();
        assert!(g2.norm() < 1e-12);
        let g4 = log_barnes_g(Complex::new(3.0, 0.0), &q).unwrap();
        assert!((g4.re - 2f64.ln()).abs() < 1e-12);
        let g5 = log_barnes_g(Complex::new(4.0, 0.0), &q).unwrap();
        assert!((g5.re - 12f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn zero_of_g_is_a_pole_of_the_log() {
        let q = QuadratureSpec::default();
        assert!(log_barnes_g(Complex::new(-1.0, 0.0), &q).is_err());
    }

    #[test]
    fn shift_matches_difference() {
        let q = QuadratureSpec::default();
        let w = Complex::new(40.0, 0.0);
        let z = Complex::new(0.3, 1.1);
        let a = log_barnes_g_shift(w, z, &q).unwrap();
        let b = log_barnes_g(w + z, &q).unwrap() - log_barnes_g(w, &q).unwrap();
        assert!((a - b).norm() < 1e-9);
    }
}
