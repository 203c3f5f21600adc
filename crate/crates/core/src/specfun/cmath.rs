//! Complex elementary helpers that the standard library does not provide.

use num_complex::Complex64 as Complex;

/// `log(1 + u)` without cancellation for small `|u|` (principal branch).
pub fn ln_1p(u: Complex) -> Complex {
    if u.norm() < 0.5 {
        // |1+u|^2 - 1 = 2 Re u + |u|^2, formed without subtracting 1.
        let m = u.re * (2.0 + u.re) + u.im * u.im;
        Complex::new(0.5 * m.ln_1p(), u.im.atan2(1.0 + u.re))
    } else {
        (Complex::new(1.0, 0.0) + u).ln()
    }
}

/// `exp(u) - 1` without cancellation for small `|u|`.
pub fn exp_m1(u: Complex) -> Complex {
    let (s, c) = u.im.sin_cos();
    let half = (0.5 * u.im).sin();
    let em1 = u.re.exp_m1();
    Complex::new(em1 * c - 2.0 * half * half, u.re.exp() * s)
}

/// Distance between two log-level values once read at exp level, i.e. with
/// the imaginary difference reduced modulo 2π.
pub fn exp_level_diff(a: Complex, b: Complex) -> f64 {
    let d = a - b;
    let tau = std::f64::consts::TAU;
    let im = d.im - tau * (d.im / tau).round();
    d.re.hypot(im)
}

/// Neumaier compensated accumulator for complex sums.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: Complex,
    comp: Complex,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: Complex) {
        self.sum.re = neumaier_step(self.sum.re, x.re, &mut self.comp.re);
        self.sum.im = neumaier_step(self.sum.im, x.im, &mut self.comp.im);
    }

    pub fn value(&self) -> Complex {
        self.sum + self.comp
    }
}

fn neumaier_step(sum: f64, x: f64, comp: &mut f64) -> f64 {
    let t = sum + x;
    if sum.abs() >= x.abs() {
        *comp += (sum - t) + x;
    } else {
        *comp += (x - t) + sum;
    }
    t
}

/// Compensated sum of real values.
pub fn sum_real<I: IntoIterator<Item = f64>>(it: I) -> f64 {
    let mut s = 0.0;
    let mut c = 0.0;
    for x in it {
        s = neumaier_step(s, x, &mut c);
    }
    s + c
}

/// Turns a non-finite complex value into an error.
pub(crate) fn finite(z: Complex, what: &'static str) -> crate::Result<Complex> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(crate::Error::NonFinite(what))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ln_1p_small_argument() {
        let u = Complex::new(1e-12, -2e-13);
        let v = ln_1p(u);
        assert!((v - u).norm() < 1e-24);
    }

    #[test]
    fn exp_m1_matches_direct_for_large() {
        let u = Complex::new(1.3, -0.7);
        assert!((exp_m1(u) - (u.exp() - 1.0)).norm() < 1e-14);
    }

    #[test]
    fn exp_level_ignores_two_pi() {
        let a = Complex::new(1.0, 0.25);
        let b = Complex::new(1.0, 0.25 + 4.0 * std::f64::consts::PI);
        assert!(exp_level_diff(a, b) < 1e-14);
    }

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let mut s = CompensatedSum::new();
        s.add(Complex::new(1e16, 0.0));
        for _ in 0..10 {
            s.add(Complex::new(1.0, 0.0));
        }
        s.add(Complex::new(-1e16, 0.0));
        assert_eq!(s.value().re, 10.0);
    }
}
