//! Generic Gamma-type moment representation.

use num_complex::Complex64 as Complex;
use serde::{Deserialize, Serialize};

use crate::specfun::cmath::CompensatedSum;
use crate::specfun::log_gamma;
use crate::Result;

/// `E[X^s] = C · D^s · Π Γ(a_j s + b_j) / Π Γ(a'_k s + b'_k)`.
///
/// Normalizing constants are stored as factors with slope `0`, so `log_c`
/// is zero for every form produced by this crate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GammaMomentForm {
    pub log_c: f64,
    pub log_d: f64,
    pub numerator: Vec<(f64, f64)>,
    pub denominator: Vec<(f64, f64)>,
}

impl GammaMomentForm {
    /// `log E[X^s]` by plain evaluation of every factor.
    pub fn eval(&self, s: Complex) -> Result<Complex> {
        let mut acc = CompensatedSum::new();
        acc.add(Complex::new(self.log_c, 0.0) + s * self.log_d);
        for &(a, b) in &self.numerator {
            acc.add(log_gamma(s * a + b)?);
        }
        for &(a, b) in &self.denominator {
            acc.add(-log_gamma(s * a + b)?);
        }
        Ok(acc.value())
    }
}
