//! The building block `L(p,l,α;z) = Σ_{k=1}^p [log Γ(α(k+l)+z) − log Γ(α(k+l))]`.

use num_complex::Complex64 as Complex;
use serde::{Deserialize, Serialize};

use crate::specfun::cmath::{sum_real, CompensatedSum};
use crate::specfun::{digamma_real, log_barnes_g_shift, log_gamma_diff, trigamma_real, QuadratureSpec};
use crate::{Error, Result};

/// Sums longer than this are evaluated through Barnes G when `α ∈ {½, 1, 2}`.
pub const DIRECT_SUM_LIMIT: u64 = 4096;

/// Index triple `(p, l, α)` of `L(p,l,α;z)`. The gap `l` is real.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LParams {
    pub p: u64,
    pub l: f64,
    pub alpha: f64,
}

impl LParams {
    pub fn new(p: u64, l: f64, alpha: f64) -> Result<Self> {
        let s = Self { p, l, alpha };
        s.validate()?;
        Ok(s)
    }

    /// Requires `p ≥ 1`, `α > 0` and `α(1+l) > 0`, i.e. every Gamma
    /// argument `α(k+l)` is positive. Gaps in `(−1, 0)` occur in the
    /// Bogoliubov–de Gennes classes.
    pub fn validate(&self) -> Result<()> {
        if self.p == 0 {
            return Err(Error::Domain("L needs p >= 1".into()));
        }
        if !(self.alpha > 0.0 && self.alpha.is_finite()) {
            return Err(Error::Domain(format!("L needs alpha > 0, got {}", self.alpha)));
        }
        if !(self.l.is_finite() && self.alpha * (1.0 + self.l) > 0.0) {
            return Err(Error::Domain(format!("L needs alpha(1+l) > 0, got l = {}", self.l)));
        }
        Ok(())
    }

    /// Lower boundary of the admissible half plane: `Re z > −α(1+l)`.
    pub fn re_lower_bound(&self) -> f64 {
        -self.alpha * (1.0 + self.l)
    }

    fn arg(&self, k: u64) -> f64 {
        self.alpha * (k as f64 + self.l)
    }

    fn check_z(&self, z: Complex) -> Result<()> {
        self.validate()?;
        if !(z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::NonFinite("L argument"));
        }
        if z.re <= self.re_lower_bound() {
            return Err(Error::Domain(format!(
                "L(p={}, l={}, alpha={}) needs Re z > {}, got {}",
                self.p,
                self.l,
                self.alpha,
                self.re_lower_bound(),
                z.re
            )));
        }
        Ok(())
    }
}

/// `L(p,l,α;z)` by direct summation in ascending `k`, compensated, with each
/// summand formed as a single fused log-gamma difference.
pub fn l_exact(params: LParams, z: Complex) -> Result<Complex> {
    params.check_z(z)?;
    let mut acc = CompensatedSum::new();
    for k in 1..=params.p {
        acc.add(log_gamma_diff(params.arg(k), z)?);
    }
    Ok(acc.value())
}

/// `L(p,l,α;z)` equal to [`l_exact`] at exp level, but O(1) in `p` for
/// `α ∈ {½, 1, 2}` once `p` exceeds [`DIRECT_SUM_LIMIT`].
///
/// Uses `Σ_{k=1}^p log Γ(k+a+z) = log G(p+a+1+z) − log G(a+1+z)`, reaching
/// `α = ½` by splitting `k` by parity and `α = 2` by the duplication formula.
pub fn l_eval(params: LParams, z: Complex, q: &QuadratureSpec) -> Result<Complex> {
    params.check_z(z)?;
    if params.p <= DIRECT_SUM_LIMIT {
        return l_exact(params, z);
    }
    let LParams { p, l, alpha } = params;
    if alpha == 1.0 {
        unit_sum(p, l, z, q)
    } else if alpha == 0.5 {
        let even = unit_sum(p / 2, 0.5 * l, z, q)?;
        let odd = unit_sum(p.div_ceil(2), 0.5 * l - 0.5, z, q)?;
        Ok(even + odd)
    } else if alpha == 2.0 {
        let a = unit_sum(p, l, z * 0.5, q)?;
        let b = unit_sum(p, l + 0.5, z * 0.5, q)?;
        Ok(z * (p as f64 * std::f64::consts::LN_2) + a + b)
    } else {
        l_exact(params, z)
    }
}

/// `Σ_{k=1}^p [log Γ(k+a+z) − log Γ(k+a)]` through Barnes G.
fn unit_sum(p: u64, a: f64, z: Complex, q: &QuadratureSpec) -> Result<Complex> {
    if p == 0 {
        return Ok(Complex::new(0.0, 0.0));
    }
    let top = log_barnes_g_shift(Complex::new(p as f64 + a, 0.0), z, q)?;
    let bottom = log_barnes_g_shift(Complex::new(a, 0.0), z, q)?;
    Ok(top - bottom)
}

/// `∂_z L` at 0: `Σ Ψ(α(k+l))`.
pub fn l_digamma_sum(params: LParams) -> Result<f64> {
    params.validate()?;
    let mut terms = Vec::with_capacity(params.p as usize);
    for k in 1..=params.p {
        terms.push(digamma_real(params.arg(k))?);
    }
    Ok(sum_real(terms))
}

/// `∂²_z L` at 0: `Σ Ψ'(α(k+l))`.
pub fn l_trigamma_sum(params: LParams) -> Result<f64> {
    params.validate()?;
    let mut terms = Vec::with_capacity(params.p as usize);
    for k in 1..=params.p {
        terms.push(trigamma_real(params.arg(k))?);
    }
    Ok(sum_real(terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::exp_level_diff;

    #[test]
    fn small_values() {
        let z0 = l_exact(LParams::new(3, 0.0, 1.0).unwrap(), Complex::new(0.0, 0.0)).unwrap();
        assert_eq!(z0, Complex::new(0.0, 0.0));
        let v = l_exact(LParams::new(2, 0.0, 1.0).unwrap(), Complex::new(1.0, 0.0)).unwrap();
        assert!((v.re - 2f64.ln()).abs() < 1e-14);
    }

    #[test]
    fn domain_is_enforced() {
        let p = LParams::new(3, 0.0, 0.5).unwrap();
        assert!(l_exact(p, Complex::new(-0.5, 0.0)).is_err());
        assert!(LParams::new(3, -1.0, 1.0).is_err());
    }

    #[test]
    fn barnes_route_matches_direct() {
        let q = QuadratureSpec::default();
        for alpha in [0.5, 1.0, 2.0] {
            for l in [0.0, 0.75, 3.0] {
                let params = LParams::new(DIRECT_SUM_LIMIT + 7, l, alpha).unwrap();
                let z = Complex::new(0.3, 1.7);
                let a = l_exact(params, z).unwrap();
                let b = l_eval(LParams { p: params.p, ..params }, z, &q);
                let b = b.unwrap();
                // force the Barnes path for comparison
                let c = match alpha {
                    x if x == 1.0 => unit_sum(params.p, l, z, &q).unwrap(),
                    x if x == 0.5 => {
                        unit_sum(params.p / 2, 0.5 * l, z, &q).unwrap()
                            + unit_sum(params.p.div_ceil(2), 0.5 * l - 0.5, z, &q).unwrap()
                    }
                    _ => {
                        z * (params.p as f64 * std::f64::consts::LN_2)
                            + unit_sum(params.p, l, z * 0.5, &q).unwrap()
                            + unit_sum(params.p, l + 0.5, z * 0.5, &q).unwrap()
                    }
                };
                assert!(exp_level_diff(a, b) < 1e-9, "alpha={alpha} l={l}");
                assert!(exp_level_diff(a, c) < 1e-9, "alpha={alpha} l={l}: {a} vs {c}");
            }
        }
    }
}
