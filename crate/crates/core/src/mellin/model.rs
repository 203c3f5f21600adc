//! Linear combinations of `L` blocks and single Gamma ratios.
//!
//! Every supported log-moment transform has the shape
//! `slope·z + Σ w_b L(p_b, l_b, α_b; s_b z) + Σ w_g [log Γ(a_g z + b_g) − log Γ(b_g)]`,
//! which is what [`MellinModel`] stores. Cumulants, the Gamma-type form and
//! the product representation used for sampling are all read off it.

use std::collections::HashMap;

use num_complex::Complex64 as Complex;
use serde::{Deserialize, Serialize};

use super::form::GammaMomentForm;
use super::lsum::{l_digamma_sum, l_eval, l_trigamma_sum, LParams};
use crate::specfun::cmath::CompensatedSum;
use crate::specfun::{digamma_real, log_gamma_diff, trigamma_real, QuadratureSpec};
use crate::{Error, Result};

/// `weight · L(params; scale·z)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LBlock {
    pub weight: f64,
    pub params: LParams,
    pub scale: f64,
}

/// `weight · [log Γ(a z + b) − log Γ(b)]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GammaTerm {
    pub weight: f64,
    pub a: f64,
    pub b: f64,
}

/// Exact log-moment transform as a structured sum.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct MellinModel {
    pub slope: f64,
    pub blocks: Vec<LBlock>,
    pub extras: Vec<GammaTerm>,
}

impl MellinModel {
    pub fn new(slope: f64) -> Self {
        Self { slope, ..Self::default() }
    }

    pub fn block(mut self, weight: f64, params: LParams, scale: f64) -> Self {
        self.blocks.push(LBlock { weight, params, scale });
        self
    }

    pub fn gamma(mut self, weight: f64, a: f64, b: f64) -> Self {
        self.extras.push(GammaTerm { weight, a, b });
        self
    }

    /// Open strip `(lo, hi)` of real parts where every Gamma argument has
    /// positive real part.
    pub fn strip(&self) -> (f64, f64) {
        let mut lo = f64::NEG_INFINITY;
        let mut hi = f64::INFINITY;
        for b in &self.blocks {
            lo = lo.max(b.params.re_lower_bound() / b.scale);
        }
        for g in &self.extras {
            if g.a > 0.0 {
                lo = lo.max(-g.b / g.a);
            } else if g.a < 0.0 {
                hi = hi.min(g.b / -g.a);
            }
        }
        (lo, hi)
    }

    pub fn check_domain(&self, z: Complex) -> Result<()> {
        if !(z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::NonFinite("log-moment argument"));
        }
        let (lo, hi) = self.strip();
        if z.re <= lo {
            return Err(Error::Domain(format!("Re z = {} violates the boundary Re z > {lo}", z.re)));
        }
        if z.re >= hi {
            return Err(Error::Domain(format!("Re z = {} violates the boundary Re z < {hi}", z.re)));
        }
        Ok(())
    }

    /// `log E[X^z]`.
    pub fn log_mgf(&self, z: Complex, q: &QuadratureSpec) -> Result<Complex> {
        self.check_domain(z)?;
        let mut acc = CompensatedSum::new();
        acc.add(z * self.slope);
        for b in &self.blocks {
            if b.weight != 0.0 {
                acc.add(l_eval(b.params, z * b.scale, q)? * b.weight);
            }
        }
        for g in &self.extras {
            if g.weight != 0.0 && g.a != 0.0 {
                acc.add(log_gamma_diff(g.b, z * g.a)? * g.weight);
            }
        }
        Ok(acc.value())
    }

    /// Exact mean (`order = 1`) or variance (`order = 2`).
    pub fn cumulant(&self, order: u8) -> Result<f64> {
        let mut total = 0.0;
        match order {
            1 => {
                total += self.slope;
                for b in &self.blocks {
                    total += b.weight * b.scale * l_digamma_sum(b.params)?;
                }
                for g in &self.extras {
                    if g.a != 0.0 {
                        total += g.weight * g.a * digamma_real(g.b)?;
                    }
                }
            }
            2 => {
                for b in &self.blocks {
                    total += b.weight * b.scale * b.scale * l_trigamma_sum(b.params)?;
                }
                for g in &self.extras {
                    if g.a != 0.0 {
                        total += g.weight * g.a * g.a * trigamma_real(g.b)?;
                    }
                }
            }
            _ => return Err(Error::Domain(format!("cumulant order must be 1 or 2, got {order}"))),
        }
        Ok(total)
    }

    /// Gamma-type form with `C = 1`; normalizing constants appear as
    /// slope-zero factors and identical factors are merged. Weights must be
    /// integers.
    pub fn to_gamma_form(&self) -> Result<GammaMomentForm> {
        let mut factors: Vec<((f64, f64), i64)> = Vec::new();
        let mut index: HashMap<(u64, u64), usize> = HashMap::new();
        let mut push = |weight: f64, a: f64, b: f64| -> Result<()> {
            if weight.fract() != 0.0 {
                return Err(Error::UnsupportedParameter(format!("non-integer multiplicity {weight}")));
            }
            match index.get(&(a.to_bits(), b.to_bits())) {
                Some(&i) => factors[i].1 += weight as i64,
                None => {
                    index.insert((a.to_bits(), b.to_bits()), factors.len());
                    factors.push(((a, b), weight as i64));
                }
            }
            Ok(())
        };
        for b in &self.blocks {
            let LParams { p, l, alpha } = b.params;
            for k in 1..=p {
                push(b.weight, b.scale, alpha * (k as f64 + l))?;
            }
        }
        for g in &self.extras {
            if g.a != 0.0 {
                push(g.weight, g.a, g.b)?;
            }
        }
        let mut form = GammaMomentForm { log_c: 0.0, log_d: self.slope, numerator: vec![], denominator: vec![] };
        for ((a, b), m) in factors {
            for _ in 0..m.unsigned_abs() {
                if m > 0 {
                    form.numerator.push((a, b));
                    form.denominator.push((0.0, b));
                } else {
                    form.numerator.push((0.0, b));
                    form.denominator.push((a, b));
                }
            }
        }
        Ok(form)
    }
}
