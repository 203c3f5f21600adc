//! Limiting functions `ψ` as sums of structured log terms.

use num_complex::Complex64 as Complex;
use serde::{Deserialize, Serialize};

use super::phi::{phi_alpha, phi_c};
use crate::mellin::{l_eval, GammaTerm, LBlock};
use crate::specfun::{ln_1p, log_gamma_diff, QuadratureSpec};
use crate::Result;

/// One additive piece of `log ψ(z)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum LimitTerm {
    /// `weight · Φ_α(scale·z)`.
    PhiAlpha { weight: f64, alpha: f64, scale: f64 },
    /// `weight · Φ^c_{β/2}(scale·z)`.
    PhiC { weight: f64, beta: f64, c: f64, scale: f64 },
    /// `coef · z²`.
    Quadratic { coef: f64 },
    /// `weight · [log Γ(a z + b) − log Γ(b)]`.
    Gamma(GammaTerm),
    /// A finite `L` block kept exactly.
    Block(LBlock),
    /// `exponent · log(1 + slope·z)`.
    Power { slope: f64, exponent: f64 },
}

/// Coarse classification of a limiting function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LimitKind {
    One,
    PhiAlpha,
    PhiC,
    ClosedFormProduct,
    StablePower,
}

impl LimitTerm {
    /// Left edge of the real half line on which the term is finite.
    fn lower_edge(&self) -> f64 {
        let edge = |lo: f64, scale: f64| if scale > 0.0 { lo / scale } else { f64::NEG_INFINITY };
        match *self {
            LimitTerm::PhiAlpha { alpha, scale, .. } => edge(-alpha, scale),
            LimitTerm::PhiC { beta, c, scale, .. } => edge(-beta / 2.0 * (1.0 + c), scale),
            LimitTerm::Quadratic { .. } => f64::NEG_INFINITY,
            LimitTerm::Gamma(g) => edge(-g.b, g.a),
            LimitTerm::Block(b) => edge(b.params.re_lower_bound(), b.scale),
            LimitTerm::Power { slope, .. } => edge(-1.0, slope),
        }
    }

    fn upper_edge(&self) -> f64 {
        match *self {
            LimitTerm::Gamma(g) if g.a < 0.0 => g.b / -g.a,
            LimitTerm::Power { slope, .. } if slope < 0.0 => 1.0 / -slope,
            _ => f64::INFINITY,
        }
    }

    fn eval(&self, z: Complex, q: &QuadratureSpec) -> Result<Complex> {
        Ok(match *self {
            LimitTerm::PhiAlpha { weight, alpha, scale } => phi_alpha(alpha, z * scale, q)? * weight,
            LimitTerm::PhiC { weight, beta, c, scale } => phi_c(beta, c, z * scale, q)? * weight,
            LimitTerm::Quadratic { coef } => z * z * coef,
            LimitTerm::Gamma(g) => log_gamma_diff(g.b, z * g.a)? * g.weight,
            LimitTerm::Block(b) => l_eval(b.params, z * b.scale, q)? * b.weight,
            LimitTerm::Power { slope, exponent } => ln_1p(z * slope) * exponent,
        })
    }
}

/// `ψ(z) = exp(Σ terms)`; the empty sum is `ψ ≡ 1`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct LimitingFunctionSpec {
    pub terms: Vec<LimitTerm>,
}

impl LimitingFunctionSpec {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn with(mut self, term: LimitTerm) -> Self {
        self.terms.push(term);
        self
    }

    /// Drops zero quadratic terms and merges the rest.
    pub fn tidy(mut self) -> Self {
        let coef: f64 = self
            .terms
            .iter()
            .filter_map(|t| if let LimitTerm::Quadratic { coef } = t { Some(*coef) } else { None })
            .sum();
        self.terms.retain(|t| !matches!(t, LimitTerm::Quadratic { .. }));
        if coef != 0.0 {
            self.terms.push(LimitTerm::Quadratic { coef });
        }
        self
    }

    pub fn kind(&self) -> LimitKind {
        let has = |f: fn(&LimitTerm) -> bool| self.terms.iter().any(f);
        if self.terms.is_empty() {
            LimitKind::One
        } else if has(|t| matches!(t, LimitTerm::Power { .. })) {
            LimitKind::StablePower
        } else if has(|t| matches!(t, LimitTerm::PhiC { .. })) {
            LimitKind::PhiC
        } else if has(|t| matches!(t, LimitTerm::PhiAlpha { .. })) {
            LimitKind::PhiAlpha
        } else {
            LimitKind::ClosedFormProduct
        }
    }

    /// Open interval of real `h` where `ψ(h)` is defined.
    pub fn real_domain(&self) -> (f64, f64) {
        let lo = self.terms.iter().map(|t| t.lower_edge()).fold(f64::NEG_INFINITY, f64::max);
        let hi = self.terms.iter().map(|t| t.upper_edge()).fold(f64::INFINITY, f64::min);
        (lo, hi)
    }

    /// Scales the argument: the result is `z ↦ ψ(s z)`.
    pub fn rescaled(&self, s: f64) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| match *t {
                LimitTerm::PhiAlpha { weight, alpha, scale } => LimitTerm::PhiAlpha { weight, alpha, scale: scale * s },
                LimitTerm::PhiC { weight, beta, c, scale } => LimitTerm::PhiC { weight, beta, c, scale: scale * s },
                LimitTerm::Quadratic { coef } => LimitTerm::Quadratic { coef: coef * s * s },
                LimitTerm::Gamma(g) => LimitTerm::Gamma(GammaTerm { a: g.a * s, ..g }),
                LimitTerm::Block(b) => LimitTerm::Block(LBlock { scale: b.scale * s, ..b }),
                LimitTerm::Power { slope, exponent } => LimitTerm::Power { slope: slope * s, exponent },
            })
            .collect();
        Self { terms }
    }

    /// Multiplies every term by `w`: the result is `ψ^w`.
    pub fn powered(&self, w: f64) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| match *t {
                LimitTerm::PhiAlpha { weight, alpha, scale } => LimitTerm::PhiAlpha { weight: weight * w, alpha, scale },
                LimitTerm::PhiC { weight, beta, c, scale } => LimitTerm::PhiC { weight: weight * w, beta, c, scale },
                LimitTerm::Quadratic { coef } => LimitTerm::Quadratic { coef: coef * w },
                LimitTerm::Gamma(g) => LimitTerm::Gamma(GammaTerm { weight: g.weight * w, ..g }),
                LimitTerm::Block(b) => LimitTerm::Block(LBlock { weight: b.weight * w, ..b }),
                LimitTerm::Power { slope, exponent } => LimitTerm::Power { slope, exponent: exponent * w },
            })
            .collect();
        Self { terms }
    }

    pub fn extend(&mut self, other: Self) {
        self.terms.extend(other.terms);
    }

    /// `log ψ(z)`.
    pub fn log_eval(&self, z: Complex, q: &QuadratureSpec) -> Result<Complex> {
        let mut acc = Complex::new(0.0, 0.0);
        for t in &self.terms {
            acc += t.eval(z, q)?;
        }
        Ok(acc)
    }

    /// `ψ(z)`.
    pub fn eval(&self, z: Complex, q: &QuadratureSpec) -> Result<Complex> {
        Ok(self.log_eval(z, q)?.exp())
    }
}
