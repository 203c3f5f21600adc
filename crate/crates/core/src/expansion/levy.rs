//! Reference exponents `η` of mod-φ convergence.

use num_complex::Complex64 as Complex;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// `η` together with its real derivatives.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum LevyExponent {
    /// `variance · z²/2`.
    Gaussian { variance: f64 },
    /// Totally skewed 1-stable exponent at argument `scale·z`:
    /// `−(β/2) log β + (w + β/2) log 2 + (w + β/2) log(w + β/2)`, `w = scale·z`.
    Stable1 { beta: f64, scale: f64 },
    /// The two-sided analogue for Jacobi with `n1 ~ τ1 n`, `n2 ~ τ2 n`.
    Stable2 { beta: f64, tau1: f64, tau2: f64 },
    /// Limiting scaled cumulant `Λ_c` of the Laguerre log-determinant with
    /// `p ~ c n`, `0 < c < 1`; used only for rate functions.
    Proportional { beta: f64, c: f64 },
}

fn xlogx(x: Complex) -> Complex {
    if x == Complex::new(0.0, 0.0) {
        x
    } else {
        x * x.ln()
    }
}

/// `y²/2 log y − y²/4`, an antiderivative of `y log y`.
fn prim(y: Complex) -> Complex {
    if y == Complex::new(0.0, 0.0) {
        y
    } else {
        y * y * (y.ln() * 0.5 - 0.25)
    }
}

impl LevyExponent {
    pub fn gaussian() -> Self {
        LevyExponent::Gaussian { variance: 1.0 }
    }

    pub fn is_gaussian(&self) -> bool {
        matches!(self, LevyExponent::Gaussian { .. })
    }

    /// Open interval of real `h` on which `η(h)` is finite and convex.
    pub fn admissible(&self) -> (f64, f64) {
        match *self {
            LevyExponent::Gaussian { .. } => (f64::NEG_INFINITY, f64::INFINITY),
            LevyExponent::Stable1 { beta, scale } => {
                let edge = -beta / (2.0 * scale.abs());
                if scale > 0.0 {
                    (edge, f64::INFINITY)
                } else {
                    (f64::NEG_INFINITY, -edge)
                }
            }
            LevyExponent::Stable2 { beta, tau1, .. } => (-beta * tau1 / 2.0, f64::INFINITY),
            LevyExponent::Proportional { beta, c } => (-beta / 2.0 * (1.0 - c), f64::INFINITY),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            LevyExponent::Gaussian { variance } => variance > 0.0 && variance.is_finite(),
            LevyExponent::Stable1 { beta, scale } => beta > 0.0 && scale != 0.0 && scale.is_finite(),
            LevyExponent::Stable2 { beta, tau1, tau2 } => beta > 0.0 && tau1 > 0.0 && tau2 > 0.0,
            LevyExponent::Proportional { beta, c } => beta > 0.0 && c > 0.0 && c < 1.0,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Domain(format!("invalid exponent {self:?}")))
        }
    }

    /// `η(z)`.
    pub fn eval(&self, z: Complex) -> Complex {
        match *self {
            LevyExponent::Gaussian { variance } => z * z * (0.5 * variance),
            LevyExponent::Stable1 { beta, scale } => {
                let y = z * scale + beta / 2.0;
                -(beta / 2.0) * beta.ln() + y * std::f64::consts::LN_2 + xlogx(y)
            }
            LevyExponent::Stable2 { beta, tau1, tau2 } => {
                let a = beta / 2.0 * tau1;
                let b = beta / 2.0 * (tau1 + tau2);
                Complex::new(b * b.ln() - a * a.ln(), 0.0) + xlogx(z + a) - xlogx(z + b)
            }
            LevyExponent::Proportional { beta, c } => {
                let alpha = beta / 2.0;
                let lo = alpha * (1.0 - c);
                let bracket = prim(z + alpha) - prim(z + lo) - prim(Complex::new(alpha, 0.0)) + prim(Complex::new(lo, 0.0));
                z * std::f64::consts::LN_2 + bracket / (c * alpha)
            }
        }
    }

    /// `η'(h)` for real `h`.
    pub fn d1(&self, h: f64) -> f64 {
        match *self {
            LevyExponent::Gaussian { variance } => variance * h,
            LevyExponent::Stable1 { beta, scale } => {
                scale * (std::f64::consts::LN_2 + (scale * h + beta / 2.0).ln() + 1.0)
            }
            LevyExponent::Stable2 { beta, tau1, tau2 } => {
                ((h + beta / 2.0 * tau1) / (h + beta / 2.0 * (tau1 + tau2))).ln()
            }
            LevyExponent::Proportional { beta, c } => {
                let alpha = beta / 2.0;
                let (a, b) = (h + alpha, h + alpha * (1.0 - c));
                let xl = |x: f64| if x == 0.0 { 0.0 } else { x * x.ln() };
                std::f64::consts::LN_2 + (xl(a) - xl(b)) / (c * alpha)
            }
        }
    }

    /// `η''(h)` for real `h`.
    pub fn d2(&self, h: f64) -> f64 {
        match *self {
            LevyExponent::Gaussian { variance } => variance,
            LevyExponent::Stable1 { beta, scale } => scale * scale / (scale * h + beta / 2.0),
            LevyExponent::Stable2 { beta, tau1, tau2 } => {
                1.0 / (h + beta / 2.0 * tau1) - 1.0 / (h + beta / 2.0 * (tau1 + tau2))
            }
            LevyExponent::Proportional { beta, c } => {
                let alpha = beta / 2.0;
                ((h + alpha) / (h + alpha * (1.0 - c))).ln() / (c * alpha)
            }
        }
    }

    /// Closed-form conjugate `sup_h (hx − η(h))` where one is known.
    pub fn conjugate_closed_form(&self, x: f64) -> Option<f64> {
        match *self {
            LevyExponent::Gaussian { variance } => Some(x * x / (2.0 * variance)),
            LevyExponent::Stable1 { beta, scale } if scale == 1.0 => {
                Some((x - std::f64::consts::LN_2 - 1.0).exp() - beta / 2.0 * x + beta / 2.0 * beta.ln())
            }
            _ => None,
        }
    }
}
