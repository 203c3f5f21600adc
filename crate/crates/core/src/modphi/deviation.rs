//! Legendre–Fenchel conjugates, normality-zone tails, precise deviations
//! and rate functions.

use std::f64::consts::PI;

use num_complex::Complex64 as Complex;
use serde::{Deserialize, Serialize};

use super::normal::normal_sf;
use crate::expansion::{ConvergenceDomain, LevyExponent, ModPhiData};
use crate::specfun::QuadratureSpec;
use crate::{Error, Result};

/// Default tolerance on `|η'(h) − x|`.
pub const SOLVER_TOL: f64 = 1e-12;

const MAX_ITER: usize = 200;

/// `F(x) = sup_h (hx − η(h))` and its maximiser.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Conjugate {
    pub f: f64,
    pub h: f64,
    pub iterations: usize,
    pub residual: f64,
}

/// Output of [`precise_deviation`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DeviationResult {
    /// `P(X_n ≥ t_n x)` for `x > η'(0)`, `P(X_n ≤ t_n x)` below.
    pub probability: f64,
    pub h: f64,
    #[serde(rename = "F")]
    pub f: f64,
    pub x: f64,
    pub upper_tail: bool,
    pub psi_h: f64,
    pub t_n: f64,
    pub iterations: usize,
    pub residual: f64,
    pub regime_label: String,
}

/// First-order tail in the normality zone.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CltTail {
    /// `P(N(0,1) ≥ y)`.
    pub probability: f64,
    /// `t_n η'(0) + √(t_n η''(0)) y` on the `X_n` scale.
    pub threshold: f64,
    pub y: f64,
    pub t_n: f64,
    /// Set when `|y|` is not small against `√t_n`.
    pub warning: Option<String>,
}

/// Range of `η'` over the admissible interval, approached from inside.
fn derivative_range(eta: &LevyExponent) -> (f64, f64) {
    let (lo, hi) = eta.admissible();
    let left = if lo.is_finite() { eta.d1(lo + 1e-300_f64.max(lo.abs() * 1e-15)) } else { f64::NEG_INFINITY };
    let right = if hi.is_finite() { eta.d1(hi - 1e-300_f64.max(hi.abs() * 1e-15)) } else { f64::INFINITY };
    (left, right)
}

/// Solves `η'(h) = x` by Newton steps kept inside a bisection bracket.
pub fn legendre_fenchel(eta: &LevyExponent, x: f64, tol: f64) -> Result<Conjugate> {
    eta.validate()?;
    if !x.is_finite() {
        return Err(Error::NonFinite("legendre_fenchel argument"));
    }
    let tol = if tol > 0.0 { tol } else { SOLVER_TOL };
    if let LevyExponent::Gaussian { variance } = *eta {
        let h = x / variance;
        return Ok(Conjugate { f: x * h / 2.0, h, iterations: 0, residual: 0.0 });
    }
    let (lo_edge, hi_edge) = eta.admissible();
    let (rlo, rhi) = derivative_range(eta);
    let g = |h: f64| eta.d1(h) - x;

    // Bracket [a, b] with g(a) < 0 < g(b).
    let start = 0.0_f64.clamp(lo_edge, hi_edge);
    let (mut a, mut b);
    let g0 = g(start);
    if g0 == 0.0 {
        return Ok(Conjugate { f: start * x - eta.eval(Complex::new(start, 0.0)).re, h: start, iterations: 0, residual: 0.0 });
    }
    let range_err = || Error::Range { x, lo: rlo, hi: rhi };
    if g0 < 0.0 {
        a = start;
        let mut step = 1.0;
        loop {
            let cand = if hi_edge.is_finite() { hi_edge - (hi_edge - start) * 0.5f64.powf(step) } else { start + step };
            if g(cand) > 0.0 {
                b = cand;
                break;
            }
            a = cand;
            step *= 2.0;
            if step > 1e300 || (hi_edge.is_finite() && step > 1100.0) {
                return Err(range_err());
            }
        }
    } else {
        b = start;
        let mut step = 1.0;
        loop {
            let cand = if lo_edge.is_finite() { lo_edge + (start - lo_edge) * 0.5f64.powf(step) } else { start - step };
            if g(cand) < 0.0 {
                a = cand;
                break;
            }
            b = cand;
            step *= 2.0;
            if step > 1e300 || (lo_edge.is_finite() && step > 1100.0) {
                return Err(range_err());
            }
        }
    }

    let mut h = 0.5 * (a + b);
    for it in 1..=MAX_ITER {
        let r = g(h);
        if r.abs() < tol {
            let f = h * x - eta.eval(Complex::new(h, 0.0)).re;
            return Ok(Conjugate { f, h, iterations: it, residual: r.abs() });
        }
        if r < 0.0 {
            a = h;
        } else {
            b = h;
        }
        let newton = h - r / eta.d2(h);
        h = if newton > a && newton < b && newton.is_finite() { newton } else { 0.5 * (a + b) };
        if b - a < f64::EPSILON * h.abs().max(1e-300) {
            let r = g(h);
            if r.abs() < tol.max(1e3 * f64::EPSILON * x.abs()) {
                let f = h * x - eta.eval(Complex::new(h, 0.0)).re;
                return Ok(Conjugate { f, h, iterations: it, residual: r.abs() });
            }
            return Err(Error::Convergence { iterations: it, residual: r.abs() });
        }
    }
    Err(Error::Convergence { iterations: MAX_ITER, residual: g(h).abs() })
}

/// `P(N(0,1) ≥ y)` and the matching threshold for `X_n`.
pub fn extended_clt_tail(m: &ModPhiData, y: f64) -> Result<CltTail> {
    if !m.eta.is_gaussian() {
        return Err(Error::NonGaussianRegime);
    }
    if !y.is_finite() {
        return Err(Error::NonFinite("extended_clt_tail argument"));
    }
    let threshold = m.t_n * m.eta.d1(0.0) + (m.t_n * m.eta.d2(0.0)).sqrt() * y;
    let warning = (y.abs() > 0.5 * m.t_n.sqrt()).then(|| {
        format!("|y| = {} is not small against sqrt(t_n) = {}; the normality zone is o(sqrt(t_n))", y.abs(), m.t_n.sqrt())
    });
    Ok(CltTail { probability: normal_sf(y), threshold, y, t_n: m.t_n, warning })
}

/// `P(X_n ≥ t_n x) ≈ exp(−t_n F(x)) ψ(h) / (h √(2π t_n η''(h)))`, and the
/// reflected lower tail with `|h|` for `x < η'(0)`.
pub fn precise_deviation(m: &ModPhiData, x: f64, q: &QuadratureSpec) -> Result<DeviationResult> {
    let centre = m.eta.d1(0.0);
    if !x.is_finite() {
        return Err(Error::NonFinite("precise_deviation argument"));
    }
    let (lo, hi) = match m.domain {
        ConvergenceDomain::Strip { lo, hi } => (lo, hi),
        ConvergenceDomain::ImaginaryAxis => {
            return Err(Error::NonEvaluableLimit(format!(
                "{}: convergence holds on the imaginary axis only, psi is not controlled at real h",
                m.regime_label
            )))
        }
    };
    let hi_x = if hi.is_finite() { m.eta.d1(hi) } else { f64::INFINITY };
    let lo_x = if lo.is_finite() { m.eta.d1(lo) } else { f64::NEG_INFINITY };
    if x == centre || x >= hi_x || x <= lo_x {
        return Err(Error::Range { x, lo: if x > centre { centre } else { lo_x }, hi: if x > centre { hi_x } else { centre } });
    }
    let conj = legendre_fenchel(&m.eta, x, SOLVER_TOL)?;
    let psi_h = m.psi_limit.eval(Complex::new(conj.h, 0.0), q)?.re;
    let t = m.t_n;
    let probability = (-t * conj.f).exp() * psi_h / (conj.h.abs() * (2.0 * PI * t * m.eta.d2(conj.h)).sqrt());
    if !probability.is_finite() {
        return Err(Error::NonFinite("precise_deviation"));
    }
    Ok(DeviationResult {
        probability: probability.clamp(0.0, 1.0),
        h: conj.h,
        f: conj.f,
        x,
        upper_tail: x > centre,
        psi_h,
        t_n: t,
        iterations: conj.iterations,
        residual: conj.residual,
        regime_label: m.regime_label.clone(),
    })
}

/// Regimes with a closed or numerical large-deviation rate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum LdpRegime {
    /// Gaussian regimes: `I(x) = x²/2`.
    Gaussian,
    /// Laguerre with `p` fixed or `p = o(n)`:
    /// `I(x) = exp(x − log 2 − 1) − (β/2)x + (β/2) log β`.
    FixedP { beta: f64 },
    /// Laguerre with `p ~ c n`, `0 < c < 1`: conjugate of `Λ_c`.
    Proportional { beta: f64, c: f64 },
}

/// Large-deviation rate function.
pub fn ldp_rate(regime: LdpRegime, x: f64) -> Result<f64> {
    let eta = match regime {
        LdpRegime::Gaussian => LevyExponent::gaussian(),
        LdpRegime::FixedP { beta } => LevyExponent::Stable1 { beta, scale: 1.0 },
        LdpRegime::Proportional { beta, c } if c == 0.0 => LevyExponent::Stable1 { beta, scale: 1.0 },
        LdpRegime::Proportional { beta, c } => {
            if !(c > 0.0 && c < 1.0) {
                return Err(Error::UnsupportedRegime(format!("proportional LDP needs 0 < c < 1, got {c}")));
            }
            LevyExponent::Proportional { beta, c }
        }
    };
    eta.validate()?;
    if let Some(v) = eta.conjugate_closed_form(x) {
        return Ok(v);
    }
    Ok(legendre_fenchel(&eta, x, SOLVER_TOL)?.f)
}
