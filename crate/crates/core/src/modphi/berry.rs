//! Zones of control, Berry–Esseen bounds and local-limit windows.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::normal::normal_pdf;
use crate::expansion::ModPhiData;
use crate::specfun::log_gamma_real;
use crate::{Error, Result};

/// Stability index, scale and skewness of the reference stable law.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StableParams {
    pub c: f64,
    pub alpha: f64,
    pub delta: f64,
}

impl StableParams {
    /// `N(0,1)` as the stable law with `α = 2`, `c = 1/√2`.
    pub fn gaussian() -> Self {
        Self { c: std::f64::consts::FRAC_1_SQRT_2, alpha: 2.0, delta: 0.0 }
    }
}

/// Bound `|ψ_n(iξ) − 1| ≤ K1 |ξ|^v exp(K2 |ξ|^w)` for `|ξ| ≤ D t_n^γ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZoneOfControl {
    pub gamma: f64,
    pub v: f64,
    pub w: f64,
    #[serde(rename = "D")]
    pub d: f64,
    #[serde(rename = "K1")]
    pub k1: f64,
    #[serde(rename = "K2")]
    pub k2: f64,
    pub stable: StableParams,
}

/// `K1` for the Gaussian defaults, calibrated as 1.25 times the largest
/// ratio `|ψ_n(iξ) − 1| / (|ξ| e^{|ξ|³/4})` over `|ξ| ≤ t_n`, Laguerre with
/// `p = n`, `β ∈ {1, 2, 4}`, `n ∈ {50, 500, 5000}`.
pub const DEFAULT_K1: f64 = 1.16;

impl Default for ZoneOfControl {
    /// Gaussian defaults for the log-determinant regimes: `γ = 1`, `v = 1`,
    /// `w = 3`, `K2 = ¼`, `D = 1`.
    fn default() -> Self {
        Self { gamma: 1.0, v: 1.0, w: 3.0, d: 1.0, k1: DEFAULT_K1, k2: 0.25, stable: StableParams::gaussian() }
    }
}

impl ZoneOfControl {
    /// Largest admissible `D`: `(c^α/(2K2))^{1/(w−α)}`.
    pub fn d_max(&self) -> f64 {
        let StableParams { c, alpha, .. } = self.stable;
        if self.w == alpha {
            f64::INFINITY
        } else {
            (c.powf(alpha) / (2.0 * self.k2)).powf(1.0 / (self.w - alpha))
        }
    }

    pub fn validate(&self) -> Result<()> {
        let StableParams { c, alpha, delta } = self.stable;
        let fail = |s: String| Err(Error::InvalidZone(s));
        let finite = [self.gamma, self.v, self.w, self.d, self.k1, self.k2, c, alpha, delta];
        if finite.iter().any(|x| !x.is_finite()) {
            return fail("all parameters must be finite".into());
        }
        if !(alpha > 0.0 && alpha <= 2.0) {
            return fail(format!("alpha = {alpha} not in (0, 2]"));
        }
        if !(-1.0..=1.0).contains(&delta) {
            return fail(format!("delta = {delta} not in [-1, 1]"));
        }
        if c <= 0.0 {
            return fail(format!("c = {c} must be positive"));
        }
        if self.v < 0.0 {
            return fail(format!("v = {} must be >= 0", self.v));
        }
        if self.w <= 0.0 {
            return fail(format!("w = {} must be > 0", self.w));
        }
        if self.k1 <= 0.0 || self.k2 <= 0.0 {
            return fail(format!("K1 = {}, K2 = {} must be positive", self.k1, self.k2));
        }
        if alpha > self.w {
            return fail(format!("alpha <= w violated: alpha = {alpha}, w = {}", self.w));
        }
        if self.gamma < -1.0 / alpha {
            return fail(format!("gamma >= -1/alpha violated: gamma = {}, -1/alpha = {}", self.gamma, -1.0 / alpha));
        }
        if self.w > alpha && self.gamma > 1.0 / (self.w - alpha) {
            return fail(format!(
                "gamma <= 1/(w - alpha) violated: gamma = {}, 1/(w - alpha) = {}",
                self.gamma,
                1.0 / (self.w - alpha)
            ));
        }
        let d_max = self.d_max();
        if !(self.d > 0.0 && self.d <= d_max) {
            return fail(format!("0 < D <= (c^alpha/(2 K2))^(1/(w - alpha)) violated: D = {}, bound = {d_max}", self.d));
        }
        Ok(())
    }

    /// `min(γ, (v−1)/α)`, the exponent that enters the rate.
    pub fn effective_gamma(&self) -> f64 {
        self.gamma.min((self.v - 1.0) / self.stable.alpha)
    }
}

/// Gaussian Berry–Esseen constant `3/(2π) (2^{v−1} Γ(v/2) + (7/D) √(π/2))`.
pub fn gaussian_be_constant(v: f64, d: f64) -> Result<f64> {
    let g = if v == 0.0 { f64::INFINITY } else { log_gamma_real(v / 2.0)?.exp() };
    Ok(3.0 / (2.0 * PI) * (2f64.powf(v - 1.0) * g + 7.0 / d * (PI / 2.0).sqrt()))
}

/// `C / t_n^{min(γ,(v−1)/α) + 1/α}` bounding the Kolmogorov distance of
/// `X_n / √t_n` to `N(0,1)`.
pub fn berry_esseen_bound(zoc: &ZoneOfControl, t_n: f64) -> Result<f64> {
    zoc.validate()?;
    if zoc.stable.alpha != 2.0 {
        return Err(Error::NonGaussianRegime);
    }
    if !(t_n > 0.0 && t_n.is_finite()) {
        return Err(Error::Domain(format!("t_n must be positive, got {t_n}")));
    }
    let c = gaussian_be_constant(zoc.v, zoc.d)?;
    if !c.is_finite() {
        return Err(Error::InvalidZone("v = 0 gives an infinite constant".into()));
    }
    Ok(c / t_n.powf(zoc.effective_gamma() + 1.0 / zoc.stable.alpha))
}

/// A window `x + t_n^{−μ}[a, b]` for the local limit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LltQuery {
    pub x: f64,
    pub a: f64,
    pub b: f64,
    pub mu: f64,
}

/// `m(B) p(x) / t_n^μ`, the predicted probability that `Y_n = X_n/√t_n`
/// falls in the window; Gaussian regimes only.
pub fn llt_window(m: &ModPhiData, q: &LltQuery, zoc: &ZoneOfControl) -> Result<f64> {
    if !m.eta.is_gaussian() || zoc.stable.alpha != 2.0 {
        return Err(Error::NonGaussianRegime);
    }
    let max = zoc.gamma + 1.0 / zoc.stable.alpha;
    if !(q.mu > 0.0 && q.mu < max) {
        return Err(Error::ExponentRange { mu: q.mu, max });
    }
    if !(q.a <= q.b) || !q.x.is_finite() || !q.a.is_finite() || !q.b.is_finite() {
        return Err(Error::Domain(format!("window needs finite a <= b, got [{}, {}]", q.a, q.b)));
    }
    Ok((q.b - q.a) * normal_pdf(q.x) / m.t_n.powf(q.mu))
}

/// `X_n / t_n − (2cδ/π) log t_n` for `α = 1`, else `X_n / t_n^{1/α}`.
pub fn stable_normalization(x_n: f64, t_n: f64, stable: StableParams) -> f64 {
    if stable.alpha == 1.0 {
        x_n / t_n - 2.0 * stable.c * stable.delta / PI * t_n.ln()
    } else {
        x_n / t_n.powf(1.0 / stable.alpha)
    }
}
