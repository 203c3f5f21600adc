//! Quadratic approximations of single Gamma and Barnes G shifts.

use std::f64::consts::PI;

use num_complex::Complex64 as Complex;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Measured constant in the Barnes ratio bound `K (|z| + |z|²)/p`.
pub const BARNES_RATIO_CONSTANT: f64 = 0.5;

/// Measured constant in the Gamma shift bound `K (|z| + |z|² + |z|³)/m`.
pub const BINET_SHIFT_CONSTANT: f64 = 0.5;

/// An approximation and an envelope for its error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Approximation {
    pub main: Complex,
    pub bound: f64,
}

/// `log Γ(m+z) − log Γ(m) ≈ z(log m − 1/(2m)) + z²/(2m)`.
///
/// `c` fixes the window `|z| < (c/4) m^{1/6}`; pass `f64::INFINITY` to
/// skip the window check.
pub fn binet_shift_expansion(m: f64, z: Complex, c: f64) -> Result<Approximation> {
    if !(m > 0.0 && m.is_finite()) {
        return Err(Error::Domain(format!("binet shift needs m > 0, got {m}")));
    }
    let radius = c / 4.0 * m.powf(1.0 / 6.0);
    if z.norm() >= radius {
        return Err(Error::Domain(format!("|z| = {} outside the window |z| < {radius}", z.norm())));
    }
    let main = z * (m.ln() - 0.5 / m) + z * z / (2.0 * m);
    let r = z.norm();
    Ok(Approximation { main, bound: BINET_SHIFT_CONSTANT * (r + r * r + r * r * r) / m })
}

/// `log(G(1+z+p)/G(1+p)) ≈ (z/2) log 2π − (p+1)z + (z²/2 + pz) log(1+p)`,
/// for `|z| ≤ ½ p^{1/6}`.
pub fn barnes_ratio_estimate(p: u64, z: Complex) -> Result<Approximation> {
    if p == 0 {
        return Err(Error::Domain("barnes ratio needs p >= 1".into()));
    }
    let pf = p as f64;
    let radius = 0.5 * pf.powf(1.0 / 6.0);
    if z.norm() > radius {
        return Err(Error::Domain(format!("|z| = {} outside the window |z| <= {radius}", z.norm())));
    }
    let main = z * (0.5 * (2.0 * PI).ln()) - z * (pf + 1.0) + (z * z * 0.5 + z * pf) * (1.0 + pf).ln();
    let r = z.norm();
    Ok(Approximation { main, bound: BARNES_RATIO_CONSTANT * (r + r * r) / pf })
}
