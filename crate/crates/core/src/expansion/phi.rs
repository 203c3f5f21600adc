//! Limiting functions of the Gaussian regimes.

use std::f64::consts::PI;

use num_complex::Complex64 as Complex;

use super::terms::{t4, t5};
use crate::specfun::{binet_kernel, exp_m1, ln_1p, log_barnes_g, log_gamma, log_gamma_real, semiinf_integral, QuadratureSpec};
use crate::{Error, Result};

const LN_TWO_PI: f64 = 1.837_877_066_409_345_5;

fn check_arg(z: Complex, lo: f64, what: &str) -> Result<()> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::NonFinite("limiting function argument"));
    }
    if z.re <= lo {
        return Err(Error::Domain(format!("{what} needs Re z > {lo}, got {}", z.re)));
    }
    Ok(())
}

/// `log G(x)` for the usual Barnes G (so `log G(1) = 0`).
fn lg_barnes(x: Complex, q: &QuadratureSpec) -> Result<Complex> {
    log_barnes_g(x - 1.0, q)
}

/// `Φ_α(z) = α log G(z/α + 1) − (z − ½) log Γ(z/α + 1)
///         + ∫ φ(s)(e^{−sz} − 1)/(e^{sα} − 1) ds + z²/(2α) + z/2`.
///
/// Limit of `L(n,0,α;z) − zμ − (z²/(2α)) log n`.
pub fn phi_alpha(alpha: f64, z: Complex, q: &QuadratureSpec) -> Result<Complex> {
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(Error::Domain(format!("phi_alpha needs alpha > 0, got {alpha}")));
    }
    check_arg(z, -alpha, "phi_alpha")?;
    if z == Complex::new(0.0, 0.0) {
        return Ok(z);
    }
    let w = z / alpha;
    let barnes = log_barnes_g(w, q)? * alpha;
    let gamma = (z - 0.5) * log_gamma(w + 1.0)?;
    let rate = alpha + z.re.min(0.0);
    let integral = semiinf_integral(|s| exp_m1(-z * s) * (binet_kernel(s) / (alpha * s).exp_m1()), &q.with_decay(rate))?;
    Ok(barnes - gamma + integral + z * z / (2.0 * alpha) + z * 0.5)
}

/// `Φ_1(z) = (z/2) log 2π − log G(1+z)`.
pub fn phi_one_closed(z: Complex, q: &QuadratureSpec) -> Result<Complex> {
    Ok(z * (0.5 * LN_TWO_PI) - log_barnes_g(z, q)?)
}

/// `Φ_{1/2}(z) = z(½ log 2 + ½ log 2π) − ½ log G(1+2z) − ½(log Γ(½) − log Γ(½+z))`.
pub fn phi_half_closed(z: Complex, q: &QuadratureSpec) -> Result<Complex> {
    let lg_half = 0.5 * PI.ln();
    Ok(z * (0.5 * std::f64::consts::LN_2 + 0.5 * LN_TWO_PI) - log_barnes_g(z * 2.0, q)? * 0.5
        - (Complex::new(lg_half, 0.0) - log_gamma(z + 0.5)?) * 0.5)
}

/// `Φ^c_{β/2}(z) = U1 + … + U5`, the limit of
/// `L(p,c,β/2;z) − zμ − (z²/β) log((p+1+c)/(1+c))` for a fixed gap `c`.
///
/// `c` may be any real with `1 + c > 0`; the Bogoliubov–de Gennes classes
/// use `c ∈ {−½, ½, ¾, 1}`.
pub fn phi_c(beta: f64, c: f64, z: Complex, q: &QuadratureSpec) -> Result<Complex> {
    if !(beta > 0.0 && beta.is_finite()) {
        return Err(Error::Domain(format!("phi_c needs beta > 0, got {beta}")));
    }
    if !(c.is_finite() && c > -1.0) {
        return Err(Error::Domain(format!("phi_c needs c > -1, got {c}")));
    }
    let alpha = beta / 2.0;
    let a = alpha * (1.0 + c);
    check_arg(z, -a, "phi_c")?;
    if z == Complex::new(0.0, 0.0) {
        return Ok(z);
    }
    let rate = a + z.re.min(0.0);
    let u1 = semiinf_integral(
        |s| exp_m1(-z * s) * (binet_kernel(s) * (-s * alpha * c).exp() / (alpha * s).exp_m1()),
        &q.with_decay(rate),
    )?;
    let u2 = z * (0.5 * LN_TWO_PI - c - log_gamma_real(1.0 + c)?);
    let quad = z * (z - 1.0) / beta;
    let u3 = z * (c / 2.0) + z * z * (1.5 / beta) - z / beta + z * ((1.0 + c).ln() / beta)
        - (quad + alpha * (1.0 + c) * (1.0 + c) / 2.0 + (z - 0.5) * (1.0 + c)) * ln_1p(z / a);
    let u4 = t4(c, alpha, z);
    let u5 = t5(c, alpha, z, q)?;
    Ok(u1 + u2 + u3 + u4 + u5)
}

/// Barnes form at `β = 2`:
/// `log G(1+c) − log G(1+c+z) + z(½ log 2π − (c+1)) + z + (z²/2) log(1+c)`.
///
/// Agrees with [`phi_c`] at `β = 2`. The last two terms are the fixed
/// polynomial offset between the two representations.
pub fn phi_c_barnes(c: f64, z: Complex, q: &QuadratureSpec) -> Result<Complex> {
    if !(c.is_finite() && c > -1.0) {
        return Err(Error::Domain(format!("phi_c_barnes needs c > -1, got {c}")));
    }
    check_arg(z, -(1.0 + c), "phi_c_barnes")?;
    let a = Complex::new(1.0 + c, 0.0);
    let core = lg_barnes(a, q)? - lg_barnes(a + z, q)? + z * (0.5 * LN_TWO_PI - (c + 1.0));
    Ok(core + z + z * z * (0.5 * (1.0 + c).ln()))
}

/// `Φ^H(z) = log(Γ(½) G(½)² / (Γ((z+1)/2) G((z+1)/2)²))`.
pub fn phi_h(z: Complex, q: &QuadratureSpec) -> Result<Complex> {
    check_arg(z, -1.0, "phi_h")?;
    let half = Complex::new(0.5, 0.0);
    let w = (z + 1.0) * 0.5;
    let top = log_gamma(half)? + lg_barnes(half, q)? * 2.0;
    let bottom = log_gamma(w)? + lg_barnes(w, q)? * 2.0;
    Ok(top - bottom)
}
