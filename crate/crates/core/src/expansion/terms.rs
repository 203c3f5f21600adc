//! Exact decomposition of `L(p,l,α;z)` into five explicit terms and a
//! remainder.
//!
//! Writing `a_k = α(k+l)` and applying the first Binet formula to every
//! summand splits `L` into a Binet-kernel integral `T1` and the sum
//! `Σ_k [(a_k+z−½) log(a_k+z) − (a_k−½) log a_k]`. The latter is summed by
//! Abel–Plana over `u ∈ [1+l, p+1+l]`, which produces the closed forms
//! `T2`–`T4` and two boundary integrals of
//! `g(u) = (αu+z−½) log(1 + z/(αu))`: `T5` at `u = 1+l` and the remainder
//! `R` at `u = p+1+l`. The decomposition is exact:
//! `L = T1 + T2 + T3 + T4 + T5 − R`.

use num_complex::Complex64 as Complex;
use serde::{Deserialize, Serialize};

use crate::mellin::{l_exact, LParams};
use crate::specfun::{binet_kernel, exp_m1, ln_1p, log_gamma_real, plana_boundary, semiinf_integral, QuadratureSpec};
use crate::{Error, Result};

/// Measured constant in `|R| ≤ K_R (|z| + |z|²)/(α(p+l+1))`.
pub const R_BOUND_CONSTANT: f64 = 0.25;

/// The terms of the decomposition at one `(params, z)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExpansionTerms {
    pub t1: Complex,
    pub t2: Complex,
    pub t3: Complex,
    pub t4: Complex,
    pub t5: Complex,
    pub r: Complex,
    pub r_bound: f64,
}

impl ExpansionTerms {
    /// `T1 + T2 + T3 + T4 + T5 − R`.
    pub fn total(&self) -> Complex {
        self.t1 + self.t2 + self.t3 + self.t4 + self.t5 - self.r
    }

    /// Everything except the remainder: the asymptotic approximation.
    pub fn main_part(&self) -> Complex {
        self.t1 + self.t2 + self.t3 + self.t4 + self.t5
    }
}

/// Radius of the window `|z| ≤ (α/8)(p+l)^{1/6}` in which the expansion
/// is asymptotically sharp.
pub fn window_radius(params: LParams) -> f64 {
    params.alpha / 8.0 * (params.p as f64 + params.l).max(0.0).powf(1.0 / 6.0)
}

/// Errors when `z` lies outside [`window_radius`]. The identity itself
/// holds on the whole half plane; callers opt in to the window.
pub fn check_window(params: LParams, z: Complex) -> Result<()> {
    let r = window_radius(params);
    if z.norm() > r {
        return Err(Error::Domain(format!("|z| = {} outside the expansion window |z| <= {r}", z.norm())));
    }
    Ok(())
}

fn check(params: LParams, z: Complex, q: &QuadratureSpec) -> Result<()> {
    params.validate()?;
    q.validate()?;
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::NonFinite("expansion argument"));
    }
    if z.re <= params.re_lower_bound() {
        return Err(Error::Domain(format!("expansion needs Re z > {}, got {}", params.re_lower_bound(), z.re)));
    }
    Ok(())
}

/// `g(u) = (αu + z − ½) log(1 + z/(αu))`.
fn boundary_fn(alpha: f64, z: Complex) -> impl Fn(Complex) -> Complex {
    let w = z / alpha;
    move |u: Complex| (u * alpha + z - 0.5) * ln_1p(w / u)
}

/// `−pz + ∫ φ(s)(e^{−sz} − 1) e^{−sαl}(1 − e^{−sαp})/(e^{αs} − 1) ds`.
pub fn t1(params: LParams, z: Complex, q: &QuadratureSpec) -> Result<Complex> {
    let LParams { p, l, alpha } = params;
    let p = p as f64;
    let rate = (z.re + alpha * (1.0 + l)).min(alpha * (1.0 + l));
    let integral = semiinf_integral(
        |s| {
            let geom = -(-s * alpha * p).exp_m1() / (alpha * s).exp_m1();
            exp_m1(-z * s) * (binet_kernel(s) * (-s * alpha * l).exp() * geom)
        },
        &q.with_decay(rate),
    )?;
    Ok(-z * p + integral)
}

/// `z(p log α + log Γ(p+l+1) − log Γ(l+1))`.
pub fn t2(params: LParams, z: Complex) -> Result<Complex> {
    let LParams { p, l, alpha } = params;
    let p = p as f64;
    Ok(z * (p * alpha.ln() + log_gamma_real(p + l + 1.0)? - log_gamma_real(l + 1.0)?))
}

/// Closed form of the integrated Stirling part.
pub fn t3(params: LParams, z: Complex) -> Complex {
    let LParams { p, l, alpha } = params;
    let p = p as f64;
    let top = 1.0 + p + l;
    let bottom = 1.0 + l;
    let quad = z * (z - 1.0) / (2.0 * alpha);
    let upper = (quad + alpha * top * (p + l) / 2.0 + (z - 0.5) * (p + l + 0.5)) * ln_1p(z / (alpha * top));
    let lower = (quad + alpha * bottom * bottom / 2.0 + (z - 0.5) * bottom) * ln_1p(z / (alpha * bottom));
    upper - lower + z * (p / 2.0) + quad * (p / bottom).ln_1p()
}

/// `½(α(1+l) + z − ½) log(1 + z/(α(1+l)))`, the Abel–Plana end correction.
pub fn t4(l: f64, alpha: f64, z: Complex) -> Complex {
    let a = alpha * (1.0 + l);
    (z + a - 0.5) * ln_1p(z / a) * 0.5
}

/// Boundary integral of `g` at `u = 1+l`.
pub fn t5(l: f64, alpha: f64, z: Complex, q: &QuadratureSpec) -> Result<Complex> {
    plana_boundary(&boundary_fn(alpha, z), 1.0 + l, q)
}

/// Boundary integral of `g` at `u = p+1+l`; enters with a minus sign.
pub fn remainder(params: LParams, z: Complex, q: &QuadratureSpec) -> Result<Complex> {
    let LParams { p, l, alpha } = params;
    plana_boundary(&boundary_fn(alpha, z), p as f64 + 1.0 + l, q)
}

/// All terms at `(params, z)`.
pub fn expansion_terms(params: LParams, z: Complex, q: &QuadratureSpec) -> Result<ExpansionTerms> {
    check(params, z, q)?;
    let r = remainder(params, z, q)?;
    let r_bound = R_BOUND_CONSTANT * (z.norm() + z.norm_sqr()) / (params.alpha * (params.p as f64 + params.l + 1.0));
    Ok(ExpansionTerms {
        t1: t1(params, z, q)?,
        t2: t2(params, z)?,
        t3: t3(params, z),
        t4: t4(params.l, params.alpha, z),
        t5: t5(params.l, params.alpha, z, q)?,
        r,
        r_bound,
    })
}

/// `L(p,l,α;z)` rebuilt from its terms, checked against the direct sum.
pub fn l_reconstruct(params: LParams, z: Complex, q: &QuadratureSpec) -> Result<Complex> {
    let total = expansion_terms(params, z, q)?.total();
    let exact = l_exact(params, z)?;
    let residual = (total - exact).norm();
    let bound = 100.0 * (q.abs_tol + q.rel_tol * exact.norm()) * (params.p as f64).max(1.0).sqrt();
    if residual > bound.max(1e-9) {
        return Err(Error::IdentityMismatch { residual, bound });
    }
    Ok(total)
}
