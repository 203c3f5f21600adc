//! Limit theorems driven by mod-φ data: residues, normality-zone and
//! precise deviations, Berry–Esseen bounds, local limits, rate functions.

mod berry;
mod deviation;
mod normal;

pub use berry::{
    berry_esseen_bound, gaussian_be_constant, llt_window, stable_normalization, LltQuery, StableParams,
    ZoneOfControl, DEFAULT_K1,
};
pub use deviation::{
    extended_clt_tail, ldp_rate, legendre_fenchel, precise_deviation, CltTail, Conjugate, DeviationResult,
    LdpRegime, SOLVER_TOL,
};
pub use normal::{normal_cdf, normal_pdf, normal_sf};

use num_complex::Complex64 as Complex;

use crate::expansion::ModPhiData;
use crate::Result;

/// `ψ_n(z) = exp(log φ_n(z) − t_n η(z))` for a caller-supplied `log φ_n`.
pub fn residue_psi_n<F>(m: &ModPhiData, log_phi_n: F, z: Complex) -> Result<Complex>
where
    F: Fn(Complex) -> Result<Complex>,
{
    m.check_domain(z)?;
    Ok((log_phi_n(z)? - m.eta.eval(z) * m.t_n).exp())
}
