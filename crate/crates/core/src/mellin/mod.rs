//! Exact log-moment transforms `log E[X^z]` of log-determinants and
//! log-volumes, and their first two cumulants.

mod ensemble;
mod form;
mod lsum;
mod model;

pub use ensemble::{EnsembleKind, EnsembleSpec};
pub use form::GammaMomentForm;
pub use lsum::{l_digamma_sum, l_eval, l_exact, l_trigamma_sum, LParams, DIRECT_SUM_LIMIT};
pub use model::{GammaTerm, LBlock, MellinModel};

use num_complex::Complex64 as Complex;

use crate::specfun::QuadratureSpec;
use crate::Result;

/// `log E[X^z]` for the statistic of `e`, with default quadrature settings
/// for the large-`p` Barnes route.
pub fn log_mgf(e: &EnsembleSpec, z: Complex) -> Result<Complex> {
    log_mgf_with(e, z, &QuadratureSpec::default())
}

pub fn log_mgf_with(e: &EnsembleSpec, z: Complex, q: &QuadratureSpec) -> Result<Complex> {
    e.model()?.log_mgf(z, q)
}

/// Exact mean (`order = 1`) or variance (`order = 2`) of the log statistic.
pub fn cumulant(e: &EnsembleSpec, order: u8) -> Result<f64> {
    e.model()?.cumulant(order)
}

pub fn lower_to_gamma_form(e: &EnsembleSpec) -> Result<GammaMomentForm> {
    e.model()?.to_gamma_form()
}
