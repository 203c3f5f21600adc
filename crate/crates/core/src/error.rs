//! Error type shared by every module.

use thiserror::Error;

/// Result alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Failures surfaced by the library.
///
/// Variants split into two families: validation problems (bad input, a
/// regime the theory does not cover) and numerical problems (quadrature or
/// root finding that did not reach tolerance). [`Error::is_numerical`]
/// distinguishes them.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole at z = {re} + {im}i")]
    Pole { re: f64, im: f64 },
    #[error("|z| = {0:e} exceeds the supported range")]
    Overflow(f64),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("non-finite value produced in {0}")]
    NonFinite(&'static str),
    #[error("quadrature did not reach tolerance (last refinement delta {delta:e}, partial value {partial:e})")]
    Quadrature { delta: f64, partial: f64 },
    #[error("imaginary-axis integrand does not decay (|g({at})| = {magnitude:e})")]
    NonDecay { at: f64, magnitude: f64 },
    #[error("identity mismatch: |reconstruction - exact| = {residual:e} exceeds {bound:e}")]
    IdentityMismatch { residual: f64, bound: f64 },
    #[error("unsupported parameter: {0}")]
    UnsupportedParameter(String),
    #[error("unsupported regime: {0}")]
    UnsupportedRegime(String),
    #[error("unsupported kind: {0}")]
    UnsupportedKind(String),
    #[error("operation requires a Gaussian reference law")]
    NonGaussianRegime,
    #[error("x = {x} outside the admissible range ({lo}, {hi})")]
    Range { x: f64, lo: f64, hi: f64 },
    #[error("root finder did not converge after {iterations} iterations (residual {residual:e})")]
    Convergence { iterations: usize, residual: f64 },
    #[error("invalid zone of control: {0}")]
    InvalidZone(String),
    #[error("limiting function cannot be evaluated: {0}")]
    NonEvaluableLimit(String),
    #[error("exponent mu = {mu} outside (0, {max})")]
    ExponentRange { mu: f64, max: f64 },
    #[error("empty sample batch")]
    EmptyBatch,
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// True for failures of a numerical method rather than of the input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NonFinite(_)
                | Error::Quadrature { .. }
                | Error::NonDecay { .. }
                | Error::IdentityMismatch { .. }
                | Error::Convergence { .. }
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
