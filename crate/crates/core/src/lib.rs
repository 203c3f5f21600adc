//! Exact Gamma-type moment transforms of log-determinants and log-volumes,
//! their asymptotic expansions, mod-φ limit data, and numerical checks of
//! the resulting limit theorems.
//!
//! Modules, bottom up:
//! - [`specfun`]: log-gamma, polygamma, Barnes G, quadrature, Abel–Plana;
//! - [`mellin`]: exact log-moment transforms and cumulants per ensemble;
//! - [`expansion`]: the exact term decomposition of `L(p,l,α;z)` and mod-φ data;
//! - [`modphi`]: deviations, Berry–Esseen, local limits, rate functions;
//! - [`sampling`]: exact Monte Carlo of the log statistic and a CF-inversion oracle.

pub mod error;
pub mod expansion;
pub mod mellin;
pub mod modphi;
pub mod sampling;
pub mod specfun;

pub use error::{Error, Result};
pub use num_complex::Complex64 as Complex;
pub use specfun::QuadratureSpec;
