//! Special functions and the quadrature engine the rest of the crate uses.

mod abel_plana;
mod barnes;
pub mod cmath;
mod gamma;
mod quad;

pub use abel_plana::{abel_plana_sum, plana_boundary};
pub use barnes::{log_barnes_g, log_barnes_g_derivative, log_barnes_g_shift};
pub use cmath::{exp_level_diff, exp_m1, ln_1p};
pub use gamma::{
    binet_kernel, binet_log_gamma, digamma, digamma_real, log_gamma, log_gamma_diff, log_gamma_real,
    stirling_remainder_bound, trigamma, trigamma_real, MAX_ABS_ARG,
};
pub use quad::{finite_integral, gauss_legendre, gl16, semiinf_integral, QuadratureSpec};
