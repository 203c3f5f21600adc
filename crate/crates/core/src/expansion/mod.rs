//! The exact term decomposition of `L(p,l,α;z)`, the limiting functions of
//! its asymptotic regimes, and per-ensemble mod-φ packages.

mod approx;
mod data;
mod levy;
mod limit;
mod phi;
mod terms;

pub use approx::{barnes_ratio_estimate, binet_shift_expansion, Approximation, BARNES_RATIO_CONSTANT, BINET_SHIFT_CONSTANT};
pub use data::{
    ensemble_modphi, jacobi_modphi, laguerre_modphi, ConvergenceDomain, ModPhiData, Proportional, Regime,
    GROWING_GAP_THRESHOLD,
};
pub use levy::LevyExponent;
pub use limit::{LimitKind, LimitTerm, LimitingFunctionSpec};
pub use phi::{phi_alpha, phi_c, phi_c_barnes, phi_h, phi_half_closed, phi_one_closed};
pub use terms::{
    check_window, expansion_terms, l_reconstruct, remainder, t1, t2, t3, t4, t5, window_radius, ExpansionTerms,
    R_BOUND_CONSTANT,
};
