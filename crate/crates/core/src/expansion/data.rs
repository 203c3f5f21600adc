//! Mod-φ packages `(η, t_n, μ, ψ)` per ensemble and regime.
//!
//! Every log-moment transform is `slope·z + Σ w L(p,l,α;s z) + Σ gamma terms`.
//! Each `L` block is expanded according to how its gap behaves:
//!
//! | class     | mean                                                         | `t` (coefficient of `z²/2`) | `ψ`         |
//! |-----------|--------------------------------------------------------------|-----------------------------|-------------|
//! | full      | `p log α + N log N − N + (½ − 1/β) log N`, `N = p+l`         | `(2/β) log N`               | `Φ_α`       |
//! | fixed gap | `½ log(p+c) − (1/β) log(p+1+c) + (p+c) log(p+c) + p log α − p` | `(2/β) log((p+1+c)/(1+c))`  | `Φ^c_α`     |
//! | large gap | `(½ − 1/β) log(N/l) + N log N − l log l + p log α − p`        | `(2/β) log(N/l)`            | `1`         |
//! | exact     | `0`                                                          | `0`                         | `L` itself  |
//!
//! Block contributions are scaled by `w s` (mean), `w s²` (`t`) and
//! `z ↦ s z` (`ψ`). Single Gamma ratios with large base use
//! `log Γ(b + a z) − log Γ(b) ≈ a z (log b − 1/(2b)) + a² z²/(2b)`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64 as Complex;
use serde::{Deserialize, Serialize};

use super::levy::LevyExponent;
use super::limit::{LimitTerm, LimitingFunctionSpec};
use crate::mellin::{EnsembleKind, EnsembleSpec, GammaTerm, LBlock, LParams, MellinModel};
use crate::specfun::QuadratureSpec;
use crate::{Error, Result};

/// Largest `(n − p)/n` accepted for the growing-gap regime.
pub const GROWING_GAP_THRESHOLD: f64 = 0.2;

/// Gamma ratios with base below this stay exact inside `ψ`.
const LARGE_BASE: f64 = 8.0;

/// How `p` relates to `n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Regime {
    /// `p = n`.
    Full,
    /// `p = n` with a real gap `l ∈ [0, 1)` added to every Gamma argument.
    VanishingGap { gap: f64 },
    /// `n − p = c` fixed.
    FixedGap { c: f64 },
    /// `n − p → ∞` with `n − p = o(n)`.
    GrowingGap { p: u64 },
    /// `p` fixed while `n → ∞`.
    FixedP { p: u64 },
}

impl Regime {
    pub fn name(&self) -> &'static str {
        match self {
            Regime::Full => "full",
            Regime::VanishingGap { .. } => "vanishing-gap",
            Regime::FixedGap { .. } => "fixed-gap",
            Regime::GrowingGap { .. } => "growing-gap",
            Regime::FixedP { .. } => "fixed-p",
        }
    }

    /// The regime an ensemble's parameters most naturally belong to.
    pub fn infer(e: &EnsembleSpec) -> Result<Regime> {
        let model = e.model()?;
        let main = model.blocks[0].params;
        if matches!(e.kind, EnsembleKind::Gue | EnsembleKind::FixedTraceGue | EnsembleKind::Ginibre) {
            return Ok(Regime::Full);
        }
        if e.kind == EnsembleKind::Jacobi {
            let gap = e.n1 - e.p;
            return Ok(if gap == 0 { Regime::Full } else { Regime::FixedGap { c: gap as f64 } });
        }
        Ok(if main.l == 0.0 {
            Regime::Full
        } else if main.l < 1.0 || e.kind.is_bdg() {
            Regime::FixedGap { c: main.l }
        } else if main.l / (main.p as f64 + main.l) <= GROWING_GAP_THRESHOLD {
            Regime::GrowingGap { p: main.p }
        } else {
            Regime::FixedP { p: main.p }
        })
    }

    /// Builds a regime from its name and the parameters of `e`.
    pub fn from_name(name: &str, e: &EnsembleSpec, gap: Option<f64>) -> Result<Regime> {
        let main = e.model()?.blocks[0].params;
        let (p, l) = if e.kind == EnsembleKind::Jacobi {
            (e.p, (e.n1 - e.p) as f64)
        } else {
            (main.p, main.l)
        };
        Ok(match name {
            "full" => Regime::Full,
            "vanishing-gap" => Regime::VanishingGap { gap: gap.unwrap_or(l) },
            "fixed-gap" => Regime::FixedGap { c: gap.unwrap_or(l) },
            "growing-gap" => Regime::GrowingGap { p },
            "fixed-p" => Regime::FixedP { p },
            other => return Err(Error::UnsupportedRegime(format!("unknown regime '{other}'"))),
        })
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Regime::Full => write!(f, "full"),
            Regime::VanishingGap { gap } => write!(f, "vanishing-gap(l={gap})"),
            Regime::FixedGap { c } => write!(f, "fixed-gap(c={c})"),
            Regime::GrowingGap { p } => write!(f, "growing-gap(p={p})"),
            Regime::FixedP { p } => write!(f, "fixed-p(p={p})"),
        }
    }
}

impl FromStr for Regime {
    type Err = Error;

    /// Parameter-free names only; parameters default to zero.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(Regime::Full),
            "vanishing-gap" => Ok(Regime::VanishingGap { gap: 0.0 }),
            "fixed-gap" => Ok(Regime::FixedGap { c: 0.0 }),
            "growing-gap" => Ok(Regime::GrowingGap { p: 0 }),
            "fixed-p" => Ok(Regime::FixedP { p: 0 }),
            other => Err(Error::UnsupportedRegime(format!("unknown regime '{other}'"))),
        }
    }
}

/// Proportional growth `n1 ≈ τ1 n`, `n2 ≈ τ2 n` of the Jacobi sizes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Proportional {
    pub n: u64,
    pub tau1: f64,
    pub tau2: f64,
}

/// Where `ψ_n → ψ` holds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ConvergenceDomain {
    /// Open strip `lo < Re z < hi`.
    Strip { lo: f64, hi: f64 },
    ImaginaryAxis,
}

impl ConvergenceDomain {
    pub fn contains(&self, z: Complex) -> bool {
        match *self {
            ConvergenceDomain::Strip { lo, hi } => z.re > lo && z.re < hi,
            ConvergenceDomain::ImaginaryAxis => z.re == 0.0,
        }
    }
}

/// A mod-φ package for `X_n = multiplier · (statistic − mean_shift)`:
/// `E[e^{z X_n}] e^{−t_n η(z)} → ψ(z)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModPhiData {
    pub eta: LevyExponent,
    pub t_n: f64,
    pub mean_shift: f64,
    pub multiplier: f64,
    pub psi_limit: LimitingFunctionSpec,
    pub domain: ConvergenceDomain,
    pub regime_label: String,
    /// Exact log-moment transform of the statistic.
    pub source: MellinModel,
}

impl ModPhiData {
    /// `X_n` for an observed value of the statistic.
    pub fn x_n(&self, statistic: f64) -> f64 {
        self.multiplier * (statistic - self.mean_shift)
    }

    /// Inverse of [`ModPhiData::x_n`].
    pub fn statistic(&self, x_n: f64) -> f64 {
        x_n / self.multiplier + self.mean_shift
    }

    /// `log E[e^{z X_n}]` from the exact transform.
    pub fn log_phi_n(&self, z: Complex, q: &QuadratureSpec) -> Result<Complex> {
        let w = z * self.multiplier;
        Ok(self.source.log_mgf(w, q)? - w * self.mean_shift)
    }

    pub fn check_domain(&self, z: Complex) -> Result<()> {
        if self.domain.contains(z) {
            Ok(())
        } else {
            Err(Error::Domain(format!("z = {z} outside the convergence domain {:?}", self.domain)))
        }
    }

    /// `ψ_n(z) = exp(log φ_n(z) − t_n η(z))`.
    pub fn psi_n(&self, z: Complex, q: &QuadratureSpec) -> Result<Complex> {
        self.check_domain(z)?;
        Ok((self.log_phi_n(z, q)? - self.eta.eval(z) * self.t_n).exp())
    }

    /// `ψ(z)`.
    pub fn psi(&self, z: Complex, q: &QuadratureSpec) -> Result<Complex> {
        self.check_domain(z)?;
        self.psi_limit.eval(z, q)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum BlockClass {
    Full,
    FixedGap,
    LargeGap,
    Exact,
}

struct Piece {
    mean: f64,
    t: f64,
    psi: LimitingFunctionSpec,
}

fn block_piece(b: &LBlock, class: BlockClass) -> Piece {
    let LParams { p, l, alpha } = b.params;
    let beta = 2.0 * alpha;
    let pf = p as f64;
    let (mean, t, psi) = match class {
        BlockClass::Full => {
            let n = pf + l;
            let mean = pf * alpha.ln() + n * n.ln() - n + (0.5 - 1.0 / beta) * n.ln();
            let psi = LimitingFunctionSpec::one().with(LimitTerm::PhiAlpha { weight: 1.0, alpha, scale: 1.0 });
            (mean, n.ln() / alpha, psi)
        }
        BlockClass::FixedGap => {
            let c = l;
            let mean = 0.5 * (pf + c).ln() - (pf + 1.0 + c).ln() / beta + (pf + c) * (pf + c).ln() + pf * alpha.ln() - pf;
            let psi = LimitingFunctionSpec::one().with(LimitTerm::PhiC { weight: 1.0, beta, c, scale: 1.0 });
            (mean, ((pf + 1.0 + c) / (1.0 + c)).ln() / alpha, psi)
        }
        BlockClass::LargeGap => {
            let n = pf + l;
            let mean = (0.5 - 1.0 / beta) * (n / l).ln() + n * n.ln() - l * l.ln() + pf * alpha.ln() - pf;
            (mean, (n / l).ln() / alpha, LimitingFunctionSpec::one())
        }
        BlockClass::Exact => {
            let psi = LimitingFunctionSpec::one().with(LimitTerm::Block(LBlock { weight: 1.0, scale: 1.0, ..*b }));
            (0.0, 0.0, psi)
        }
    };
    Piece {
        mean: b.weight * b.scale * mean,
        t: b.weight * b.scale * b.scale * t,
        psi: psi.rescaled(b.scale).powered(b.weight),
    }
}

fn gamma_piece(g: &GammaTerm) -> Piece {
    if g.b >= LARGE_BASE {
        let mean = g.weight * g.a * (g.b.ln() - 0.5 / g.b);
        let coef = g.weight * g.a * g.a / (2.0 * g.b);
        Piece { mean, t: 0.0, psi: LimitingFunctionSpec::one().with(LimitTerm::Quadratic { coef }) }
    } else {
        Piece { mean: 0.0, t: 0.0, psi: LimitingFunctionSpec::one().with(LimitTerm::Gamma(*g)) }
    }
}

/// Assembles a Gaussian package from per-block classes.
fn gaussian(model: MellinModel, classes: &[BlockClass], label: String) -> Result<ModPhiData> {
    debug_assert_eq!(classes.len(), model.blocks.len());
    let mut mean = model.slope;
    let mut t = 0.0;
    let mut psi = LimitingFunctionSpec::one();
    let pieces = model
        .blocks
        .iter()
        .zip(classes)
        .map(|(b, &c)| block_piece(b, c))
        .chain(model.extras.iter().map(gamma_piece));
    for piece in pieces {
        mean += piece.mean;
        t += piece.t;
        psi.extend(piece.psi);
    }
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::UnsupportedRegime(format!("{label}: parameter t_n = {t} is not positive")));
    }
    let psi = psi.tidy();
    let (slo, shi) = model.strip();
    let (plo, phi) = psi.real_domain();
    Ok(ModPhiData {
        eta: LevyExponent::gaussian(),
        t_n: t,
        mean_shift: mean,
        multiplier: 1.0,
        psi_limit: psi,
        domain: ConvergenceDomain::Strip { lo: slo.max(plo), hi: shi.min(phi) },
        regime_label: label,
        source: model,
    })
}

/// Swaps `t_n` for another convention, moving the difference into `ψ`.
fn retune(mut d: ModPhiData, t_new: f64, variance: f64) -> ModPhiData {
    let LevyExponent::Gaussian { variance: v_old } = d.eta else {
        return d;
    };
    let coef = (d.t_n * v_old - t_new * variance) / 2.0;
    d.psi_limit = d.psi_limit.with(LimitTerm::Quadratic { coef }).tidy();
    d.t_n = t_new;
    d.eta = LevyExponent::Gaussian { variance };
    d
}

/// Fixed-`p` package of a single-block model `slope·z + L(p,l,α;s z)`.
fn stable(model: MellinModel, label: String) -> Result<ModPhiData> {
    if model.blocks.len() != 1 || !model.extras.is_empty() {
        return Err(Error::UnsupportedRegime(format!("{label}: no stable limit for this statistic")));
    }
    let b = model.blocks[0];
    if b.weight != 1.0 {
        return Err(Error::UnsupportedRegime(format!("{label}: no stable limit for this statistic")));
    }
    let LParams { p, l, alpha } = b.params;
    let beta = 2.0 * alpha;
    let pf = p as f64;
    let n = pf + l;
    let s = b.scale;
    let shift = pf * n.ln() - pf - pf * std::f64::consts::LN_2;
    let exponent = -beta * (pf - 1.0) * pf / 4.0 - pf / 2.0;
    Ok(ModPhiData {
        eta: LevyExponent::Stable1 { beta, scale: s },
        t_n: pf * n,
        mean_shift: model.slope + s * shift,
        multiplier: n,
        psi_limit: LimitingFunctionSpec::one().with(LimitTerm::Power { slope: 2.0 * s / beta, exponent }),
        domain: ConvergenceDomain::ImaginaryAxis,
        regime_label: label,
        source: model,
    })
}

/// Class of the leading block under `regime`, checked against its `(p, l)`.
fn main_class(regime: Regime, params: LParams, label: &str) -> Result<BlockClass> {
    let LParams { p, l, .. } = params;
    let mismatch = || Error::UnsupportedRegime(format!("{label}: parameters p={p}, gap={l} do not match {regime}"));
    match regime {
        Regime::Full if l == 0.0 => Ok(BlockClass::Full),
        Regime::VanishingGap { gap } if (0.0..1.0).contains(&gap) && (l - gap).abs() < 1e-12 => Ok(BlockClass::Full),
        Regime::FixedGap { c } if (l - c).abs() < 1e-12 => Ok(BlockClass::FixedGap),
        Regime::GrowingGap { p: q } if q == p && l >= 1.0 => {
            let ratio = l / (p as f64 + l);
            if ratio > GROWING_GAP_THRESHOLD {
                Err(Error::UnsupportedRegime(format!(
                    "{label}: (n-p)/n = {ratio:.4} exceeds {GROWING_GAP_THRESHOLD}; proportional gaps have no mod-phi limit"
                )))
            } else {
                Ok(BlockClass::LargeGap)
            }
        }
        _ => Err(mismatch()),
    }
}

fn package(model: MellinModel, regime: Regime, label: String) -> Result<ModPhiData> {
    if let Regime::FixedP { p } = regime {
        if model.blocks[0].params.p != p {
            return Err(Error::UnsupportedRegime(format!("{label}: p does not match")));
        }
        return stable(model, label);
    }
    let first = main_class(regime, model.blocks[0].params, &label)?;
    let classes: Vec<BlockClass> = std::iter::once(first)
        .chain(std::iter::repeat_n(BlockClass::Exact, model.blocks.len() - 1))
        .collect();
    gaussian(model, &classes, label)
}

/// Laguerre package for `log det`.
///
/// For the full, vanishing-gap and fixed-gap regimes `n` is the number of
/// factors `p` and the gap is added on top (an `(n+c) × n` matrix); for
/// growing-gap and fixed-`p` regimes `n` is the larger dimension.
pub fn laguerre_modphi(beta: f64, n: u64, regime: Regime) -> Result<ModPhiData> {
    if !(beta > 0.0 && beta.is_finite()) || n == 0 {
        return Err(Error::UnsupportedParameter(format!("laguerre needs beta > 0 and n >= 1, got beta={beta} n={n}")));
    }
    let (p, l) = match regime {
        Regime::Full => (n, 0.0),
        Regime::VanishingGap { gap } => (n, gap),
        Regime::FixedGap { c } => {
            if !(c >= 0.0 && c.is_finite()) {
                return Err(Error::UnsupportedRegime(format!("laguerre fixed gap needs c >= 0, got {c}")));
            }
            (n, c)
        }
        Regime::GrowingGap { p } | Regime::FixedP { p } => {
            if p == 0 || p > n {
                return Err(Error::UnsupportedRegime(format!("need 1 <= p <= n, got p={p}")));
            }
            (p, (n - p) as f64)
        }
    };
    let params = LParams::new(p, l, beta / 2.0)?;
    let model = MellinModel::new(p as f64 * std::f64::consts::LN_2).block(1.0, params, 1.0);
    package(model, regime, format!("laguerre-{}", regime.name()))
}

/// Jacobi package as the difference of two Laguerre-type expansions.
pub fn jacobi_modphi(
    beta: f64,
    p: u64,
    n1: u64,
    n2: u64,
    regime: Regime,
    proportional: Option<Proportional>,
) -> Result<ModPhiData> {
    let e = EnsembleSpec::jacobi(beta, p, n1, n2)?;
    let model = e.model()?;
    let label = format!("jacobi-{}{}", regime.name(), if proportional.is_some() { "-proportional" } else { "" });
    if let Some(pr) = proportional {
        let close = |m: u64, tau: f64| (m as f64 - tau * pr.n as f64).abs() <= 1.0;
        if !(pr.tau1 > 0.0 && pr.tau2 > 0.0 && close(n1, pr.tau1) && close(n2, pr.tau2)) {
            return Err(Error::UnsupportedRegime(format!(
                "{label}: n1={n1}, n2={n2} are not floor(tau n) for n={}, tau=({}, {})",
                pr.n, pr.tau1, pr.tau2
            )));
        }
    }
    match regime {
        Regime::FixedP { p: q } => {
            let Some(pr) = proportional else {
                return Err(Error::UnsupportedRegime(
                    "jacobi with fixed p needs proportional growth of n1 and n2; otherwise no mod-phi limit".into(),
                ));
            };
            if q != p {
                return Err(Error::UnsupportedRegime(format!("{label}: p does not match")));
            }
            let pf = p as f64;
            let exponent = -beta * (pf - 1.0) * pf / 4.0 - pf / 2.0;
            let psi = LimitingFunctionSpec::one()
                .with(LimitTerm::Power { slope: 2.0 / (pr.tau1 * beta), exponent })
                .with(LimitTerm::Power { slope: 2.0 / ((pr.tau1 + pr.tau2) * beta), exponent: -exponent });
            Ok(ModPhiData {
                eta: LevyExponent::Stable2 { beta, tau1: pr.tau1, tau2: pr.tau2 },
                t_n: pf * pr.n as f64,
                mean_shift: 0.0,
                multiplier: pr.n as f64,
                psi_limit: psi,
                domain: ConvergenceDomain::ImaginaryAxis,
                regime_label: label,
                source: model,
            })
        }
        Regime::VanishingGap { .. } => Err(Error::UnsupportedRegime("jacobi sizes are integers; no vanishing gap".into())),
        _ => {
            let first = main_class(regime, model.blocks[0].params, &label)?;
            let data = gaussian(model, &[first, BlockClass::LargeGap], label)?;
            Ok(match proportional {
                Some(pr) => retune(data, (pr.n as f64).ln() * 2.0 / beta, 1.0),
                None => data,
            })
        }
    }
}

/// Package for any supported ensemble.
pub fn ensemble_modphi(e: &EnsembleSpec, regime: Regime) -> Result<ModPhiData> {
    use EnsembleKind::*;
    let label = format!("{}-{}", e.kind.name(), regime.name());
    let model = e.model()?;
    match e.kind {
        Jacobi => jacobi_modphi(e.beta, e.p, e.n1, e.n2, regime, None),
        Laguerre | Chiral | ParallelotopeGaussian | SimplexGaussian => package(model, regime, label),
        Ginibre => match regime {
            Regime::Full => package(model, regime, label),
            _ => Err(Error::UnsupportedRegime(format!("{label}: Ginibre matrices are square"))),
        },
        Bdg1 | Bdg2 | Bdg3 | Bdg4 => {
            let data = package(model, regime, label)?;
            if e.kind == Bdg1 && data.eta.is_gaussian() {
                Ok(retune(data, (0.5 * (e.n as f64 + 1.0) + 1.0).ln(), 0.5))
            } else {
                Ok(data)
            }
        }
        Gue | FixedTraceGue => {
            if regime != Regime::Full {
                return Err(Error::UnsupportedRegime(format!("{label}: only the full determinant is covered")));
            }
            let mut classes = vec![BlockClass::FixedGap, BlockClass::Exact];
            if model.blocks.len() == 3 {
                classes.push(BlockClass::LargeGap);
            }
            let data = gaussian(model, &classes, label)?;
            if e.kind == FixedTraceGue {
                let n = e.n as f64;
                let t = 0.5 * (n / 2.0).ln() - 0.5 * (1.0 + 4.0 / n - 2.0 / (n * n)).ln();
                if t > 0.0 {
                    return Ok(retune(data, t, 1.0));
                }
            }
            Ok(data)
        }
        ParallelotopeBeta | ParallelotopeSpherical | SimplexBeta | SimplexSpherical => match regime {
            Regime::FixedP { .. } => Err(Error::UnsupportedRegime(format!(
                "{label}: with p fixed the centred log-volume has a deterministic limit"
            ))),
            _ => {
                let first = main_class(regime, model.blocks[0].params, &label)?;
                gaussian(model, &[first], label)
            }
        },
        ParallelotopeBetaPrime | SimplexBetaPrime => Err(Error::UnsupportedRegime(format!(
            "{label}: the beta-prime log-volume carries p fixed-law summands; no mod-phi limit with the growth rates covered here"
        ))),
    }
}
