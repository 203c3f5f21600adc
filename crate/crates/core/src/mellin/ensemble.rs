//! Ensemble descriptors and their exact log-moment transforms.

use std::f64::consts::LN_2;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::lsum::LParams;
use super::model::MellinModel;
use crate::{Error, Result};

/// Supported matrix ensembles and random-polytope volume models.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EnsembleKind {
    Laguerre,
    Jacobi,
    Ginibre,
    Gue,
    FixedTraceGue,
    Chiral,
    Bdg1,
    Bdg2,
    Bdg3,
    Bdg4,
    ParallelotopeGaussian,
    ParallelotopeBeta,
    ParallelotopeBetaPrime,
    ParallelotopeSpherical,
    SimplexGaussian,
    SimplexBeta,
    SimplexBetaPrime,
    SimplexSpherical,
}

impl EnsembleKind {
    pub const ALL: [EnsembleKind; 18] = [
        Self::Laguerre,
        Self::Jacobi,
        Self::Ginibre,
        Self::Gue,
        Self::FixedTraceGue,
        Self::Chiral,
        Self::Bdg1,
        Self::Bdg2,
        Self::Bdg3,
        Self::Bdg4,
        Self::ParallelotopeGaussian,
        Self::ParallelotopeBeta,
        Self::ParallelotopeBetaPrime,
        Self::ParallelotopeSpherical,
        Self::SimplexGaussian,
        Self::SimplexBeta,
        Self::SimplexBetaPrime,
        Self::SimplexSpherical,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Laguerre => "laguerre",
            Self::Jacobi => "jacobi",
            Self::Ginibre => "ginibre",
            Self::Gue => "gue",
            Self::FixedTraceGue => "fixed-trace-gue",
            Self::Chiral => "chiral",
            Self::Bdg1 => "bdg1",
            Self::Bdg2 => "bdg2",
            Self::Bdg3 => "bdg3",
            Self::Bdg4 => "bdg4",
            Self::ParallelotopeGaussian => "parallelotope-gaussian",
            Self::ParallelotopeBeta => "parallelotope-beta",
            Self::ParallelotopeBetaPrime => "parallelotope-beta-prime",
            Self::ParallelotopeSpherical => "parallelotope-spherical",
            Self::SimplexGaussian => "simplex-gaussian",
            Self::SimplexBeta => "simplex-beta",
            Self::SimplexBetaPrime => "simplex-beta-prime",
            Self::SimplexSpherical => "simplex-spherical",
        }
    }

    pub fn is_volume(self) -> bool {
        matches!(
            self,
            Self::ParallelotopeGaussian
                | Self::ParallelotopeBeta
                | Self::ParallelotopeBetaPrime
                | Self::ParallelotopeSpherical
                | Self::SimplexGaussian
                | Self::SimplexBeta
                | Self::SimplexBetaPrime
                | Self::SimplexSpherical
        )
    }

    pub fn is_simplex(self) -> bool {
        matches!(self, Self::SimplexGaussian | Self::SimplexBeta | Self::SimplexBetaPrime | Self::SimplexSpherical)
    }

    pub fn is_bdg(self) -> bool {
        matches!(self, Self::Bdg1 | Self::Bdg2 | Self::Bdg3 | Self::Bdg4)
    }

    fn uses_nu(self) -> bool {
        matches!(
            self,
            Self::ParallelotopeBeta | Self::ParallelotopeBetaPrime | Self::SimplexBeta | Self::SimplexBetaPrime
        )
    }
}

impl fmt::Display for EnsembleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EnsembleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        Self::ALL
            .into_iter()
            .find(|k| k.name() == key)
            .ok_or_else(|| Error::UnsupportedKind(format!("unknown ensemble '{s}'")))
    }
}

/// One ensemble with its parameters.
///
/// Unused fields are ignored for a given kind. For the tenfold classes the
/// fields `beta` and `p` are derived from `n` by the constructors.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnsembleSpec {
    pub kind: EnsembleKind,
    pub beta: f64,
    pub n: u64,
    pub p: u64,
    pub n1: u64,
    pub n2: u64,
    pub nu: f64,
}

impl EnsembleSpec {
    fn base(kind: EnsembleKind, beta: f64, n: u64, p: u64) -> Self {
        Self { kind, beta, n, p, n1: 0, n2: 0, nu: 0.0 }
    }

    fn checked(self) -> Result<Self> {
        self.validate()?;
        Ok(self)
    }

    /// `p × p` β-Laguerre matrix with `n` degrees of freedom.
    pub fn laguerre(beta: f64, n: u64, p: u64) -> Result<Self> {
        Self::base(EnsembleKind::Laguerre, beta, n, p).checked()
    }

    pub fn jacobi(beta: f64, p: u64, n1: u64, n2: u64) -> Result<Self> {
        Self { n1, n2, ..Self::base(EnsembleKind::Jacobi, beta, n1 + n2, p) }.checked()
    }

    pub fn ginibre(beta: f64, n: u64) -> Result<Self> {
        Self::base(EnsembleKind::Ginibre, beta, n, n).checked()
    }

    /// `|det|` of an `n × n` GUE matrix.
    pub fn gue(n: u64) -> Result<Self> {
        Self::base(EnsembleKind::Gue, 2.0, n, n).checked()
    }

    /// `n^{n/2} |det|` of the fixed-trace GUE.
    pub fn fixed_trace_gue(n: u64) -> Result<Self> {
        Self::base(EnsembleKind::FixedTraceGue, 2.0, n, n).checked()
    }

    pub fn chiral(beta: f64, n: u64, p: u64) -> Result<Self> {
        Self::base(EnsembleKind::Chiral, beta, n, p).checked()
    }

    /// Bogoliubov–de Gennes class `class ∈ {1,2,3,4}` of size `n`.
    pub fn bdg(class: u8, n: u64) -> Result<Self> {
        let (kind, beta, p) = match class {
            1 => (EnsembleKind::Bdg1, 1.0, n),
            2 => {
                if n % 2 != 0 {
                    return Err(Error::UnsupportedParameter("class 2 needs n even".into()));
                }
                (EnsembleKind::Bdg2, 2.0, n / 2)
            }
            3 if n % 2 == 0 => (EnsembleKind::Bdg3, 4.0, n / 2),
            3 => (EnsembleKind::Bdg3, 2.0, (n - 1) / 2),
            4 => (EnsembleKind::Bdg4, 2.0, n),
            _ => return Err(Error::UnsupportedParameter(format!("no BdG class {class}"))),
        };
        Self::base(kind, beta, n, p).checked()
    }

    /// Volume of the parallelotope (or simplex) spanned by random points.
    /// `nu` is read for the Beta and Beta-prime models only.
    pub fn volume(kind: EnsembleKind, n: u64, p: u64, nu: f64) -> Result<Self> {
        if !kind.is_volume() {
            return Err(Error::UnsupportedKind(format!("{kind} is not a volume model")));
        }
        let nu = if kind.uses_nu() { nu } else { 0.0 };
        Self { nu, ..Self::base(kind, 1.0, n, p) }.checked()
    }

    /// Builds any kind from a flat parameter set, deriving what the kind
    /// fixes. Used by the command line.
    pub fn from_parts(kind: EnsembleKind, beta: f64, n: u64, p: Option<u64>, n1: u64, n2: u64, nu: f64) -> Result<Self> {
        use EnsembleKind::*;
        match kind {
            Laguerre => Self::laguerre(beta, n, p.unwrap_or(n)),
            Jacobi => Self::jacobi(beta, p.unwrap_or(n1.min(n2)), n1, n2),
            Ginibre => Self::ginibre(beta, n),
            Gue => Self::gue(n),
            FixedTraceGue => Self::fixed_trace_gue(n),
            Chiral => Self::chiral(beta, n, p.unwrap_or(n)),
            Bdg1 => Self::bdg(1, n),
            Bdg2 => Self::bdg(2, n),
            Bdg3 => Self::bdg(3, n),
            Bdg4 => Self::bdg(4, n),
            _ => Self::volume(kind, n, p.unwrap_or(n), nu),
        }
    }

    /// Parameter `μ` of the tenfold joint density `Π λ^{βμ} e^{−βλ²/2}`.
    pub fn tenfold_mu(&self) -> Option<f64> {
        use EnsembleKind::*;
        match self.kind {
            Chiral => Some((self.n - self.p) as f64 + 1.0 - 1.0 / self.beta),
            Bdg1 => Some(1.0),
            Bdg2 => Some(0.0),
            Bdg3 if self.beta == 4.0 => Some(0.25),
            Bdg3 => Some(1.25),
            Bdg4 => Some(1.0),
            _ => None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        use EnsembleKind::*;
        let bad = |msg: String| Err(Error::UnsupportedParameter(msg));
        if !(self.beta > 0.0 && self.beta.is_finite()) {
            return bad(format!("beta must be positive, got {}", self.beta));
        }
        match self.kind {
            Laguerre | Chiral => {
                if self.p == 0 || self.p > self.n {
                    return bad(format!("need 1 <= p <= n, got p={} n={}", self.p, self.n));
                }
                if self.kind == Chiral && ![1.0, 2.0, 4.0].contains(&self.beta) {
                    return bad(format!("chiral classes need beta in {{1,2,4}}, got {}", self.beta));
                }
            }
            Jacobi => {
                if self.p == 0 || self.p > self.n1.min(self.n2) {
                    return bad(format!("need 1 <= p <= min(n1,n2), got p={} n1={} n2={}", self.p, self.n1, self.n2));
                }
            }
            Ginibre | Gue | FixedTraceGue => {
                if self.n == 0 {
                    return bad("need n >= 1".into());
                }
                if self.kind != Ginibre && self.beta != 2.0 {
                    return bad("the Hermite determinant formulas are for beta = 2".into());
                }
            }
            Bdg1 | Bdg2 | Bdg3 | Bdg4 => {
                if self.p == 0 {
                    return bad(format!("{} is empty for n={}", self.kind, self.n));
                }
            }
            _ => {
                if self.p == 0 || self.p > self.n {
                    return bad(format!("need 1 <= p <= n, got p={} n={}", self.p, self.n));
                }
                if self.kind.uses_nu() && !(self.nu > 0.0 && self.nu.is_finite()) {
                    return bad(format!("nu must be positive, got {}", self.nu));
                }
                if self.kind == SimplexSpherical && self.n < 2 {
                    return bad("spherical simplex needs n >= 2".into());
                }
            }
        }
        Ok(())
    }

    /// Whether `kind` admits an independent-product sampler.
    pub fn samplable(&self) -> bool {
        use EnsembleKind::*;
        !matches!(self.kind, FixedTraceGue | SimplexBeta | SimplexBetaPrime | SimplexSpherical)
    }

    /// The structured log-moment transform.
    pub fn model(&self) -> Result<MellinModel> {
        use EnsembleKind::*;
        self.validate()?;
        let n = self.n as f64;
        let p = self.p as f64;
        let beta = self.beta;
        let lp = |p: u64, l: f64, alpha: f64| LParams::new(p, l, alpha);
        let model = match self.kind {
            Laguerre => MellinModel::new(p * LN_2).block(1.0, lp(self.p, n - p, beta / 2.0)?, 1.0),
            Jacobi => {
                let (n1, n2) = (self.n1 as f64, self.n2 as f64);
                MellinModel::new(0.0)
                    .block(1.0, lp(self.p, n1 - p, beta / 2.0)?, 1.0)
                    .block(-1.0, lp(self.p, n1 + n2 - p, beta / 2.0)?, 1.0)
            }
            Ginibre => MellinModel::new(0.5 * n * (2.0 / beta).ln()).block(1.0, lp(self.n, 0.0, beta / 2.0)?, 0.5),
            Gue => gue_blocks(self.n, MellinModel::new(0.5 * n * LN_2))?,
            FixedTraceGue => gue_blocks(self.n, MellinModel::new(0.5 * n * n.ln()))?.gamma(-1.0, 0.5 * n, 0.5 * n * n),
            Chiral | Bdg1 | Bdg2 | Bdg3 | Bdg4 => {
                let mu = self.tenfold_mu().expect("tenfold kind");
                let alpha = beta / 2.0;
                let v = alpha * mu + 0.5;
                MellinModel::new(0.5 * p * (2.0 / beta).ln()).block(1.0, lp(self.p, v / alpha - 1.0, alpha)?, 0.5)
            }
            ParallelotopeGaussian | SimplexGaussian => {
                let m = MellinModel::new(0.5 * p * LN_2).block(1.0, lp(self.p, n - p, 0.5)?, 0.5);
                if self.kind == SimplexGaussian {
                    MellinModel { slope: m.slope + 0.5 * (p + 1.0).ln(), ..m }
                } else {
                    m
                }
            }
            ParallelotopeBeta | ParallelotopeSpherical | SimplexBeta | SimplexSpherical => {
                let m = 0.5 * (n + self.nu);
                let base = MellinModel::new(0.0).block(1.0, lp(self.p, n - p, 0.5)?, 0.5).gamma(-p, 0.5, m);
                if self.kind.is_simplex() {
                    let big = 0.5 * (p * (n + self.nu - 2.0) + n + self.nu);
                    base.gamma(-1.0, 0.5, m).gamma(1.0, 0.5 * (p + 1.0), big).gamma(-1.0, 0.5 * p, big)
                } else {
                    base
                }
            }
            ParallelotopeBetaPrime | SimplexBetaPrime => {
                let h = 0.5 * self.nu;
                let base = MellinModel::new(0.0).block(1.0, lp(self.p, n - p, 0.5)?, 0.5).gamma(p, -0.5, h);
                if self.kind == SimplexBetaPrime {
                    let big = 0.5 * (p + 1.0) * self.nu;
                    base.gamma(1.0, -0.5, h).gamma(1.0, -0.5 * p, big).gamma(-1.0, -0.5 * (p + 1.0), big)
                } else {
                    base
                }
            }
        };
        Ok(model)
    }
}

/// `Π_{k=1}^n Γ((z+1)/2 + ⌊k/2⌋)/Γ(½ + ⌊k/2⌋)` as `L` blocks at `z/2`.
fn gue_blocks(n: u64, model: MellinModel) -> Result<MellinModel> {
    let m = (n - 1) / 2 + 1;
    let mut model = model
        .block(2.0, LParams::new(m, -0.5, 1.0)?, 0.5)
        .block(-1.0, LParams::new(1, -0.5, 1.0)?, 0.5);
    if n % 2 == 0 {
        model = model.block(1.0, LParams::new(1, n as f64 / 2.0 - 0.5, 1.0)?, 0.5);
    }
    Ok(model)
}
