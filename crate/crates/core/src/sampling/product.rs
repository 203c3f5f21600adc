//! Independent-product representations read off a [`MellinModel`].
//!
//! A factor `Γ(a + s z)/Γ(a)` is the Mellin transform of `G^s` with
//! `G ~ Gamma(a)`, and `Γ(a + s z)Γ(b)/(Γ(a)Γ(b + s z))` that of `B^s` with
//! `B ~ Beta(a, b − a)`. Netting equal factors and pairing each remaining
//! denominator with a smaller numerator shape turns the model into a sum of
//! scaled log-Gamma and log-Beta variables.

use std::collections::BTreeMap;

use rand::Rng;
use rand_distr::{Distribution, Gamma};

use crate::mellin::{LParams, MellinModel};
use crate::specfun::cmath::sum_real;
use crate::{Error, Result};

#[derive(Debug, Clone)]
enum Factor {
    /// `coef · log G`, `G ~ Gamma(shape)`.
    LogGamma { coef: f64, g: LogGammaSampler },
    /// `coef · log B`, `B ~ Beta(a, b)`.
    LogBeta { coef: f64, a: LogGammaSampler, b: LogGammaSampler },
}

/// Draws `log G` for `G ~ Gamma(shape, 1)`. Shapes below 1 use
/// `G = G' U^{1/shape}` with `G' ~ Gamma(shape + 1)`, kept in log form.
#[derive(Debug, Clone)]
struct LogGammaSampler {
    shape: f64,
    dist: Gamma<f64>,
}

impl LogGammaSampler {
    fn new(shape: f64) -> Result<Self> {
        let boosted = if shape < 1.0 { shape + 1.0 } else { shape };
        let dist = Gamma::new(boosted, 1.0).map_err(|e| Error::Domain(format!("gamma shape {shape}: {e}")))?;
        Ok(Self { shape, dist })
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let g = self.dist.sample(rng).ln();
        if self.shape < 1.0 {
            let u: f64 = 1.0 - rng.random::<f64>();
            g + u.ln() / self.shape
        } else {
            g
        }
    }
}

fn log_add_exp(a: f64, b: f64) -> f64 {
    let (hi, lo) = if a > b { (a, b) } else { (b, a) };
    hi + (lo - hi).exp().ln_1p()
}

/// The log statistic as `offset + Σ factors`.
#[derive(Debug, Clone)]
pub struct ProductPlan {
    offset: f64,
    factors: Vec<Factor>,
}

impl ProductPlan {
    pub fn from_model(model: &MellinModel) -> Result<Self> {
        // scale -> shape -> net multiplicity
        let mut net: BTreeMap<u64, BTreeMap<u64, i64>> = BTreeMap::new();
        let mut push = |weight: f64, scale: f64, shape: f64| -> Result<()> {
            if weight.fract() != 0.0 {
                return Err(Error::UnsupportedKind(format!("non-integer multiplicity {weight} has no product form")));
            }
            *net.entry(scale.to_bits()).or_default().entry(shape.to_bits()).or_default() += weight as i64;
            Ok(())
        };
        for b in &model.blocks {
            let LParams { p, l, alpha } = b.params;
            for k in 1..=p {
                push(b.weight, b.scale, alpha * (k as f64 + l))?;
            }
        }
        for g in &model.extras {
            if g.a != 0.0 && g.weight != 0.0 {
                push(g.weight, g.a, g.b)?;
            }
        }

        let mut factors = Vec::new();
        for (scale_bits, shapes) in net {
            let coef = f64::from_bits(scale_bits);
            let mut pos: Vec<f64> = Vec::new();
            let mut neg: Vec<f64> = Vec::new();
            for (shape_bits, m) in shapes {
                let shape = f64::from_bits(shape_bits);
                let list = if m > 0 { &mut pos } else { &mut neg };
                list.extend(std::iter::repeat_n(shape, m.unsigned_abs() as usize));
            }
            pos.sort_by(f64::total_cmp);
            neg.sort_by(|a, b| b.total_cmp(a));
            for b in neg {
                let i = pos.partition_point(|&a| a < b);
                if i == 0 {
                    return Err(Error::UnsupportedKind(format!(
                        "denominator shape {b} has no smaller numerator partner; no product form"
                    )));
                }
                let a = pos.remove(i - 1);
                factors.push(Factor::LogBeta { coef, a: LogGammaSampler::new(a)?, b: LogGammaSampler::new(b - a)? });
            }
            for a in pos {
                factors.push(Factor::LogGamma { coef, g: LogGammaSampler::new(a)? });
            }
        }
        Ok(Self { offset: model.slope, factors })
    }

    /// Number of independent factors per draw.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// One draw of the log statistic.
    pub fn draw<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let terms = self.factors.iter().map(|f| match f {
            Factor::LogGamma { coef, g } => coef * g.sample(rng),
            Factor::LogBeta { coef, a, b } => {
                let la = a.sample(rng);
                let lb = b.sample(rng);
                coef * (la - log_add_exp(la, lb))
            }
        });
        sum_real(std::iter::once(self.offset).chain(terms))
    }
}
