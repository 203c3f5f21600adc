//! Exact Monte Carlo of the log statistic through independent-product
//! representations, empirical statistics, and a characteristic-function
//! inversion oracle for exact distribution functions.

mod cf;
mod product;

pub use cf::{cf_invert_cdf, CfOracle, CACHED_RANGE, CF_CUTOFF};
pub use product::ProductPlan;

use std::io::Write;
use std::path::Path;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::mellin::EnsembleSpec;
use crate::specfun::cmath::sum_real;
use crate::{Error, Result};

/// Draws of the log statistic; draw `i` uses stream `i` of the seeded
/// generator, so batches do not depend on how work is split.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleBatch {
    pub ensemble: EnsembleSpec,
    pub count: usize,
    pub seed: u64,
    pub values: Vec<f64>,
}

/// Fraction of draws at or above a threshold with a 95% normal interval.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TailEstimate {
    pub p_hat: f64,
    pub half_width: f64,
    pub n_used: usize,
}

/// Summary written next to a CSV batch.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleManifest {
    pub schema: u32,
    pub ensemble: EnsembleSpec,
    pub count: usize,
    pub seed: u64,
    pub mean: f64,
    pub variance: f64,
    pub csv: String,
}

/// `count` independent draws of the log statistic of `e`.
pub fn sample_log_statistic(e: &EnsembleSpec, count: usize, seed: u64) -> Result<SampleBatch> {
    e.validate()?;
    if !e.samplable() {
        return Err(Error::UnsupportedKind(format!(
            "{} has no independent-product representation; use the CF oracle",
            e.kind
        )));
    }
    let plan = ProductPlan::from_model(&e.model()?)?;
    let values = (0..count)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i as u64);
            plan.draw(&mut rng)
        })
        .collect();
    Ok(SampleBatch { ensemble: *e, count, seed, values })
}

/// Two-sided Kolmogorov distance between the empirical law of `values`
/// and `cdf`.
pub fn ks_distance<F: Fn(f64) -> f64>(values: &[f64], cdf: F) -> Result<f64> {
    if values.is_empty() {
        return Err(Error::EmptyBatch);
    }
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let n = v.len() as f64;
    let mut d: f64 = 0.0;
    for (i, &x) in v.iter().enumerate() {
        let f = cdf(x);
        d = d.max((i + 1) as f64 / n - f).max(f - i as f64 / n);
    }
    Ok(d)
}

/// Fraction of `values` at or above `threshold`.
pub fn empirical_tail(values: &[f64], threshold: f64) -> Result<TailEstimate> {
    if values.is_empty() {
        return Err(Error::EmptyBatch);
    }
    let n = values.len();
    let hits = values.iter().filter(|&&x| x >= threshold).count();
    let p = hits as f64 / n as f64;
    Ok(TailEstimate { p_hat: p, half_width: 1.96 * (p * (1.0 - p) / n as f64).sqrt(), n_used: n })
}

/// Empirical distribution function of `values` at `x`.
pub fn empirical_cdf(values: &[f64], x: f64) -> Result<f64> {
    if values.is_empty() {
        return Err(Error::EmptyBatch);
    }
    Ok(values.iter().filter(|&&v| v <= x).count() as f64 / values.len() as f64)
}

impl SampleBatch {
    pub fn mean(&self) -> f64 {
        if self.values.is_empty() {
            return f64::NAN;
        }
        sum_real(self.values.iter().copied()) / self.values.len() as f64
    }

    /// Unbiased sample variance.
    pub fn variance(&self) -> f64 {
        let n = self.values.len();
        if n < 2 {
            return f64::NAN;
        }
        let m = self.mean();
        sum_real(self.values.iter().map(|x| (x - m) * (x - m))) / (n - 1) as f64
    }

    /// CSV with a comment header naming the ensemble, seed and count, then
    /// one value per line.
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        let e = &self.ensemble;
        writeln!(
            w,
            "# ensemble={} beta={} n={} p={} n1={} n2={} nu={} seed={} count={}",
            e.kind, e.beta, e.n, e.p, e.n1, e.n2, e.nu, self.seed, self.count
        )?;
        writeln!(w, "log_statistic")?;
        for v in &self.values {
            writeln!(w, "{v:.17e}")?;
        }
        Ok(())
    }

    pub fn manifest(&self, csv: &Path) -> SampleManifest {
        SampleManifest {
            schema: 1,
            ensemble: self.ensemble,
            count: self.count,
            seed: self.seed,
            mean: self.mean(),
            variance: self.variance(),
            csv: csv.display().to_string(),
        }
    }
}
