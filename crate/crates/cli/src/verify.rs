//! Named check suites. Each check compares a library result with a value
//! known in closed form.

use std::f64::consts::{LN_2, PI};

use gammadet::expansion::{expansion_terms, laguerre_modphi, phi_alpha, LevyExponent, LimitingFunctionSpec, Regime};
use gammadet::mellin::{cumulant, l_eval, l_exact, log_mgf, EnsembleSpec, LParams};
use gammadet::modphi::{
    extended_clt_tail, gaussian_be_constant, ldp_rate, legendre_fenchel, precise_deviation, LdpRegime, SOLVER_TOL,
};
use gammadet::sampling::{cf_invert_cdf, sample_log_statistic};
use gammadet::specfun::exp_level_diff;
use gammadet::{Complex, Error, QuadratureSpec, Result};
use serde::Serialize;
use serde_json::{json, Value};

const EULER: f64 = 0.577_215_664_901_532_9;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

type Probe = fn() -> Result<(f64, f64)>;

fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

fn q() -> QuadratureSpec {
    QuadratureSpec::default()
}

fn exp_law() -> Result<EnsembleSpec> {
    EnsembleSpec::laguerre(2.0, 1, 1)
}

/// `(error, tolerance)` pairs per suite.
fn probes(suite: &str) -> Vec<(&'static str, Probe)> {
    match suite {
        "mellin" => vec![
            ("log E[det] of a 1x1 complex Wishart is log 2", || {
                Ok(((log_mgf(&exp_law()?, c(1.0, 0.0))? - c(LN_2, 0.0)).norm(), 1e-14))
            }),
            ("mean of log chi-square(1) is -gamma - log 2", || {
                let e = EnsembleSpec::laguerre(1.0, 1, 1)?;
                Ok(((cumulant(&e, 1)? + EULER + LN_2).abs(), 1e-12))
            }),
            ("1x1 GUE has E X^2 = 1", || Ok((log_mgf(&EnsembleSpec::gue(1)?, c(2.0, 0.0))?.norm(), 1e-13))),
            ("large-p route matches the direct sum", || {
                let p = LParams::new(3000, 1.5, 1.0)?;
                let z = c(0.8, 1.2);
                Ok((exp_level_diff(l_eval(p, z, &q())?, l_exact(p, z)?), 1e-8))
            }),
        ],
        "expansion" => vec![
            ("decomposition identity at p=20, l=3", || {
                let p = LParams::new(20, 3.0, 1.0)?;
                let z = c(0.7, 0.0);
                Ok((exp_level_diff(expansion_terms(p, z, &q())?.total(), l_exact(p, z)?), 1e-8))
            }),
            ("phi_1(1) = log(2 pi)/2", || {
                Ok(((phi_alpha(1.0, c(1.0, 0.0), &q())? - c(0.5 * (2.0 * PI).ln(), 0.0)).norm(), 1e-10))
            }),
            ("t_n of full Laguerre is log n", || Ok(((laguerre_modphi(2.0, 100, Regime::Full)?.t_n - 100f64.ln()).abs(), 1e-12))),
        ],
        "modphi" => vec![
            ("gaussian conjugate F(0.5) = 0.125", || {
                let r = legendre_fenchel(&LevyExponent::gaussian(), 0.5, SOLVER_TOL)?;
                Ok(((r.f - 0.125).abs().max((r.h - 0.5).abs()), 1e-14))
            }),
            ("stable rate vanishes at its mean", || Ok((ldp_rate(LdpRegime::FixedP { beta: 2.0 }, LN_2 + 1.0)?.abs(), 1e-14))),
            ("clt tail at y = 1", || {
                let m = laguerre_modphi(2.0, 1000, Regime::Full)?;
                Ok(((extended_clt_tail(&m, 1.0)?.probability - 0.158_655_253_931_457_05).abs(), 1e-15))
            }),
            ("precise deviation with psi = 1, t = 9.2103, x = 1", || {
                let mut m = laguerre_modphi(2.0, 100, Regime::Full)?;
                m.psi_limit = LimitingFunctionSpec::one();
                m.t_n = 9.2103;
                let want = (-0.5 * 9.2103f64).exp() / (2.0 * PI * 9.2103f64).sqrt();
                Ok(((precise_deviation(&m, 1.0, &q())?.probability - want).abs(), 1e-15))
            }),
            ("berry-esseen constant at v = D = 1", || {
                let want = 3.0 / (2.0 * PI) * (PI.sqrt() + 7.0 * (PI / 2.0).sqrt());
                Ok(((gaussian_be_constant(1.0, 1.0)? - want).abs(), 1e-13))
            }),
        ],
        "sampling" => vec![
            ("cf inversion of the exponential law at log 2", || {
                Ok(((cf_invert_cdf(&exp_law()?, LN_2, &q())? - (1.0 - (-1f64).exp())).abs(), 1e-7))
            }),
            ("monte carlo mean within 4 standard errors", || {
                let b = sample_log_statistic(&exp_law()?, 100_000, 1)?;
                Ok(((b.mean() - (LN_2 - EULER)).abs(), 4.0 * (PI * PI / 6.0 / 1e5).sqrt()))
            }),
            ("batches are reproducible", || {
                let e = EnsembleSpec::jacobi(2.0, 3, 4, 5)?;
                let same = sample_log_statistic(&e, 1000, 9)?.values == sample_log_statistic(&e, 1000, 9)?.values;
                Ok((if same { 0.0 } else { 1.0 }, 0.5))
            }),
        ],
        _ => vec![],
    }
}

pub const SUITES: [&str; 4] = ["mellin", "expansion", "modphi", "sampling"];

pub fn checks(suite: &str) -> Result<Vec<Check>> {
    let names: Vec<&'static str> = match suite {
        "all" => SUITES.to_vec(),
        s => match SUITES.iter().find(|&&x| x == s) {
            Some(&x) => vec![x],
            None => return Err(Error::UnsupportedParameter(format!("unknown suite '{suite}'; try {SUITES:?} or all"))),
        },
    };
    let mut out = Vec::new();
    for s in names {
        for (name, probe) in probes(s) {
            let (pass, detail) = match probe() {
                Ok((err, tol)) => (err <= tol, format!("error {err:.3e} (tolerance {tol:.1e})")),
                Err(e) => (false, e.to_string()),
            };
            out.push(Check { suite: s, name, pass, detail });
        }
    }
    Ok(out)
}

pub fn run(suite: &str) -> Result<Value> {
    let rows = checks(suite)?;
    let passed = rows.iter().filter(|r| r.pass).count();
    Ok(json!({ "checks": rows, "passed": passed, "total": rows.len() }))
}

pub fn table(doc: &Value) -> String {
    let mut s = String::new();
    for r in doc["checks"].as_array().into_iter().flatten() {
        let mark = if r["pass"].as_bool() == Some(true) { "PASS" } else { "FAIL" };
        s.push_str(&format!(
            "{mark}  {:<10} {:<52} {}\n",
            r["suite"].as_str().unwrap_or(""),
            r["name"].as_str().unwrap_or(""),
            r["detail"].as_str().unwrap_or("")
        ));
    }
    s.push_str(&format!("{}/{} passed\n", doc["passed"], doc["total"]));
    s
}

pub fn all_passed(doc: &Value) -> bool {
    doc["passed"] == doc["total"]
}
