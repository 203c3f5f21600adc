use gammadet::expansion::{
    ensemble_modphi, expansion_terms, jacobi_modphi, ModPhiData, Proportional, Regime,
};
use gammadet::mellin::{cumulant, l_eval, log_mgf_with, EnsembleKind, EnsembleSpec, LParams};
use gammadet::modphi::{
    berry_esseen_bound, extended_clt_tail, llt_window, normal_cdf, precise_deviation, LltQuery, ZoneOfControl,
};
use gammadet::sampling::{sample_log_statistic, CfOracle, SampleBatch};
use gammadet::specfun::exp_level_diff;
use gammadet::{Complex, Error, QuadratureSpec, Result};
use serde_json::{json, Value};

use crate::args::*;

fn pair(z: Complex) -> Value {
    json!([z.re, z.im])
}

fn bad(msg: impl Into<String>) -> Error {
    Error::UnsupportedParameter(msg.into())
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("library types serialize")
}

/// Splits an optional `<ensemble>-` prefix off a regime name.
fn split_regime(s: &str) -> (Option<EnsembleKind>, &str) {
    let mut kinds = EnsembleKind::ALL.to_vec();
    kinds.sort_by_key(|k| std::cmp::Reverse(k.name().len()));
    for k in kinds {
        if let Some(rest) = s.strip_prefix(k.name()).and_then(|r| r.strip_prefix('-')) {
            if rest.parse::<Regime>().is_ok() {
                return (Some(k), rest);
            }
        }
    }
    (None, s)
}

fn kind_of(a: &EnsembleArgs, implied: Option<EnsembleKind>) -> Result<EnsembleKind> {
    let named = match a.ensemble.as_deref() {
        None => None,
        Some("bdg") => match a.variant {
            Some(v @ 1..=4) => Some(format!("bdg{v}").parse::<EnsembleKind>()?),
            Some(v) => return Err(bad(format!("--variant must be 1-4, got {v}"))),
            None => return Err(bad("--ensemble bdg needs --variant 1-4")),
        },
        Some(s) => Some(s.parse::<EnsembleKind>()?),
    };
    if a.variant.is_some() && a.ensemble.as_deref() != Some("bdg") {
        return Err(bad("--variant only applies to --ensemble bdg"));
    }
    match (named, implied) {
        (Some(k), Some(j)) if k != j => Err(bad(format!("--ensemble {} conflicts with regime prefix {}", k, j))),
        (Some(k), _) | (None, Some(k)) => Ok(k),
        (None, None) => Err(bad("--ensemble is required")),
    }
}

fn ensemble(a: &EnsembleArgs, implied: Option<EnsembleKind>) -> Result<EnsembleSpec> {
    let kind = kind_of(a, implied)?;
    let n = match (kind, a.n) {
        (_, Some(n)) => n,
        (EnsembleKind::Jacobi, None) => 0,
        (k, None) => return Err(bad(format!("--n is required for {k}"))),
    };
    EnsembleSpec::from_parts(kind, a.beta, n, a.p, a.n1, a.n2, a.nu)
}

fn modphi_data(a: &EnsembleArgs, r: &RegimeArgs) -> Result<(EnsembleSpec, ModPhiData)> {
    let (implied, name) = match r.regime.as_deref() {
        Some(s) => {
            let (k, rest) = split_regime(s);
            (k, Some(rest))
        }
        None => (None, None),
    };
    let e = ensemble(a, implied)?;
    let regime = match name {
        Some(n) => Regime::from_name(n, &e, r.gap)?,
        None => Regime::infer(&e)?,
    };
    let data = match (r.tau1, r.tau2) {
        (None, None) => ensemble_modphi(&e, regime)?,
        (Some(tau1), Some(tau2)) if e.kind == EnsembleKind::Jacobi => {
            let n = a.n.ok_or_else(|| bad("--tau1/--tau2 need the reference size --n"))?;
            jacobi_modphi(e.beta, e.p, e.n1, e.n2, regime, Some(Proportional { n, tau1, tau2 }))?
        }
        _ => return Err(bad("--tau1 and --tau2 go together and only with --ensemble jacobi")),
    };
    Ok((e, data))
}

fn zone(z: &ZoneArgs) -> Result<ZoneOfControl> {
    let d = ZoneOfControl::default();
    let zoc = ZoneOfControl {
        gamma: z.gamma.unwrap_or(d.gamma),
        v: z.v.unwrap_or(d.v),
        w: z.w.unwrap_or(d.w),
        d: z.d.unwrap_or(d.d),
        k1: z.k1.unwrap_or(d.k1),
        k2: z.k2.unwrap_or(d.k2),
        stable: d.stable,
    };
    zoc.validate()?;
    Ok(zoc)
}

fn quad(tol: Option<f64>) -> Result<QuadratureSpec> {
    let q = match tol {
        Some(t) => QuadratureSpec::default().with_abs_tol(t),
        None => QuadratureSpec::default(),
    };
    q.validate()?;
    Ok(q)
}

/// Runs a command to its JSON document.
pub fn run(cmd: &Command) -> Result<Value> {
    let body = match cmd {
        Command::Mellin(a) => mellin(a)?,
        Command::Expand(a) => expand(a)?,
        Command::Modphi(a) => modphi(a)?,
        Command::Deviation(a) => deviation(a)?,
        Command::BeBound(a) => be_bound(a)?,
        Command::Llt(a) => llt(a)?,
        Command::Sample(a) => sample_json(&sample(a)?),
        Command::Verify(a) => crate::verify::run(&a.suite)?,
    };
    let mut doc = json!({ "schema": 1, "config": to_value(cmd) });
    let map = doc.as_object_mut().unwrap();
    map.insert("command".into(), map["config"]["command"].clone());
    if let Value::Object(b) = body {
        map.extend(b);
    }
    Ok(doc)
}

fn mellin(a: &MellinArgs) -> Result<Value> {
    let e = ensemble(&a.ensemble, None)?;
    let q = quad(a.tol)?;
    let z = Complex::new(a.point.z_re, a.point.z_im);
    let v = log_mgf_with(&e, z, &q)?;
    Ok(json!({
        "ensemble": to_value(&e),
        "z": pair(z),
        "log_mgf": v.re,
        "log_mgf_im": v.im,
        "mean": cumulant(&e, 1)?,
        "variance": cumulant(&e, 2)?,
    }))
}

fn expand(a: &ExpandArgs) -> Result<Value> {
    if !(a.tol > 0.0) {
        return Err(bad(format!("--tol must be positive, got {}", a.tol)));
    }
    let params = LParams::new(a.p, a.l, a.alpha)?;
    let z = Complex::new(a.point.z_re, a.point.z_im);
    let q = QuadratureSpec::default();
    let t = expansion_terms(params, z, &q)?;
    let exact = l_eval(params, z, &q)?;
    let residual = exp_level_diff(t.total(), exact);
    if residual > a.tol {
        return Err(Error::IdentityMismatch { residual, bound: a.tol });
    }
    Ok(json!({
        "terms": {
            "t1": pair(t.t1), "t2": pair(t.t2), "t3": pair(t.t3), "t4": pair(t.t4), "t5": pair(t.t5),
            "r": pair(t.r), "r_bound": t.r_bound,
        },
        "total": pair(t.total()),
        "exact": pair(exact),
        "residual": residual,
    }))
}

fn modphi(a: &ModphiArgs) -> Result<Value> {
    let (e, m) = modphi_data(&a.ensemble, &a.regime)?;
    let q = QuadratureSpec::default();
    let z = Complex::new(a.point.z_re, a.point.z_im);
    Ok(json!({
        "ensemble": to_value(&e),
        "regime_label": m.regime_label,
        "t_n": m.t_n,
        "mean_shift": m.mean_shift,
        "multiplier": m.multiplier,
        "eta": to_value(&m.eta),
        "psi_kind": to_value(&m.psi_limit.kind()),
        "domain": to_value(&m.domain),
        "z": pair(z),
        "psi": pair(m.psi(z, &q)?),
        "psi_n": pair(m.psi_n(z, &q)?),
    }))
}

fn deviation(a: &DeviationArgs) -> Result<Value> {
    let (e, m) = modphi_data(&a.ensemble, &a.regime)?;
    let q = QuadratureSpec::default();
    let r = precise_deviation(&m, a.x, &q)?;
    let clt = if m.eta.is_gaussian() {
        to_value(&extended_clt_tail(&m, a.x * m.t_n.sqrt())?)
    } else {
        Value::Null
    };
    let mut out = to_value(&r);
    let map = out.as_object_mut().unwrap();
    map.insert("ensemble".into(), to_value(&e));
    map.insert("statistic_threshold".into(), json!(m.statistic(m.t_n * a.x)));
    map.insert("clt".into(), clt);
    Ok(out)
}

fn be_bound(a: &BeArgs) -> Result<Value> {
    let (e, m) = modphi_data(&a.ensemble, &a.regime)?;
    if !m.eta.is_gaussian() {
        return Err(Error::NonGaussianRegime);
    }
    let zoc = zone(&a.zone)?;
    let bound = berry_esseen_bound(&zoc, m.t_n)?;
    let exact = if a.exact {
        let o = CfOracle::new(&e, &QuadratureSpec::default())?;
        let s = m.t_n.sqrt();
        let mut worst: f64 = 0.0;
        for i in 0..200 {
            let y = -5.0 + 10.0 * (i as f64 + 0.5) / 200.0;
            worst = worst.max((o.cdf(m.statistic(y * s))? - normal_cdf(y)).abs());
        }
        json!(worst)
    } else {
        Value::Null
    };
    Ok(json!({
        "ensemble": to_value(&e),
        "regime_label": m.regime_label,
        "t_n": m.t_n,
        "zone": to_value(&zoc),
        "effective_gamma": zoc.effective_gamma(),
        "bound": bound,
        "exact_kolmogorov": exact,
    }))
}

fn llt(a: &LltArgs) -> Result<Value> {
    let (e, m) = modphi_data(&a.ensemble, &a.regime)?;
    let zoc = zone(&a.zone)?;
    let query = LltQuery { x: a.x, a: a.a, b: a.b, mu: a.mu };
    let predicted = llt_window(&m, &query, &zoc)?;
    let exact = if a.exact {
        let o = CfOracle::new(&e, &QuadratureSpec::default())?;
        let s = m.t_n.sqrt();
        let w = m.t_n.powf(-a.mu);
        let lo = m.statistic((a.x + a.a * w) * s);
        let hi = m.statistic((a.x + a.b * w) * s);
        json!(o.cdf(hi)? - o.cdf(lo)?)
    } else {
        Value::Null
    };
    Ok(json!({
        "ensemble": to_value(&e),
        "regime_label": m.regime_label,
        "t_n": m.t_n,
        "window": to_value(&query),
        "probability": predicted,
        "exact_probability": exact,
    }))
}

pub fn sample(a: &SampleArgs) -> Result<SampleBatch> {
    let e = ensemble(&a.ensemble, None)?;
    sample_log_statistic(&e, a.count, a.seed)
}

fn sample_json(b: &SampleBatch) -> Value {
    json!({
        "ensemble": to_value(&b.ensemble),
        "count": b.count,
        "seed": b.seed,
        "mean": b.mean(),
        "variance": b.variance(),
        "values": b.values,
    })
}
