//! Flat `key = value` experiment configs, sweep orchestration and CSV output.

use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use crate::asymptotics::{
    lambda_star_numeric, lambda_star_rls, lambda_t_star_numeric, predict, t_star_numeric, ModelParams, Prediction, TunedDecoder,
};
use crate::decoders::DecoderSpec;
use crate::error::{Error, Result};
use crate::optimizer::{alpha_star_for_config, optimize_goodput};
use crate::sim::{ExecutionMode, TrialPlan, DEFAULT_TRIALS};
use crate::system::{db_to_linear, linear_to_db, PowerConvention, SystemConfig};

/// Shipped configurations, by name.
pub const PRESETS: &[(&str, &str)] = &[
    ("fig2", include_str!("../presets/fig2.cfg")),
    ("fig4", include_str!("../presets/fig4.cfg")),
    ("fig5", include_str!("../presets/fig5.cfg")),
    ("fig6", include_str!("../presets/fig6.cfg")),
    ("prop1", include_str!("../presets/prop1.cfg")),
];

pub fn preset(name: &str) -> Option<&'static str> {
    PRESETS.iter().find(|(n, _)| *n == name).map(|(_, text)| *text)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepAxis {
    RhoDb,
    Alpha,
    Lambda,
    TBox,
    TauP,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecoderKind {
    Ls,
    Rls,
    Box,
    Lmmse,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LambdaPolicy {
    Fixed,
    ClosedFormOptimal,
    NumericOptimal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TPolicy {
    Fixed,
    MaxSymbol,
    NumericOptimal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Predict,
    Simulate,
    Compare,
    OptimizePower,
    OptimizeGoodput,
}

macro_rules! keyword_enum {
    ($ty:ty { $($variant:path => $name:literal),+ $(,)? }) => {
        impl $ty {
            pub fn as_str(self) -> &'static str {
                match self { $($variant => $name),+ }
            }

            pub fn parse(s: &str) -> Option<Self> {
                match s.trim() { $($name => Some($variant),)+ _ => None }
            }
        }
    };
}

keyword_enum!(SweepAxis {
    SweepAxis::RhoDb => "rho_db",
    SweepAxis::Alpha => "alpha",
    SweepAxis::Lambda => "lambda",
    SweepAxis::TBox => "t_box",
    SweepAxis::TauP => "tau_p",
});
keyword_enum!(DecoderKind {
    DecoderKind::Ls => "ls",
    DecoderKind::Rls => "rls",
    DecoderKind::Box => "box",
    DecoderKind::Lmmse => "lmmse",
});
keyword_enum!(LambdaPolicy {
    LambdaPolicy::Fixed => "fixed",
    LambdaPolicy::ClosedFormOptimal => "closed_form",
    LambdaPolicy::NumericOptimal => "numeric",
});
keyword_enum!(TPolicy {
    TPolicy::Fixed => "fixed",
    TPolicy::MaxSymbol => "max_symbol",
    TPolicy::NumericOptimal => "numeric",
});
keyword_enum!(Mode {
    Mode::Predict => "predict",
    Mode::Simulate => "simulate",
    Mode::Compare => "compare",
    Mode::OptimizePower => "optimize_power",
    Mode::OptimizeGoodput => "optimize_goodput",
});

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub base: SystemConfig,
    pub sweep_axis: SweepAxis,
    pub values: Vec<f64>,
    pub decoders: Vec<DecoderKind>,
    pub trials: usize,
    pub master_seed: u64,
    pub lambda_policy: LambdaPolicy,
    pub t_policy: TPolicy,
}

const KEYS: &[&str] = &[
    "k",
    "n",
    "t",
    "t_pilot",
    "rho",
    "alpha",
    "m",
    "lambda",
    "t_box",
    "power_convention",
    "sweep_axis",
    "values",
    "decoders",
    "trials",
    "master_seed",
    "lambda_policy",
    "t_policy",
];

fn parse_num<T: std::str::FromStr>(key: &'static str, v: &str) -> Result<T> {
    v.trim()
        .parse()
        .map_err(|_| Error::config(key, format!("cannot parse `{v}`")))
}

/// Parses a config text. Blank lines and lines starting with `#` are ignored.
pub fn parse_config(text: &str) -> Result<SweepSpec> {
    let mut seen: Vec<(&'static str, String)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| Error::Parse {
            line: i + 1,
            reason: format!("expected `key = value`, got `{line}`"),
        })?;
        let key = key.trim();
        let known = KEYS.iter().find(|k| **k == key).ok_or_else(|| Error::Parse {
            line: i + 1,
            reason: format!("unknown key `{key}`"),
        })?;
        if seen.iter().any(|(k, _)| k == known) {
            return Err(Error::Parse {
                line: i + 1,
                reason: format!("duplicate key `{key}`"),
            });
        }
        seen.push((known, value.trim().to_string()));
    }
    let get = |key: &str| seen.iter().find(|(k, _)| *k == key).map(|(_, v)| v.as_str());
    let required = |key: &'static str| get(key).ok_or_else(|| Error::config(key, "missing required key"));

    let k: usize = parse_num("k", required("k")?)?;
    let m: usize = get("m").map(|v| parse_num("m", v)).transpose()?.unwrap_or(2);
    let rho: f64 = get("rho").map(|v| parse_num("rho", v)).transpose()?.unwrap_or(1.0);
    let power_convention = match get("power_convention") {
        None => PowerConvention::EnergyConserving,
        Some(v) => PowerConvention::parse(v)
            .ok_or_else(|| Error::config("power_convention", format!("expected `energy` or `direct`, got `{v}`")))?,
    };
    let base = SystemConfig {
        k,
        n: parse_num("n", required("n")?)?,
        t: parse_num("t", required("t")?)?,
        t_p: parse_num("t_pilot", required("t_pilot")?)?,
        rho,
        alpha: get("alpha").map(|v| parse_num("alpha", v)).transpose()?.unwrap_or(0.5),
        m,
        lambda: get("lambda").map(|v| parse_num("lambda", v)).transpose()?.unwrap_or(1.0),
        t_box: match get("t_box") {
            Some(v) => parse_num("t_box", v)?,
            None => (m.max(2) as f64 - 1.0) / crate::system::pam_energy(m.max(2)).sqrt(),
        },
        power_convention,
    };
    base.validate()?;

    let sweep_axis = match get("sweep_axis") {
        None => SweepAxis::RhoDb,
        Some(v) => SweepAxis::parse(v).ok_or_else(|| Error::config("sweep_axis", format!("unknown axis `{v}`")))?,
    };
    let values = match get("values") {
        Some(v) => v
            .split(',')
            .map(|s| parse_num::<f64>("values", s))
            .collect::<Result<Vec<_>>>()?,
        None => vec![axis_value(&base, sweep_axis)],
    };
    if values.is_empty() || values.iter().any(|v| !v.is_finite()) {
        return Err(Error::config("values", "need at least one finite value"));
    }
    if values.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::config("values", "must be strictly increasing"));
    }
    let decoders = match get("decoders") {
        None => vec![DecoderKind::Rls],
        Some(v) => v
            .split(',')
            .map(|s| DecoderKind::parse(s).ok_or_else(|| Error::config("decoders", format!("unknown decoder `{}`", s.trim()))))
            .collect::<Result<Vec<_>>>()?,
    };
    if decoders.is_empty() {
        return Err(Error::config("decoders", "need at least one decoder"));
    }
    let lambda_policy = match get("lambda_policy") {
        None => LambdaPolicy::ClosedFormOptimal,
        Some(v) => LambdaPolicy::parse(v)
            .ok_or_else(|| Error::config("lambda_policy", format!("expected fixed, closed_form or numeric, got `{v}`")))?,
    };
    let t_policy = match get("t_policy") {
        None => TPolicy::MaxSymbol,
        Some(v) => TPolicy::parse(v)
            .ok_or_else(|| Error::config("t_policy", format!("expected fixed, max_symbol or numeric, got `{v}`")))?,
    };
    Ok(SweepSpec {
        base,
        sweep_axis,
        values,
        decoders,
        trials: get("trials").map(|v| parse_num("trials", v)).transpose()?.unwrap_or(DEFAULT_TRIALS),
        master_seed: get("master_seed").map(|v| parse_num("master_seed", v)).transpose()?.unwrap_or(0),
        lambda_policy,
        t_policy,
    })
}

pub fn load_config(path: impl AsRef<Path>) -> Result<SweepSpec> {
    parse_config(&std::fs::read_to_string(path)?)
}

fn fmt_list<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

/// Inverse of [`parse_config`].
pub fn write_config(spec: &SweepSpec) -> String {
    let b = &spec.base;
    let mut s = String::new();
    let _ = writeln!(s, "k = {}", b.k);
    let _ = writeln!(s, "n = {}", b.n);
    let _ = writeln!(s, "t = {}", b.t);
    let _ = writeln!(s, "t_pilot = {}", b.t_p);
    let _ = writeln!(s, "rho = {}", fmt_f64(b.rho));
    let _ = writeln!(s, "alpha = {}", b.alpha);
    let _ = writeln!(s, "m = {}", b.m);
    let _ = writeln!(s, "lambda = {}", fmt_f64(b.lambda));
    let _ = writeln!(s, "t_box = {}", b.t_box);
    let _ = writeln!(s, "power_convention = {}", b.power_convention.as_str());
    let _ = writeln!(s, "sweep_axis = {}", spec.sweep_axis.as_str());
    let _ = writeln!(s, "values = {}", fmt_list(spec.values.iter().map(|&v| fmt_f64(v))));
    let _ = writeln!(s, "decoders = {}", fmt_list(spec.decoders.iter().map(|d| d.as_str())));
    let _ = writeln!(s, "trials = {}", spec.trials);
    let _ = writeln!(s, "master_seed = {}", spec.master_seed);
    let _ = writeln!(s, "lambda_policy = {}", spec.lambda_policy.as_str());
    let _ = writeln!(s, "t_policy = {}", spec.t_policy.as_str());
    s
}

fn axis_value(cfg: &SystemConfig, axis: SweepAxis) -> f64 {
    match axis {
        SweepAxis::RhoDb => linear_to_db(cfg.rho),
        SweepAxis::Alpha => cfg.alpha,
        SweepAxis::Lambda => cfg.lambda,
        SweepAxis::TBox => cfg.t_box,
        SweepAxis::TauP => cfg.t_p as f64 / cfg.k as f64,
    }
}

/// `base` with the sweep axis set to `value`.
pub fn apply_axis(base: &SystemConfig, axis: SweepAxis, value: f64) -> Result<SystemConfig> {
    let mut cfg = *base;
    match axis {
        SweepAxis::RhoDb => cfg.rho = db_to_linear(value),
        SweepAxis::Alpha => cfg.alpha = value,
        SweepAxis::Lambda => cfg.lambda = value,
        SweepAxis::TBox => cfg.t_box = value,
        SweepAxis::TauP => cfg.t_p = (value * cfg.k as f64).round() as usize,
    }
    cfg.validate()?;
    Ok(cfg)
}

/// Resolves the regularization and threshold of `kind` at `cfg` under the
/// spec's policies. A sweep over `lambda` or `t_box` pins that parameter.
/// With both policies numeric the Box-RLS pair is optimized jointly;
/// otherwise a numeric threshold is optimized at the resolved regularization.
pub fn resolve_decoder(spec: &SweepSpec, cfg: &SystemConfig, kind: DecoderKind) -> Result<DecoderSpec> {
    let p = ModelParams::from_config(cfg)?;
    let lambda_policy = if spec.sweep_axis == SweepAxis::Lambda {
        LambdaPolicy::Fixed
    } else {
        spec.lambda_policy
    };
    let t_policy = if spec.sweep_axis == SweepAxis::TBox {
        TPolicy::Fixed
    } else {
        spec.t_policy
    };
    let lambda_for = |p: &ModelParams, tuned: TunedDecoder| -> Result<f64> {
        match lambda_policy {
            LambdaPolicy::Fixed => Ok(cfg.lambda),
            LambdaPolicy::ClosedFormOptimal => Ok(lambda_star_rls(p.rho_d, p.sigma_delta_sq)),
            LambdaPolicy::NumericOptimal => lambda_star_numeric(p, tuned),
        }
    };
    Ok(match kind {
        DecoderKind::Ls => DecoderSpec::Ls,
        DecoderKind::Lmmse => DecoderSpec::Lmmse,
        DecoderKind::Rls => DecoderSpec::Rls {
            lambda: lambda_for(&p, TunedDecoder::Rls)?,
        },
        DecoderKind::Box => {
            let (lambda, t) = match t_policy {
                TPolicy::Fixed => {
                    let q = p.with_t_box(cfg.t_box);
                    (lambda_for(&q, TunedDecoder::BoxRls)?, cfg.t_box)
                }
                TPolicy::MaxSymbol => {
                    let q = p.with_t_box(p.max_symbol());
                    (lambda_for(&q, TunedDecoder::BoxRls)?, p.max_symbol())
                }
                TPolicy::NumericOptimal if lambda_policy == LambdaPolicy::NumericOptimal => lambda_t_star_numeric(&p)?,
                TPolicy::NumericOptimal => {
                    let q = p.with_t_box(p.max_symbol());
                    let lambda = lambda_for(&q, TunedDecoder::BoxRls)?;
                    (lambda, t_star_numeric(&q.with_lambda(lambda))?)
                }
            };
            DecoderSpec::BoxRls { lambda, t }
        }
    })
}

/// One CSV row.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRecord {
    pub decoder: DecoderKind,
    pub cfg: SystemConfig,
    pub theta_star: Option<f64>,
    pub beta_star: Option<f64>,
    pub b_norm: Option<f64>,
    pub mse_theory: Option<f64>,
    pub sep_theory: Option<f64>,
    pub goodput_theory: Option<f64>,
    pub mse_sim: Option<f64>,
    pub ser_sim: Option<f64>,
    pub stderr_mse: Option<f64>,
    pub stderr_ser: Option<f64>,
    pub trials: usize,
    pub master_seed: u64,
    /// `pass` / `fail` in compare mode.
    pub gate: Option<bool>,
    pub error: Option<String>,
    /// The error, if any, was a solver failing to converge.
    pub non_converged: bool,
}

pub const CSV_HEADER: &[&str] = &[
    "decoder",
    "k",
    "n",
    "t",
    "t_pilot",
    "rho",
    "rho_db",
    "alpha",
    "m",
    "lambda",
    "t_box",
    "power_convention",
    "theta_star",
    "beta_star",
    "B",
    "mse_theory",
    "sep_theory",
    "goodput_theory",
    "mse_sim",
    "ser_sim",
    "stderr_mse",
    "stderr_ser",
    "trials",
    "master_seed",
    "gate",
    "error",
];

/// Shortest round-trip text; exponent form outside `[1e-4, 1e15)`.
pub fn fmt_f64(x: f64) -> String {
    let a = x.abs();
    if a == 0.0 || !a.is_finite() || (1e-4..1e15).contains(&a) {
        x.to_string()
    } else {
        format!("{x:e}")
    }
}

fn opt(v: Option<f64>) -> String {
    v.map(fmt_f64).unwrap_or_default()
}

impl SweepRecord {
    fn empty(decoder: DecoderKind, cfg: SystemConfig, trials: usize, master_seed: u64) -> Self {
        Self {
            decoder,
            cfg,
            theta_star: None,
            beta_star: None,
            b_norm: None,
            mse_theory: None,
            sep_theory: None,
            goodput_theory: None,
            mse_sim: None,
            ser_sim: None,
            stderr_mse: None,
            stderr_ser: None,
            trials,
            master_seed,
            gate: None,
            error: None,
            non_converged: false,
        }
    }

    fn record_error(&mut self, e: &Error) {
        self.error = Some(e.to_string());
        self.non_converged = e.is_non_convergence();
    }

    fn set_theory(&mut self, p: &Prediction) {
        self.theta_star = Some(p.solution.theta_star);
        self.beta_star = Some(p.solution.beta_star);
        self.b_norm = Some(p.solution.b_norm);
        self.mse_theory = Some(p.mse);
        self.sep_theory = Some(p.sep);
        self.goodput_theory = Some(p.goodput);
    }

    pub fn fields(&self) -> Vec<String> {
        let c = &self.cfg;
        vec![
            self.decoder.as_str().to_string(),
            c.k.to_string(),
            c.n.to_string(),
            c.t.to_string(),
            c.t_p.to_string(),
            fmt_f64(c.rho),
            fmt_f64(linear_to_db(c.rho)),
            fmt_f64(c.alpha),
            c.m.to_string(),
            fmt_f64(c.lambda),
            fmt_f64(c.t_box),
            c.power_convention.as_str().to_string(),
            opt(self.theta_star),
            opt(self.beta_star),
            opt(self.b_norm),
            opt(self.mse_theory),
            opt(self.sep_theory),
            opt(self.goodput_theory),
            opt(self.mse_sim),
            opt(self.ser_sim),
            opt(self.stderr_mse),
            opt(self.stderr_ser),
            self.trials.to_string(),
            self.master_seed.to_string(),
            match self.gate {
                Some(true) => "pass".into(),
                Some(false) => "fail".into(),
                None => String::new(),
            },
            self.error.clone().unwrap_or_default(),
        ]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunOutput {
    pub records: Vec<SweepRecord>,
    pub report: String,
    pub gate_failures: usize,
}

/// Errors that belong in a row rather than aborting the run.
fn row_error(e: &Error) -> bool {
    matches!(
        e,
        Error::NonConvergence { .. } | Error::Infeasible(_) | Error::Singular(_) | Error::DegenerateThreshold { .. }
    )
}

fn predict_row(spec: &SweepSpec, cfg: &SystemConfig, kind: DecoderKind, rec: &mut SweepRecord) -> Result<Option<DecoderSpec>> {
    let attempt = resolve_decoder(spec, cfg, kind).and_then(|d| predict(cfg, &d).map(|p| (d, p)));
    match attempt {
        Ok((d, p)) => {
            rec.cfg.lambda = d.lambda().unwrap_or_else(|| {
                let q = ModelParams::from_config(cfg).expect("validated");
                lambda_star_rls(q.rho_d, q.sigma_delta_sq)
            });
            if let Some(t) = d.t_box() {
                rec.cfg.t_box = t;
            }
            rec.set_theory(&p);
            Ok(Some(d))
        }
        Err(e) if row_error(&e) => {
            rec.record_error(&e);
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

/// Runs `spec` in `mode`. `mode_exec` picks sequential or parallel trials.
pub fn run(spec: &SweepSpec, mode: Mode, exec: ExecutionMode) -> Result<RunOutput> {
    let mut records = Vec::new();
    let mut report = String::new();
    let mut gate_failures = 0;
    let _ = writeln!(report, "mode: {}", mode.as_str());

    match mode {
        Mode::Predict | Mode::Simulate | Mode::Compare => {
            let simulate = mode != Mode::Predict && spec.trials > 0;
            for &v in &spec.values {
                let cfg = apply_axis(&spec.base, spec.sweep_axis, v)?;
                for &kind in &spec.decoders {
                    let mut rec = SweepRecord::empty(kind, cfg, if simulate { spec.trials } else { 0 }, spec.master_seed);
                    let resolved = predict_row(spec, &cfg, kind, &mut rec)?;
                    if simulate {
                        let d = match resolved {
                            Some(d) => Some(d),
                            None => resolve_decoder(spec, &cfg, kind).ok(),
                        };
                        if let Some(d) = d {
                            match TrialPlan::new(&cfg, d, spec.master_seed).and_then(|p| p.run_batch(spec.trials, exec)) {
                                Ok(s) => {
                                    rec.mse_sim = Some(s.mean_mse);
                                    rec.ser_sim = Some(s.mean_ser);
                                    rec.stderr_mse = Some(s.stderr_mse);
                                    rec.stderr_ser = Some(s.stderr_ser);
                                }
                                Err(e) if row_error(&e) => {
                                    if rec.error.is_none() {
                                        rec.record_error(&e);
                                    }
                                }
                                Err(e) => return Err(e),
                            }
                        }
                    }
                    if mode == Mode::Compare {
                        let pass = match (rec.mse_sim, rec.mse_theory, rec.stderr_mse) {
                            (Some(sim), Some(th), Some(se)) => (sim - th).abs() <= 3.0 * se,
                            _ => false,
                        };
                        rec.gate = Some(pass);
                        if !pass {
                            gate_failures += 1;
                            let _ = writeln!(
                                report,
                                "FLAG {}={} {}: mse_sim={} mse_theory={} stderr={}",
                                spec.sweep_axis.as_str(),
                                v,
                                kind.as_str(),
                                opt(rec.mse_sim),
                                opt(rec.mse_theory),
                                opt(rec.stderr_mse)
                            );
                        }
                    }
                    records.push(rec);
                }
            }
            if mode == Mode::Compare {
                let _ = writeln!(
                    report,
                    "{} of {} points within 3 standard errors",
                    records.len() - gate_failures,
                    records.len()
                );
            }
        }
        Mode::OptimizePower => {
            // sweeping alpha is meaningless when alpha is being optimized
            let values = if spec.sweep_axis == SweepAxis::Alpha {
                vec![spec.base.alpha]
            } else {
                spec.values.clone()
            };
            for v in values {
                let mut cfg = apply_axis(&spec.base, spec.sweep_axis, v)?;
                let alloc = alpha_star_for_config(&cfg)?;
                cfg.alpha = alloc.alpha_star;
                let _ = writeln!(
                    report,
                    "rho_db={} alpha_star={} vartheta={} branch={} rho_eff={}",
                    linear_to_db(cfg.rho),
                    alloc.alpha_star,
                    alloc.vartheta,
                    alloc.branch.as_str(),
                    alloc.rho_eff_at_star
                );
                for &kind in &spec.decoders {
                    if kind == DecoderKind::Box {
                        let _ = writeln!(report, "  box: split chosen by maximizing rho_eff (conjectured optimal)");
                    }
                    let mut rec = SweepRecord::empty(kind, cfg, 0, spec.master_seed);
                    predict_row(spec, &cfg, kind, &mut rec)?;
                    records.push(rec);
                }
            }
        }
        Mode::OptimizeGoodput => {
            if spec.base.power_convention != PowerConvention::EnergyConserving {
                let _ = writeln!(report, "note: goodput search uses the energy-conserving power split");
            }
            for &v in &spec.values {
                let cfg = apply_axis(&spec.base, spec.sweep_axis, v)?;
                for &kind in &spec.decoders {
                    let found = optimize_goodput(&cfg, 1, |c| {
                        let d = resolve_decoder(spec, c, kind)?;
                        predict(c, &d)
                    });
                    let mut rec = SweepRecord::empty(kind, cfg, 0, spec.master_seed);
                    match found {
                        Ok(g) => {
                            rec.cfg.t_p = g.t_p_star;
                            rec.cfg.alpha = g.allocation.alpha_star;
                            rec.cfg.power_convention = PowerConvention::EnergyConserving;
                            let _ = writeln!(
                                report,
                                "rho_db={} {}: t_pilot_star={} (k={}) alpha_star={} goodput={}{}",
                                linear_to_db(cfg.rho),
                                kind.as_str(),
                                g.t_p_star,
                                cfg.k,
                                g.allocation.alpha_star,
                                g.goodput,
                                if kind == DecoderKind::Box { " (conjecture-based split)" } else { "" }
                            );
                            let best = rec.cfg;
                            predict_row(spec, &best, kind, &mut rec)?;
                        }
                        Err(e) if row_error(&e) => rec.record_error(&e),
                        Err(e) => return Err(e),
                    }
                    records.push(rec);
                }
            }
        }
    }
    Ok(RunOutput {
        records,
        report,
        gate_failures,
    })
}

/// Writes the header and one row per record, LF-terminated.
pub fn write_csv<W: Write>(records: &[SweepRecord], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        w.write_record(r.fields())?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_csv_file(records: &[SweepRecord], path: impl AsRef<Path>) -> Result<()> {
    write_csv(records, std::fs::File::create(path)?)
}
