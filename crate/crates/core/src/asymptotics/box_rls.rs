//! Scalar max-min characterization of the Box-RLS decoder.

use super::{rls::rls_mse, ModelParams, ScalarSolution};
use crate::error::{Error, Result};
use crate::search::{argmin, bisect, golden_section_max, golden_section_min, log_grid};
use crate::special::{gaussian_partial_second_moment, normal_pdf, q_function};

const THETA_GRID: usize = 121;
const BETA_GRID: usize = 41;
const ACCEPT_RESIDUAL: f64 = 1e-6;
const FAIL_RESIDUAL: f64 = 1e-4;

/// Per-symbol limits and weights of one `Ψ(θ, β; i)` term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsiTerms {
    pub ell: f64,
    pub mu: f64,
    pub c: f64,
    pub d: f64,
}

/// `D(θ, β)` for fixed model parameters.
#[derive(Debug, Clone)]
pub struct BoxObjective {
    delta: f64,
    rho_d: f64,
    xi: f64,
    lambda_rho_d: f64,
    t: f64,
    /// Normalized symbol values `i / sqrt(E)` for `i = ±1, ±3, …`.
    symbols: Vec<f64>,
}

impl BoxObjective {
    pub fn new(p: &ModelParams) -> Result<Self> {
        if !(p.t_box > 0.0) {
            return Err(Error::InvalidArgument(format!("box threshold must be > 0, got {}", p.t_box)));
        }
        if !(p.lambda >= 0.0) {
            return Err(Error::InvalidArgument(format!("lambda must be >= 0, got {}", p.lambda)));
        }
        if !(p.sigma_hhat_sq > 0.0) {
            return Err(Error::InvalidArgument("channel estimate carries no energy".into()));
        }
        let scale = p.energy().sqrt();
        let mi = p.m as i64;
        let symbols = (-(mi - 1)..=(mi - 1))
            .step_by(2)
            .map(|i| i as f64 / scale)
            .collect();
        Ok(Self {
            delta: p.delta,
            rho_d: p.rho_d,
            xi: p.xi(),
            lambda_rho_d: p.lambda * p.rho_d,
            t: p.t_box,
            symbols,
        })
    }

    pub fn symbols(&self) -> &[f64] {
        &self.symbols
    }

    pub fn terms(&self, theta: f64, beta: f64, s: f64) -> PsiTerms {
        let xi = self.xi;
        let r = xi / theta + 2.0 * self.lambda_rho_d / (xi * beta);
        let shift = xi * s / theta;
        let ell = -self.t * r - shift;
        let mu = self.t * r - shift;
        let bias = beta * xi * xi * s / (2.0 * theta);
        PsiTerms {
            ell,
            mu,
            c: -beta * xi * ell / 2.0 + bias,
            d: beta * xi * mu / 2.0 - bias,
        }
    }

    /// `Ψ(θ, β; i)` for the normalized symbol `s = i / sqrt(E)`.
    pub fn psi(&self, theta: f64, beta: f64, s: f64) -> f64 {
        let xi = self.xi;
        let PsiTerms { ell, mu, c, d } = self.terms(theta, beta, s);
        let weight = beta * beta / (2.0 * xi * xi * beta / theta + 4.0 * self.lambda_rho_d);
        let moment = gaussian_partial_second_moment(xi * xi * s / theta, xi, ell, mu)
            .expect("ell < mu whenever t, beta > 0");
        self.t * (c * q_function(-ell) + d * q_function(mu))
            - beta * xi * self.t * (normal_pdf(ell) + normal_pdf(mu))
            - weight * moment
    }

    fn eval(&self, theta: f64, beta: f64) -> f64 {
        let head = beta * self.delta * theta / 2.0 + beta * (1.0 + self.rho_d) / (2.0 * theta)
            - beta * beta / 4.0;
        let sum: f64 = self.symbols.iter().map(|&s| self.psi(theta, beta, s)).sum();
        head + sum / self.symbols.len() as f64
    }

    pub fn value(&self, theta: f64, beta: f64) -> Result<f64> {
        if !(theta > 0.0 && beta > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "objective needs theta > 0 and beta > 0, got theta={theta}, beta={beta}"
            )));
        }
        Ok(self.eval(theta, beta))
    }

    pub fn d_theta(&self, theta: f64, beta: f64) -> f64 {
        let h = fd_step(theta);
        (self.eval(theta + h, beta) - self.eval(theta - h, beta)) / (2.0 * h)
    }

    pub fn d_beta(&self, theta: f64, beta: f64) -> f64 {
        let h = fd_step(beta);
        (self.eval(theta, beta + h) - self.eval(theta, beta - h)) / (2.0 * h)
    }

    /// Natural scale of `θ*`: `sqrt((1 + ρ_d) / δ)`.
    fn theta_scale(&self) -> f64 {
        ((1.0 + self.rho_d) / self.delta).sqrt()
    }

    /// `argmin_θ D(θ, β)` and the minimum.
    pub fn inner_min(&self, beta: f64) -> Result<(f64, f64)> {
        let s = self.theta_scale();
        let (mut lo, mut hi) = (1e-3 * s, 1e3 * s);
        for _ in 0..4 {
            let grid = log_grid(lo, hi, THETA_GRID);
            let vals: Vec<f64> = grid.iter().map(|&th| self.eval(th, beta)).collect();
            let k = argmin(&vals).ok_or_else(|| Error::NonConvergence {
                what: "box inner minimization",
                detail: format!("objective is NaN on the whole theta grid at beta={beta}"),
            })?;
            if k == 0 {
                hi = lo * 10.0;
                lo *= 1e-4;
                continue;
            }
            if k == grid.len() - 1 {
                lo = hi / 10.0;
                hi *= 1e4;
                continue;
            }
            return Ok(self.refine_theta(beta, grid[k - 1], grid[k + 1]));
        }
        Err(Error::NonConvergence {
            what: "box inner minimization",
            detail: format!("no interior minimum in theta at beta={beta}"),
        })
    }

    fn refine_theta(&self, beta: f64, a: f64, b: f64) -> (f64, f64) {
        let (x, fx) = golden_section_min(|th| self.eval(th, beta), a, b, 1e-13 * b, 200);
        let (ga, gb) = (self.d_theta(a, beta), self.d_theta(b, beta));
        if ga < 0.0 && gb > 0.0 {
            let root = bisect(|th| self.d_theta(th, beta), a, b, 1e-14 * b, 200);
            let froot = self.eval(root, beta);
            let better = self.d_theta(root, beta).abs() < self.d_theta(x, beta).abs();
            if better && froot <= fx + 1e-12 * fx.abs().max(1.0) {
                return (root, froot);
            }
        }
        (x, fx)
    }

    /// `max_β min_θ D(θ, β)`.
    pub fn saddle(&self) -> Result<(f64, f64, f64)> {
        let s = self.theta_scale();
        let profile = |beta: f64| self.inner_min(beta).map(|r| r.1);
        let (mut lo, mut hi) = (1e-4 * s, 1e3 * s);
        let mut bracket = None;
        for _ in 0..4 {
            let grid = log_grid(lo, hi, BETA_GRID);
            let mut vals = Vec::with_capacity(grid.len());
            for &b in &grid {
                vals.push(-profile(b)?);
            }
            let k = argmin(&vals).ok_or_else(|| Error::NonConvergence {
                what: "box outer maximization",
                detail: "beta profile is NaN everywhere".into(),
            })?;
            if k == 0 {
                hi = lo * 10.0;
                lo *= 1e-4;
            } else if k == grid.len() - 1 {
                lo = hi / 10.0;
                hi *= 1e4;
            } else {
                bracket = Some((grid[k - 1], grid[k + 1]));
                break;
            }
        }
        let (a, b) = bracket.ok_or_else(|| Error::NonConvergence {
            what: "box outer maximization",
            detail: "could not bracket the maximum of the beta profile".into(),
        })?;

        let mut failure = None;
        let (mut beta, _) = golden_section_max(
            |b| match profile(b) {
                Ok(v) => v,
                Err(e) => {
                    failure.get_or_insert(e);
                    f64::NEG_INFINITY
                }
            },
            a,
            b,
            1e-13 * b,
            200,
        );
        if let Some(e) = failure {
            return Err(e);
        }
        // envelope theorem: d/dβ of the profile equals dD/dβ at θ(β)
        let slope = |b: f64| {
            self.inner_min(b)
                .map(|(th, _)| self.d_beta(th, b))
                .unwrap_or(f64::NAN)
        };
        let (sa, sb) = (slope(a), slope(b));
        if sa > 0.0 && sb < 0.0 {
            let root = bisect(|b| -slope(b), a, b, 1e-14 * b, 200);
            if slope(root).abs() < slope(beta).abs() {
                beta = root;
            }
        }
        let (theta, value) = self.inner_min(beta)?;
        Ok((theta, beta, value))
    }
}

fn fd_step(x: f64) -> f64 {
    let h = 1e-5 * x.abs().max(1.0);
    h.min(0.5 * x.abs())
}

/// Solves the Box-RLS scalar problem and returns `(θ*, β*)`, the slicer
/// normalization `B`, the saddle value and its stationarity residual.
pub fn box_saddle_solve(p: &ModelParams) -> Result<ScalarSolution> {
    let obj = BoxObjective::new(p)?;
    let (theta, beta, value) = obj.saddle()?;
    let residual = obj.d_theta(theta, beta).abs().max(obj.d_beta(theta, beta).abs());
    if !(residual <= FAIL_RESIDUAL) {
        return Err(Error::NonConvergence {
            what: "box saddle point",
            detail: format!(
                "stationarity residual {residual:.3e} at theta={theta}, beta={beta} \
                 (delta={}, rho_d={}, lambda={}, t={})",
                p.delta, p.rho_d, p.lambda, p.t_box
            ),
        });
    }
    if residual > ACCEPT_RESIDUAL {
        log::warn!("box saddle point stationarity residual {residual:.3e} exceeds {ACCEPT_RESIDUAL:e}");
    }
    let ratio = p.sigma_hhat_sq * beta / theta;
    Ok(ScalarSolution {
        theta_star: theta,
        beta_star: beta,
        b_norm: ratio / (ratio + 2.0 * p.lambda),
        upsilon: None,
        objective: Some(value),
        stationarity_residual: Some(residual),
    })
}

pub fn box_mse(theta: f64, p: &ModelParams) -> f64 {
    rls_mse(theta, p)
}

/// Asymptotic SEP of Box-RLS with slicer normalization `b_norm`.
///
/// Rejects `t / B` on `{i / sqrt(E) : i = 1, 3, …, M - 3}` (within 1e-9).
/// At and above `(M - 1) / sqrt(E)` the expression is the unboxed one.
pub fn box_sep(theta: f64, b_norm: f64, p: &ModelParams) -> Result<f64> {
    if !(b_norm > 0.0) {
        return Err(Error::InvalidArgument(format!("B must be > 0, got {b_norm}")));
    }
    let m = p.m;
    let mf = m as f64;
    let scale = p.energy().sqrt();
    let r = p.t_box / b_norm;
    for i in (1..m.saturating_sub(2)).step_by(2) {
        if (r - i as f64 / scale).abs() <= 1e-9 {
            return Err(Error::DegenerateThreshold { ratio: r });
        }
    }
    let qv = q_function(p.xi() / (scale * theta));
    let ind = |c: bool| if c { 1.0 } else { 0.0 };
    let mut sep = 0.0;
    for i in (1..m.saturating_sub(2)).step_by(2) {
        let lo = (i as f64 - 1.0) / scale;
        let hi = (i as f64 + 1.0) / scale;
        sep += 4.0 / mf * ind(r >= hi) * qv;
        sep += 2.0 / mf * (ind(lo <= r && r <= hi) * qv + ind(r <= lo));
    }
    let edge = (mf - 2.0) / scale;
    sep += 2.0 / mf * ind(r >= edge) * qv + 2.0 / mf * ind(r <= edge);
    Ok(sep)
}
