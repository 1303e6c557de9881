//! Pilot/data power split, training length for goodput, and monotonicity
//! checks of the optimal-regularization RLS curves.

use crate::asymptotics::{mse_rls_opt_lambda, sep_from_mse, Prediction};
use crate::error::{Error, Result};
use crate::system::{rho_eff_of_alpha, PowerConvention, SystemConfig};

/// Which case of the optimal-split formula applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphaBranch {
    /// `tau_d > 1`
    LongData,
    /// `tau_d = 1`
    Balanced,
    /// `tau_d < 1`
    ShortData,
}

impl AlphaBranch {
    pub fn as_str(self) -> &'static str {
        match self {
            AlphaBranch::LongData => "tau_d>1",
            AlphaBranch::Balanced => "tau_d=1",
            AlphaBranch::ShortData => "tau_d<1",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AllocationResult {
    pub alpha_star: f64,
    /// `(1 + ρτ) / (ρτ (1 - 1/τ_d))`; infinite when `τ_d = 1`.
    pub vartheta: f64,
    pub branch: AlphaBranch,
    pub rho_eff_at_star: f64,
    /// Set by [`optimize_goodput`].
    pub tau_p_star: Option<f64>,
}

/// Data power ratio maximizing the effective SNR under the energy-conserving
/// convention.
pub fn alpha_star(rho: f64, tau: f64, tau_d: f64) -> Result<AllocationResult> {
    if !(rho > 0.0 && rho.is_finite()) {
        return Err(Error::InvalidArgument(format!("rho must be > 0, got {rho}")));
    }
    if !(tau_d > 0.0) {
        return Err(Error::InvalidArgument(format!("tau_d must be > 0, got {tau_d}")));
    }
    if !(tau > 1.0 && tau > tau_d) {
        return Err(Error::InvalidArgument(format!(
            "need tau > 1 and tau > tau_d, got tau={tau}, tau_d={tau_d}"
        )));
    }
    let rt = rho * tau;
    let (alpha, vartheta, branch) = if (tau_d - 1.0).abs() <= 1e-12 {
        (0.5, f64::INFINITY, AlphaBranch::Balanced)
    } else {
        let v = (1.0 + rt) / (rt * (1.0 - 1.0 / tau_d));
        let s = (v * (v - 1.0)).sqrt();
        if tau_d > 1.0 {
            // v - s without cancellation
            (v / (v + s), v, AlphaBranch::LongData)
        } else {
            (v / (v - s), v, AlphaBranch::ShortData)
        }
    };
    Ok(AllocationResult {
        alpha_star: alpha,
        vartheta,
        branch,
        rho_eff_at_star: rho_eff_of_alpha(rho, tau, tau_d, alpha)?,
        tau_p_star: None,
    })
}

/// [`alpha_star`] for a configuration; only defined for the energy-conserving
/// convention.
pub fn alpha_star_for_config(cfg: &SystemConfig) -> Result<AllocationResult> {
    if cfg.power_convention != PowerConvention::EnergyConserving {
        return Err(Error::config(
            "power_convention",
            "the closed-form optimal split assumes the energy-conserving convention; \
             sweep alpha on a grid for the direct split",
        ));
    }
    let d = cfg.derive()?;
    alpha_star(cfg.rho, d.tau, d.tau_d)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GoodputPoint {
    pub t_p: usize,
    pub alpha: f64,
    pub prediction: Prediction,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GoodputResult {
    pub t_p_star: usize,
    pub allocation: AllocationResult,
    pub goodput: f64,
    pub grid: Vec<GoodputPoint>,
}

/// Grid search over integer pilot lengths `K, K + step, …, T - 1`, with the
/// power split at each point set by [`alpha_star`]. `predictor` maps a
/// configuration (energy-conserving, `alpha` filled in) to a prediction.
pub fn optimize_goodput<F>(base: &SystemConfig, step: usize, mut predictor: F) -> Result<GoodputResult>
where
    F: FnMut(&SystemConfig) -> Result<Prediction>,
{
    if step == 0 {
        return Err(Error::InvalidArgument("pilot-length step must be >= 1".into()));
    }
    if base.t <= base.k {
        return Err(Error::InvalidArgument(format!(
            "no pilot length fits: need k <= t_pilot < t, got k={}, t={}",
            base.k, base.t
        )));
    }
    let mut grid = Vec::new();
    let mut best: Option<(usize, AllocationResult, f64)> = None;
    for t_p in (base.k..base.t).step_by(step) {
        let mut cfg = SystemConfig {
            t_p,
            power_convention: PowerConvention::EnergyConserving,
            ..*base
        };
        let d0 = SystemConfig { alpha: 0.5, ..cfg }.derive()?;
        let mut alloc = alpha_star(cfg.rho, d0.tau, d0.tau_d)?;
        cfg.alpha = alloc.alpha_star;
        let pred = predictor(&cfg)?;
        grid.push(GoodputPoint {
            t_p,
            alpha: cfg.alpha,
            prediction: pred,
        });
        if best.as_ref().is_none_or(|b| pred.goodput > b.2) {
            alloc.tau_p_star = Some(d0.tau_p);
            best = Some((t_p, alloc, pred.goodput));
        }
    }
    let (t_p_star, allocation, goodput) =
        best.ok_or_else(|| Error::InvalidArgument("empty pilot-length grid".into()))?;
    Ok(GoodputResult {
        t_p_star,
        allocation,
        goodput,
        grid,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct MonotonicityReport {
    pub holds: bool,
    /// `mse[i] - mse[i+1]`; non-negative when the claim holds.
    pub mse_margins: Vec<f64>,
    pub sep_margins: Vec<f64>,
}

/// Checks that the optimal-regularization RLS MSE and SEP do not increase
/// along an increasing grid of effective SNRs.
pub fn verify_monotone_mse_sep(rho_eff_grid: &[f64], delta: f64, m: usize) -> MonotonicityReport {
    let mse: Vec<f64> = rho_eff_grid.iter().map(|&r| mse_rls_opt_lambda(r, delta)).collect();
    let sep: Vec<f64> = rho_eff_grid
        .iter()
        .zip(&mse)
        .map(|(&r, &e)| sep_from_mse(e, r, delta, m))
        .collect();
    let margins = |v: &[f64]| v.windows(2).map(|w| w[0] - w[1]).collect::<Vec<_>>();
    let mse_margins = margins(&mse);
    let sep_margins = margins(&sep);
    let increasing = rho_eff_grid.windows(2).all(|w| w[1] > w[0]);
    let holds = increasing && mse_margins.iter().chain(&sep_margins).all(|&m| m >= 0.0);
    MonotonicityReport {
        holds,
        mse_margins,
        sep_margins,
    }
}
