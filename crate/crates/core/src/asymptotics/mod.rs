//! Large-system predictions of MSE, SEP and goodput.
//!
//! LS and RLS have closed forms; Box-RLS is characterized by a scalar
//! max-min problem solved numerically in [`box_rls`].

pub mod box_rls;
pub mod rls;
pub mod tuning;

pub use box_rls::{box_mse, box_saddle_solve, box_sep, BoxObjective};
pub use rls::{
    lambda_star_rls, ls_mse, ls_sep, mse_rls_opt_lambda, rls_mse, rls_sep, rls_solution,
    rls_theta_star, sep_from_mse, upsilon,
};
pub use tuning::{lambda_star_numeric, lambda_t_star_numeric, t_star_numeric, TunedDecoder};

use crate::decoders::DecoderSpec;
use crate::error::{Error, Result};
use crate::system::{pam_energy, SystemConfig};

/// Scalars the predictors depend on.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    pub delta: f64,
    pub rho_d: f64,
    pub sigma_delta_sq: f64,
    pub sigma_hhat_sq: f64,
    pub m: usize,
    pub lambda: f64,
    pub t_box: f64,
}

impl ModelParams {
    pub fn from_config(cfg: &SystemConfig) -> Result<Self> {
        let d = cfg.derive()?;
        Ok(Self {
            delta: d.delta,
            rho_d: d.rho_d,
            sigma_delta_sq: d.sigma_delta_sq,
            sigma_hhat_sq: d.sigma_hhat_sq,
            m: cfg.m,
            lambda: cfg.lambda,
            t_box: cfg.t_box,
        })
    }

    pub fn energy(&self) -> f64 {
        pam_energy(self.m)
    }

    /// `sqrt(rho_d * sigma_hhat^2)`.
    pub fn xi(&self) -> f64 {
        (self.rho_d * self.sigma_hhat_sq).sqrt()
    }

    pub fn rho_eff(&self) -> f64 {
        crate::system::effective_snr(self.rho_d, self.sigma_delta_sq)
    }

    pub fn with_lambda(mut self, lambda: f64) -> Self {
        self.lambda = lambda;
        self
    }

    pub fn with_t_box(mut self, t_box: f64) -> Self {
        self.t_box = t_box;
        self
    }

    /// `(M - 1) / sqrt(E)`.
    pub fn max_symbol(&self) -> f64 {
        (self.m as f64 - 1.0) / self.energy().sqrt()
    }
}

/// Saddle point of a scalar problem together with the slicer normalization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalarSolution {
    pub theta_star: f64,
    pub beta_star: f64,
    pub b_norm: f64,
    /// RLS only.
    pub upsilon: Option<f64>,
    /// Box only: `D(theta*, beta*)`.
    pub objective: Option<f64>,
    /// Box only: `max(|dD/dtheta|, |dD/dbeta|)` by central differences.
    pub stationarity_residual: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Prediction {
    pub mse: f64,
    pub sep: f64,
    pub goodput: f64,
    pub solution: ScalarSolution,
}

/// `(1 - tau_p / tau)(1 - SEP)`.
pub fn goodput(tau_p: f64, tau: f64, sep: f64) -> f64 {
    (1.0 - tau_p / tau) * (1.0 - sep)
}

/// Asymptotic MSE/SEP/goodput for `decoder` under `cfg`. The `lambda` and
/// `t_box` fields of `cfg` are ignored in favour of those in `decoder`.
pub fn predict(cfg: &SystemConfig, decoder: &DecoderSpec) -> Result<Prediction> {
    let d = cfg.derive()?;
    let base = ModelParams::from_config(cfg)?;
    let (mse, sep, solution) = match *decoder {
        DecoderSpec::Ls => {
            if d.delta <= 1.0 {
                return Err(Error::Infeasible(format!(
                    "least squares needs delta > 1, got {}",
                    d.delta
                )));
            }
            let p = base.with_lambda(0.0);
            let sol = rls_solution(&p)?;
            let mse = rls_mse(sol.theta_star, &p);
            (mse, rls_sep(sol.theta_star, p.rho_d, p.sigma_hhat_sq, p.m), sol)
        }
        DecoderSpec::Rls { lambda } | DecoderSpec::BoxRls { lambda, .. } if lambda < 0.0 => {
            return Err(Error::InvalidArgument(format!("lambda must be >= 0, got {lambda}")));
        }
        DecoderSpec::Rls { lambda } => {
            let p = base.with_lambda(lambda);
            let sol = rls_solution(&p)?;
            let mse = rls_mse(sol.theta_star, &p);
            (mse, rls_sep(sol.theta_star, p.rho_d, p.sigma_hhat_sq, p.m), sol)
        }
        DecoderSpec::Lmmse => {
            let p = base.with_lambda(lambda_star_rls(d.rho_d, d.sigma_delta_sq));
            let sol = rls_solution(&p)?;
            let mse = rls_mse(sol.theta_star, &p);
            (mse, rls_sep(sol.theta_star, p.rho_d, p.sigma_hhat_sq, p.m), sol)
        }
        DecoderSpec::BoxRls { lambda, t } => {
            let p = base.with_lambda(lambda).with_t_box(t);
            let sol = box_saddle_solve(&p)?;
            let sep = box_sep(sol.theta_star, sol.b_norm, &p)?;
            (box_mse(sol.theta_star, &p), sep, sol)
        }
    };
    Ok(Prediction {
        mse,
        sep,
        goodput: goodput(d.tau_p, d.tau, sep),
        solution,
    })
}
