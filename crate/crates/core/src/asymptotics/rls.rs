//! Closed-form predictions for the LS and RLS decoders.

use super::{ModelParams, ScalarSolution};
use crate::error::{Error, Result};
use crate::special::q_function;
use crate::system::pam_energy;

/// Positive root `Υ(λ', δ)` of `δ Υ² + (δ - λ' - 1) Υ - λ' = 0`.
pub fn upsilon(lambda_prime: f64, delta: f64) -> f64 {
    let b = delta - lambda_prime - 1.0;
    let disc = (b * b + 4.0 * lambda_prime * delta).sqrt();
    if b > 0.0 {
        // avoids cancellation when lambda' is small
        2.0 * lambda_prime / (b + disc)
    } else {
        (-b + disc) / (2.0 * delta)
    }
}

/// `θ*` of the unboxed scalar problem.
pub fn rls_theta_star(
    rho_d: f64,
    sigma_hhat_sq: f64,
    sigma_delta_sq: f64,
    lambda: f64,
    delta: f64,
) -> Result<f64> {
    let ups = upsilon(lambda / sigma_hhat_sq, delta);
    let denom = delta - 1.0 / ((1.0 + ups) * (1.0 + ups));
    if !(denom > 0.0) {
        return Err(Error::Infeasible(format!(
            "delta - 1/(1+Upsilon)^2 = {denom} is not positive (lambda={lambda}, delta={delta})"
        )));
    }
    let kappa = ups / (1.0 + ups);
    let num = rho_d * sigma_hhat_sq * kappa * kappa + rho_d * sigma_delta_sq + 1.0;
    Ok((num / denom).sqrt())
}

/// `(θ*, β*, B = 1/(1+Υ), Υ)` for the RLS decoder with `p.lambda`.
pub fn rls_solution(p: &ModelParams) -> Result<ScalarSolution> {
    let lambda_prime = p.lambda / p.sigma_hhat_sq;
    let ups = upsilon(lambda_prime, p.delta);
    let theta = rls_theta_star(p.rho_d, p.sigma_hhat_sq, p.sigma_delta_sq, p.lambda, p.delta)?;
    let beta = 2.0 * ((p.delta - lambda_prime - 1.0) + p.delta * ups) * theta;
    Ok(ScalarSolution {
        theta_star: theta,
        beta_star: beta,
        b_norm: 1.0 / (1.0 + ups),
        upsilon: Some(ups),
        objective: None,
        stationarity_residual: None,
    })
}

/// `(δθ² - ρ_dσ_Δ² - 1)/(ρ_dσ_Ĥ²)`; shared by RLS and Box-RLS.
pub fn rls_mse(theta: f64, p: &ModelParams) -> f64 {
    (p.delta * theta * theta - p.rho_d * p.sigma_delta_sq - 1.0) / (p.rho_d * p.sigma_hhat_sq)
}

/// `2(1 - 1/M) Q(sqrt(ρ_dσ_Ĥ²) / (sqrt(E) θ))`.
pub fn rls_sep(theta: f64, rho_d: f64, sigma_hhat_sq: f64, m: usize) -> f64 {
    let mf = m as f64;
    2.0 * (1.0 - 1.0 / mf) * q_function((rho_d * sigma_hhat_sq).sqrt() / (pam_energy(m).sqrt() * theta))
}

/// `1/ρ_d + σ_Δ²`.
pub fn lambda_star_rls(rho_d: f64, sigma_delta_sq: f64) -> f64 {
    1.0 / rho_d + sigma_delta_sq
}

/// RLS MSE at the optimal regularization, as a function of the effective SNR.
pub fn mse_rls_opt_lambda(rho_eff: f64, delta: f64) -> f64 {
    let a = delta - 1.0 + 1.0 / rho_eff;
    let root = (a * a + 4.0 / rho_eff).sqrt();
    if a > 0.0 {
        2.0 / rho_eff / (a + root)
    } else {
        0.5 * (root - a)
    }
}

/// SEP implied by an RLS MSE: `2(1-1/M) Q(sqrt(δ / (E (MSE + 1/ρ_eff))))`.
pub fn sep_from_mse(mse: f64, rho_eff: f64, delta: f64, m: usize) -> f64 {
    let mf = m as f64;
    2.0 * (1.0 - 1.0 / mf) * q_function((delta / (pam_energy(m) * (mse + 1.0 / rho_eff))).sqrt())
}

fn check_tall(delta: f64) -> Result<()> {
    if delta <= 1.0 {
        return Err(Error::Infeasible(format!("least squares needs delta > 1, got {delta}")));
    }
    Ok(())
}

/// `1 / ((δ - 1) ρ_eff)`.
pub fn ls_mse(rho_eff: f64, delta: f64) -> Result<f64> {
    check_tall(delta)?;
    Ok(1.0 / ((delta - 1.0) * rho_eff))
}

/// `2(1-1/M) Q(sqrt((δ - 1) ρ_eff / E))`.
pub fn ls_sep(rho_eff: f64, delta: f64, m: usize) -> Result<f64> {
    check_tall(delta)?;
    let mf = m as f64;
    Ok(2.0 * (1.0 - 1.0 / mf) * q_function(((delta - 1.0) * rho_eff / pam_energy(m)).sqrt()))
}

/// Unboxed scalar objective
/// `βθδ/2 + β(1+ρ_d)/(2θ) - β²/4 - β²σ_Ĥ²(1 + ρ_dσ_Ĥ²/θ²)/(2βσ_Ĥ²/θ + 4λ)`.
pub fn unboxed_objective(theta: f64, beta: f64, p: &ModelParams) -> f64 {
    let sh = p.sigma_hhat_sq;
    beta * theta * p.delta / 2.0 + beta * (1.0 + p.rho_d) / (2.0 * theta)
        - beta * beta / 4.0
        - beta * beta * sh * (1.0 + p.rho_d * sh / (theta * theta))
            / (2.0 * beta * sh / theta + 4.0 * p.lambda)
}

/// Left-hand sides of the first-order conditions of [`unboxed_objective`]
/// in `θ` and in `β`, as `(eq_theta, eq_beta)`.
pub fn rls_stationarity(theta: f64, beta: f64, p: &ModelParams) -> (f64, f64) {
    let (sh, sd, rd, lam, d) = (p.sigma_hhat_sq, p.sigma_delta_sq, p.rho_d, p.lambda, p.delta);
    let den = (beta * sh + 2.0 * lam * theta).powi(2);
    let eq_theta = d * beta - beta / (theta * theta) - rd * sd * beta / (theta * theta)
        - beta * sh * (beta * beta * sh + 4.0 * rd * lam * lam) / den;
    let eq_beta = d * theta + 1.0 / theta - beta + rd * sd / theta
        - sh * theta * (beta * beta * sh + 4.0 * lam * theta * beta - 4.0 * rd * lam * lam) / den;
    (eq_theta, eq_beta)
}
