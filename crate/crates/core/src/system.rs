//! Scenario parameters, power-allocation conventions and the M-PAM alphabet.

use crate::error::{Error, Result};

/// How the total energy budget `rho * T` is split between pilots and data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PowerConvention {
    /// `rho_p * T_p + rho_d * T_d = rho * T`, with `rho_d * T_d = alpha * rho * T`.
    EnergyConserving,
    /// `rho_d = alpha * rho`, `rho_p = (1 - alpha) * rho`.
    DirectSplit,
}

impl PowerConvention {
    pub fn as_str(self) -> &'static str {
        match self {
            PowerConvention::EnergyConserving => "energy",
            PowerConvention::DirectSplit => "direct",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "energy" | "energy_conserving" | "energyconserving" => {
                Some(PowerConvention::EnergyConserving)
            }
            "direct" | "direct_split" | "directsplit" => Some(PowerConvention::DirectSplit),
            _ => None,
        }
    }
}

/// All scalars describing one transmission scenario.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemConfig {
    /// Transmit antennas.
    pub k: usize,
    /// Receive antennas.
    pub n: usize,
    /// Symbols per coherence block.
    pub t: usize,
    /// Pilot symbols per block.
    pub t_p: usize,
    /// Average transmit power (linear).
    pub rho: f64,
    /// Fraction of the energy spent on data, in (0, 1).
    pub alpha: f64,
    /// PAM order.
    pub m: usize,
    /// Regularization coefficient.
    pub lambda: f64,
    /// Box threshold.
    pub t_box: f64,
    pub power_convention: PowerConvention,
}

impl SystemConfig {
    pub fn validate(&self) -> Result<()> {
        if self.k == 0 {
            return Err(Error::config("k", "must be positive"));
        }
        if self.n == 0 {
            return Err(Error::config("n", "must be positive"));
        }
        if self.t == 0 {
            return Err(Error::config("t", "must be positive"));
        }
        if self.t_p < self.k {
            return Err(Error::config(
                "t_pilot",
                format!(
                    "orthogonal pilots (X_p X_p^T = T_p I) need t_pilot >= k, got {} < {}",
                    self.t_p, self.k
                ),
            ));
        }
        if self.t_p >= self.t {
            return Err(Error::config(
                "t_pilot",
                format!("need t_pilot < t, got {} >= {}", self.t_p, self.t),
            ));
        }
        if !(self.rho.is_finite() && self.rho > 0.0) {
            return Err(Error::config("rho", format!("must be > 0, got {}", self.rho)));
        }
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return Err(Error::config(
                "alpha",
                format!("must lie strictly inside (0, 1), got {}", self.alpha),
            ));
        }
        if self.m < 2 || !self.m.is_power_of_two() {
            return Err(Error::config(
                "m",
                format!("must be a power of two >= 2, got {}", self.m),
            ));
        }
        if !(self.lambda.is_finite() && self.lambda >= 0.0) {
            return Err(Error::config(
                "lambda",
                format!("must be >= 0, got {}", self.lambda),
            ));
        }
        if self.lambda == 0.0 && self.n <= self.k {
            return Err(Error::config(
                "lambda",
                format!("lambda = 0 needs n > k, got n = {} <= k = {}", self.n, self.k),
            ));
        }
        if !(self.t_box.is_finite() && self.t_box > 0.0) {
            return Err(Error::config(
                "t_box",
                format!("must be > 0, got {}", self.t_box),
            ));
        }
        Ok(())
    }

    /// Validates the config and computes every derived quantity.
    pub fn derive(&self) -> Result<DerivedParams> {
        self.validate()?;
        let k = self.k as f64;
        let t = self.t as f64;
        let t_p = self.t_p as f64;
        let t_d = t - t_p;
        let (rho_p, rho_d) = match self.power_convention {
            PowerConvention::EnergyConserving => (
                (1.0 - self.alpha) * self.rho * t / t_p,
                self.alpha * self.rho * t / t_d,
            ),
            PowerConvention::DirectSplit => ((1.0 - self.alpha) * self.rho, self.alpha * self.rho),
        };
        let sigma_delta_sq = estimation_error_variance(rho_p, self.t_p, self.k);
        let sigma_hhat_sq = 1.0 - sigma_delta_sq;
        Ok(DerivedParams {
            delta: self.n as f64 / k,
            tau: t / k,
            tau_p: t_p / k,
            tau_d: t_d / k,
            rho_p,
            rho_d,
            energy: pam_energy(self.m),
            sigma_delta_sq,
            sigma_hhat_sq,
            rho_eff: effective_snr(rho_d, sigma_delta_sq),
        })
    }

    pub fn constellation(&self) -> Result<Constellation> {
        Constellation::new(self.m)
    }

    /// Largest constellation amplitude `(M - 1) / sqrt(E)`.
    pub fn max_symbol(&self) -> f64 {
        (self.m as f64 - 1.0) / pam_energy(self.m).sqrt()
    }
}

/// Quantities that follow from a [`SystemConfig`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedParams {
    pub delta: f64,
    pub tau: f64,
    pub tau_p: f64,
    pub tau_d: f64,
    pub rho_p: f64,
    pub rho_d: f64,
    /// Average power of the un-normalized alphabet, `(M^2 - 1) / 3`.
    pub energy: f64,
    pub sigma_delta_sq: f64,
    pub sigma_hhat_sq: f64,
    pub rho_eff: f64,
}

/// `(M^2 - 1) / 3`.
pub fn pam_energy(m: usize) -> f64 {
    let m = m as f64;
    (m * m - 1.0) / 3.0
}

/// Per-entry variance of the LMMSE channel estimation error under orthogonal pilots.
pub fn estimation_error_variance(rho_p: f64, t_p: usize, k: usize) -> f64 {
    1.0 / (1.0 + rho_p * t_p as f64 / k as f64)
}

/// SNR of the equivalent perfect-CSI system.
pub fn effective_snr(rho_d: f64, sigma_delta_sq: f64) -> f64 {
    rho_d * (1.0 - sigma_delta_sq) / (1.0 + rho_d * sigma_delta_sq)
}

/// Effective SNR as a function of the data power ratio under the
/// energy-conserving convention.
///
/// `tau_d = 1` makes the generic expression 0/0, so that case uses its own
/// form `(rho tau)^2 / (1 + rho tau) * alpha (1 - alpha)`.
pub fn rho_eff_of_alpha(rho: f64, tau: f64, tau_d: f64, alpha: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidArgument(format!(
            "alpha must lie in (0, 1), got {alpha}"
        )));
    }
    if !(rho > 0.0 && tau_d > 0.0 && tau > tau_d) {
        return Err(Error::InvalidArgument(format!(
            "need rho > 0 and 0 < tau_d < tau, got rho={rho}, tau={tau}, tau_d={tau_d}"
        )));
    }
    let rt = rho * tau;
    if (tau_d - 1.0).abs() <= 1e-12 {
        return Ok(rt * rt / (1.0 + rt) * alpha * (1.0 - alpha));
    }
    let vartheta = (1.0 + rt) / (rt * (1.0 - 1.0 / tau_d));
    Ok(rt / (tau_d - 1.0) * alpha * (1.0 - alpha) / (vartheta - alpha))
}

pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

pub fn linear_to_db(x: f64) -> f64 {
    10.0 * x.log10()
}

/// Unit-energy M-PAM alphabet `{±1, ±3, …, ±(M-1)} / sqrt(E)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Constellation {
    points: Vec<f64>,
    m: usize,
    energy: f64,
}

impl Constellation {
    pub fn new(m: usize) -> Result<Self> {
        if m < 2 || !m.is_power_of_two() {
            return Err(Error::config(
                "m",
                format!("must be a power of two >= 2, got {m}"),
            ));
        }
        let energy = pam_energy(m);
        let scale = energy.sqrt();
        let points = (0..m)
            .map(|j| (2.0 * j as f64 - (m as f64 - 1.0)) / scale)
            .collect();
        Ok(Self { points, m, energy })
    }

    /// Points in increasing order.
    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn order(&self) -> usize {
        self.m
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }

    pub fn max_amplitude(&self) -> f64 {
        self.points[self.m - 1]
    }

    /// Nearest constellation point; exact ties go to the smaller point.
    pub fn slice(&self, value: f64) -> f64 {
        let mut best = self.points[0];
        let mut best_dist = (value - best).abs();
        for &p in &self.points[1..] {
            let d = (value - p).abs();
            if d < best_dist {
                best = p;
                best_dist = d;
            }
        }
        best
    }

    /// Index of `slice(value)` in [`Self::points`].
    pub fn slice_index(&self, value: f64) -> usize {
        let s = self.slice(value);
        self.points.iter().position(|&p| p == s).unwrap_or(0)
    }
}
