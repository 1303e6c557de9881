//! Monte Carlo simulation of training-based transmission.
//!
//! Every trial owns its random stream: ChaCha8 keyed by the master seed
//! with stream `trial_idx + 1` (stream 0 generates the pilot matrix), so
//! the outcome of a trial never depends on scheduling.

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::asymptotics::{box_saddle_solve, lambda_star_rls, rls_solution, ModelParams};
use crate::decoders::{self, BoxSolverOptions, DecoderSpec};
use crate::error::{Error, Result};
use crate::system::{Constellation, DerivedParams, SystemConfig};

/// Default number of trials per batch.
pub const DEFAULT_TRIALS: usize = 500;

fn gaussian_matrix<R: Rng>(rows: usize, cols: usize, rng: &mut R) -> DMatrix<f64> {
    DMatrix::from_fn(rows, cols, |_, _| rng.sample(StandardNormal))
}

fn gaussian_vector<R: Rng>(n: usize, rng: &mut R) -> DVector<f64> {
    DVector::from_fn(n, |_, _| rng.sample(StandardNormal))
}

/// `K x T_p` pilot matrix with `X_p X_p^T = T_p I`, built from the
/// orthonormalized columns of a seeded Gaussian `T_p x K` matrix.
pub fn make_pilots(k: usize, t_p: usize, seed: u64) -> Result<DMatrix<f64>> {
    if k == 0 || t_p < k {
        return Err(Error::config(
            "t_pilot",
            format!("orthogonal pilots need t_pilot >= k >= 1, got t_pilot={t_p}, k={k}"),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = gaussian_matrix(t_p, k, &mut rng);
    let q = g.qr().q();
    Ok(q.transpose() * (t_p as f64).sqrt())
}

/// True channel, its LMMSE estimate and the estimation error.
#[derive(Debug, Clone)]
pub struct ChannelRealization {
    pub h: DMatrix<f64>,
    pub hhat: DMatrix<f64>,
    pub delta: DMatrix<f64>,
}

/// LMMSE estimate of `h` from `Y_p = sqrt(rho_p/K) H X_p + noise_std * Z_p`.
pub fn estimate_channel_with<R: Rng>(
    h: DMatrix<f64>,
    x_p: &DMatrix<f64>,
    rho_p: f64,
    noise_std: f64,
    rng: &mut R,
) -> Result<ChannelRealization> {
    if !(rho_p > 0.0) {
        return Err(Error::InvalidArgument(format!("pilot power must be > 0, got {rho_p}")));
    }
    let (n, k) = h.shape();
    if x_p.nrows() != k {
        return Err(Error::InvalidArgument(format!(
            "pilot matrix has {} rows for {k} transmit antennas",
            x_p.nrows()
        )));
    }
    let t_p = x_p.ncols();
    let kf = k as f64;
    let mut y_p = gaussian_matrix(n, t_p, rng);
    y_p *= noise_std;
    y_p.gemm((rho_p / kf).sqrt(), &h, x_p, 1.0);
    let gain = (kf / rho_p).sqrt() / (kf / rho_p + t_p as f64);
    let hhat = (&y_p * x_p.transpose()) * gain;
    let delta = &h - &hhat;
    Ok(ChannelRealization { h, hhat, delta })
}

/// [`estimate_channel_with`] with unit-variance pilot noise drawn from `noise_seed`.
pub fn estimate_channel(h: DMatrix<f64>, x_p: &DMatrix<f64>, rho_p: f64, noise_seed: u64) -> Result<ChannelRealization> {
    let mut rng = ChaCha8Rng::seed_from_u64(noise_seed);
    estimate_channel_with(h, x_p, rho_p, 1.0, &mut rng)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrialOutcome {
    pub mse: f64,
    pub ser: f64,
    pub master_seed: u64,
    pub trial_idx: u64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BatchStats {
    pub trials: usize,
    pub mean_mse: f64,
    pub mean_ser: f64,
    /// Sample standard deviation over `sqrt(trials)`; 0 for a single trial.
    pub stderr_mse: f64,
    pub stderr_ser: f64,
}

fn mean_and_stderr(values: impl Iterator<Item = f64> + Clone, n: usize) -> (f64, f64) {
    let nf = n as f64;
    let mean = values.clone().sum::<f64>() / nf;
    if n < 2 {
        return (mean, 0.0);
    }
    let var = values.map(|v| (v - mean) * (v - mean)).sum::<f64>() / (nf - 1.0);
    (mean, (var / nf).sqrt())
}

impl BatchStats {
    /// Sequential, index-ordered reduction.
    pub fn from_outcomes(outcomes: &[TrialOutcome]) -> Result<Self> {
        if outcomes.is_empty() {
            return Err(Error::InvalidArgument("a batch needs at least one trial".into()));
        }
        let n = outcomes.len();
        let (mean_mse, stderr_mse) = mean_and_stderr(outcomes.iter().map(|o| o.mse), n);
        let (mean_ser, stderr_ser) = mean_and_stderr(outcomes.iter().map(|o| o.ser), n);
        Ok(Self {
            trials: n,
            mean_mse,
            mean_ser,
            stderr_mse,
            stderr_ser,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExecutionMode {
    Sequential,
    /// Trials run on the rayon pool; results are gathered in index order and
    /// reduced sequentially, so they match [`ExecutionMode::Sequential`] bit for bit.
    #[cfg(feature = "parallel")]
    Parallel,
}

impl Default for ExecutionMode {
    fn default() -> Self {
        #[cfg(feature = "parallel")]
        {
            ExecutionMode::Parallel
        }
        #[cfg(not(feature = "parallel"))]
        {
            ExecutionMode::Sequential
        }
    }
}

/// Everything shared by the trials of one batch.
#[derive(Debug, Clone)]
pub struct TrialPlan {
    pub cfg: SystemConfig,
    pub derived: DerivedParams,
    pub decoder: DecoderSpec,
    pub constellation: Constellation,
    pub b_norm: f64,
    pub master_seed: u64,
    pub pilots: DMatrix<f64>,
    pub pilot_noise_std: f64,
    pub data_noise_std: f64,
    pub box_options: BoxSolverOptions,
}

/// Slicer normalization the asymptotic analysis prescribes for `decoder`.
pub fn normalization_for(cfg: &SystemConfig, decoder: &DecoderSpec) -> Result<f64> {
    let p = ModelParams::from_config(cfg)?;
    Ok(match *decoder {
        DecoderSpec::Ls => 1.0,
        DecoderSpec::Rls { lambda } => rls_solution(&p.with_lambda(lambda))?.b_norm,
        DecoderSpec::Lmmse => rls_solution(&p.with_lambda(lambda_star_rls(p.rho_d, p.sigma_delta_sq)))?.b_norm,
        DecoderSpec::BoxRls { lambda, t } => box_saddle_solve(&p.with_lambda(lambda).with_t_box(t))?.b_norm,
    })
}

impl TrialPlan {
    pub fn new(cfg: &SystemConfig, decoder: DecoderSpec, master_seed: u64) -> Result<Self> {
        let derived = cfg.derive()?;
        if matches!(decoder, DecoderSpec::Ls) && cfg.n <= cfg.k {
            return Err(Error::config("n", "least squares needs n > k"));
        }
        let b_norm = normalization_for(cfg, &decoder)?;
        Ok(Self {
            cfg: *cfg,
            derived,
            decoder,
            constellation: cfg.constellation()?,
            b_norm,
            master_seed,
            pilots: make_pilots(cfg.k, cfg.t_p, master_seed)?,
            pilot_noise_std: 1.0,
            data_noise_std: 1.0,
            box_options: BoxSolverOptions::default(),
        })
    }

    pub fn with_b_norm(mut self, b_norm: f64) -> Self {
        self.b_norm = b_norm;
        self
    }

    pub fn with_noise(mut self, pilot_noise_std: f64, data_noise_std: f64) -> Self {
        self.pilot_noise_std = pilot_noise_std;
        self.data_noise_std = data_noise_std;
        self
    }

    pub fn trial_rng(&self, trial_idx: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.master_seed);
        rng.set_stream(trial_idx + 1);
        rng
    }

    /// Draws `H`, pilot noise, `x0` and data noise (in that order) and decodes.
    pub fn run_trial(&self, trial_idx: u64) -> Result<TrialOutcome> {
        let (k, n) = (self.cfg.k, self.cfg.n);
        let d = &self.derived;
        let mut rng = self.trial_rng(trial_idx);
        let h = gaussian_matrix(n, k, &mut rng);
        let ch = estimate_channel_with(h, &self.pilots, d.rho_p, self.pilot_noise_std, &mut rng)?;
        let points = self.constellation.points();
        let x0 = DVector::from_fn(k, |_, _| points[rng.random_range(0..points.len())]);
        let mut y = gaussian_vector(n, &mut rng);
        y *= self.data_noise_std;
        let scale = (d.rho_d / k as f64).sqrt();
        y.gemv(scale, &ch.h, &x0, 1.0);

        let a = &ch.hhat * scale;
        let x_hat = match self.decoder {
            DecoderSpec::Ls => decoders::rls_solve(&a, &y, 0.0)?,
            DecoderSpec::Rls { lambda } => decoders::rls_solve(&a, &y, lambda * d.rho_d)?,
            DecoderSpec::Lmmse => decoders::lmmse_decode(&ch.hhat, &y, d.rho_d, d.sigma_delta_sq)?,
            DecoderSpec::BoxRls { lambda, t } => {
                decoders::box_rls_solve(&a, &y, lambda * d.rho_d, t, &self.box_options)?.x_hat
            }
        };
        let x_star = decoders::normalize_and_slice(&x_hat, self.b_norm, &self.constellation)?;
        let errors = x_star.iter().zip(x0.iter()).filter(|(s, x)| s != x).count();
        Ok(TrialOutcome {
            mse: (&x_hat - &x0).norm_squared() / k as f64,
            ser: errors as f64 / k as f64,
            master_seed: self.master_seed,
            trial_idx,
        })
    }

    pub fn run_trials(&self, trials: usize, mode: ExecutionMode) -> Result<Vec<TrialOutcome>> {
        if trials == 0 {
            return Err(Error::InvalidArgument("a batch needs at least one trial".into()));
        }
        match mode {
            ExecutionMode::Sequential => (0..trials as u64).map(|i| self.run_trial(i)).collect(),
            #[cfg(feature = "parallel")]
            ExecutionMode::Parallel => {
                use rayon::prelude::*;
                (0..trials as u64)
                    .into_par_iter()
                    .map(|i| self.run_trial(i))
                    .collect()
            }
        }
    }

    pub fn run_batch(&self, trials: usize, mode: ExecutionMode) -> Result<BatchStats> {
        BatchStats::from_outcomes(&self.run_trials(trials, mode)?)
    }
}

/// One trial of `decoder` under `cfg`; deterministic in `(seed, trial_idx)`.
pub fn run_trial(cfg: &SystemConfig, decoder: DecoderSpec, seed: u64, trial_idx: u64) -> Result<TrialOutcome> {
    TrialPlan::new(cfg, decoder, seed)?.run_trial(trial_idx)
}

/// `trials` independent trials reduced to means and standard errors.
pub fn run_batch(cfg: &SystemConfig, decoder: DecoderSpec, trials: usize, master_seed: u64) -> Result<BatchStats> {
    TrialPlan::new(cfg, decoder, master_seed)?.run_batch(trials, ExecutionMode::default())
}
