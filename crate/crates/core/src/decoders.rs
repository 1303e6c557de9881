//! Linear decoders (LS / RLS / LMMSE), the box-constrained RLS decoder and
//! the normalize-and-slice detector.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::system::Constellation;

/// Which decoder a trial or prediction uses, with its resolved parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DecoderSpec {
    /// Unregularized least squares (`lambda = 0`, `B = 1`).
    Ls,
    Rls { lambda: f64 },
    BoxRls { lambda: f64, t: f64 },
    /// RLS at `lambda = 1/rho_d + sigma_delta^2`.
    Lmmse,
}

impl DecoderSpec {
    pub fn name(&self) -> &'static str {
        match self {
            DecoderSpec::Ls => "ls",
            DecoderSpec::Rls { .. } => "rls",
            DecoderSpec::BoxRls { .. } => "box",
            DecoderSpec::Lmmse => "lmmse",
        }
    }

    pub fn lambda(&self) -> Option<f64> {
        match *self {
            DecoderSpec::Ls => Some(0.0),
            DecoderSpec::Rls { lambda } | DecoderSpec::BoxRls { lambda, .. } => Some(lambda),
            DecoderSpec::Lmmse => None,
        }
    }

    pub fn t_box(&self) -> Option<f64> {
        match *self {
            DecoderSpec::BoxRls { t, .. } => Some(t),
            _ => None,
        }
    }
}

/// Inputs of one decoding problem: `min ||y - A x||^2 + lambda_rho_d ||x||^2`,
/// optionally over the box `[-t, t]^K`.
#[derive(Debug, Clone, Copy)]
pub struct DecodeRequest<'a> {
    /// `sqrt(rho_d / K) * Hhat`.
    pub a: &'a DMatrix<f64>,
    pub y: &'a DVector<f64>,
    pub lambda_rho_d: f64,
    /// Box threshold; `None` for the unboxed decoder.
    pub t_box: Option<f64>,
    /// Bias-removing normalization applied before slicing.
    pub b_norm: f64,
}

#[derive(Debug, Clone)]
pub struct DecodeResult {
    /// Soft estimate before slicing.
    pub x_hat: DVector<f64>,
    /// Hard decisions.
    pub x_star: Vec<f64>,
    /// Projected fixed-point violation of the box solver (`0` when unboxed).
    pub kkt_residual: f64,
}

/// Stopping rules of the coordinate-descent box solver.
#[derive(Debug, Clone, Copy)]
pub struct BoxSolverOptions {
    /// Stop once the largest coordinate move in a sweep is below this.
    pub step_tol: f64,
    pub max_sweeps: usize,
    /// Residual above which hitting `max_sweeps` is reported as a failure.
    pub fail_residual: f64,
}

impl Default for BoxSolverOptions {
    fn default() -> Self {
        Self {
            step_tol: 1e-10,
            max_sweeps: 10_000,
            fail_residual: 1e-6,
        }
    }
}

#[derive(Debug, Clone)]
pub struct BoxSolution {
    pub x_hat: DVector<f64>,
    /// `max_j |x_j - clip(x_j - grad_j / (2 G_jj))|` with `G = A^T A + lambda_rho_d I`;
    /// zero exactly at the constrained minimizer.
    pub kkt_residual: f64,
    pub sweeps: usize,
    /// Objective after every sweep (first entry: starting point).
    pub objective_trace: Vec<f64>,
}

fn check_dims(a: &DMatrix<f64>, y: &DVector<f64>) -> Result<()> {
    if a.nrows() != y.len() {
        return Err(Error::InvalidArgument(format!(
            "A has {} rows but y has {} entries",
            a.nrows(),
            y.len()
        )));
    }
    Ok(())
}

fn check_lambda(lambda_rho_d: f64) -> Result<()> {
    if !(lambda_rho_d.is_finite() && lambda_rho_d >= 0.0) {
        return Err(Error::InvalidArgument(format!(
            "lambda * rho_d must be >= 0, got {lambda_rho_d}"
        )));
    }
    Ok(())
}

/// `A^T A + lambda_rho_d I`.
pub fn regularized_gram(a: &DMatrix<f64>, lambda_rho_d: f64) -> DMatrix<f64> {
    let mut g = a.tr_mul(a);
    for j in 0..g.ncols() {
        g[(j, j)] += lambda_rho_d;
    }
    g
}

fn solve_spd(gram: DMatrix<f64>, rhs: &DVector<f64>) -> Result<DVector<f64>> {
    let chol = gram.cholesky().ok_or_else(|| {
        Error::Singular("A^T A + lambda rho_d I is not positive definite".into())
    })?;
    Ok(chol.solve(rhs))
}

/// Regularized least squares `(A^T A + lambda_rho_d I)^{-1} A^T y` via Cholesky.
pub fn rls_solve(a: &DMatrix<f64>, y: &DVector<f64>, lambda_rho_d: f64) -> Result<DVector<f64>> {
    check_dims(a, y)?;
    check_lambda(lambda_rho_d)?;
    if lambda_rho_d == 0.0 && a.nrows() <= a.ncols() {
        return Err(Error::Singular(format!(
            "unregularized least squares needs more rows than columns, got {}x{}",
            a.nrows(),
            a.ncols()
        )));
    }
    solve_spd(regularized_gram(a, lambda_rho_d), &a.tr_mul(y))
}

/// `||y - A x||^2 + lambda_rho_d ||x||^2`.
pub fn rls_objective(a: &DMatrix<f64>, y: &DVector<f64>, lambda_rho_d: f64, x: &DVector<f64>) -> f64 {
    (y - a * x).norm_squared() + lambda_rho_d * x.norm_squared()
}

/// Box-constrained RLS by cyclic coordinate descent with exact coordinate
/// minimization and clipping, warm-started from the clipped unconstrained
/// solution when that one exists.
pub fn box_rls_solve(
    a: &DMatrix<f64>,
    y: &DVector<f64>,
    lambda_rho_d: f64,
    t: f64,
    opts: &BoxSolverOptions,
) -> Result<BoxSolution> {
    check_dims(a, y)?;
    check_lambda(lambda_rho_d)?;
    if !(t.is_finite() && t > 0.0) {
        return Err(Error::InvalidArgument(format!("box threshold must be > 0, got {t}")));
    }
    let k = a.ncols();
    let gram = regularized_gram(a, lambda_rho_d);
    let aty = a.tr_mul(y);
    let yty = y.norm_squared();
    if (0..k).any(|j| gram[(j, j)] <= 0.0) {
        return Err(Error::Singular("zero column in A with lambda = 0".into()));
    }

    let mut x = match gram.clone().cholesky() {
        Some(chol) => chol.solve(&aty).map(|v| v.clamp(-t, t)),
        None => DVector::zeros(k),
    };
    // g = G x - A^T y  (half the objective gradient)
    let mut g = &gram * &x - &aty;
    let objective = |x: &DVector<f64>, g: &DVector<f64>| x.dot(g) - aty.dot(x) + yty;

    let mut trace = Vec::with_capacity(64);
    trace.push(objective(&x, &g));
    let mut sweeps = 0;
    let mut converged = false;
    while sweeps < opts.max_sweeps {
        sweeps += 1;
        let mut max_step = 0.0f64;
        for j in 0..k {
            let gjj = gram[(j, j)];
            let new = (x[j] - g[j] / gjj).clamp(-t, t);
            let step = new - x[j];
            if step != 0.0 {
                g.axpy(step, &gram.column(j), 1.0);
                x[j] = new;
                max_step = max_step.max(step.abs());
            }
        }
        let f = objective(&x, &g);
        let prev = *trace.last().unwrap();
        debug_assert!(
            f <= prev + 1e-10 * prev.abs().max(1.0),
            "coordinate descent increased the objective: {prev} -> {f}"
        );
        trace.push(f);
        if max_step < opts.step_tol {
            converged = true;
            break;
        }
    }

    let kkt_residual = (0..k)
        .map(|j| (x[j] - (x[j] - g[j] / gram[(j, j)]).clamp(-t, t)).abs())
        .fold(0.0, f64::max);
    if !converged && kkt_residual > opts.fail_residual {
        return Err(Error::NonConvergence {
            what: "box-constrained RLS",
            detail: format!("{sweeps} sweeps, KKT residual {kkt_residual:.3e}"),
        });
    }
    Ok(BoxSolution {
        x_hat: x,
        kkt_residual,
        sweeps,
        objective_trace: trace,
    })
}

/// LMMSE data detector given the channel estimate:
/// `(A^T A + (1 + rho_d sigma_delta^2) I)^{-1} A^T y` with `A = sqrt(rho_d / K) Hhat`.
pub fn lmmse_decode(
    hhat: &DMatrix<f64>,
    y: &DVector<f64>,
    rho_d: f64,
    sigma_delta_sq: f64,
) -> Result<DVector<f64>> {
    let a = hhat * (rho_d / hhat.ncols() as f64).sqrt();
    rls_solve(&a, y, 1.0 + rho_d * sigma_delta_sq)
}

/// Element-wise `slice(x_hat_j / B)`.
pub fn normalize_and_slice(x_hat: &DVector<f64>, b_norm: f64, constellation: &Constellation) -> Result<Vec<f64>> {
    if !(b_norm > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "normalization constant must be > 0, got {b_norm}"
        )));
    }
    Ok(x_hat.iter().map(|&v| constellation.slice(v / b_norm)).collect())
}

/// Runs the boxed or unboxed decoder described by `req` and slices the result.
pub fn decode(req: &DecodeRequest<'_>, constellation: &Constellation, opts: &BoxSolverOptions) -> Result<DecodeResult> {
    let (x_hat, kkt_residual) = match req.t_box {
        None => (rls_solve(req.a, req.y, req.lambda_rho_d)?, 0.0),
        Some(t) => {
            let sol = box_rls_solve(req.a, req.y, req.lambda_rho_d, t, opts)?;
            (sol.x_hat, sol.kkt_residual)
        }
    };
    let x_star = normalize_and_slice(&x_hat, req.b_norm, constellation)?;
    Ok(DecodeResult {
        x_hat,
        x_star,
        kkt_residual,
    })
}
