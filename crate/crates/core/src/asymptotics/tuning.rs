//! Numerical choice of the regularization coefficient and box threshold,
//! both by minimizing `θ*` (MSE and SEP are increasing in it).

use std::cell::RefCell;

use argmin::core::{CostFunction, Executor, State, TerminationReason, TerminationStatus};
use argmin::solver::neldermead::NelderMead;

use super::{box_rls::box_saddle_solve, rls::rls_theta_star, ModelParams};
use crate::error::{Error, Result};
use crate::search::{argmin, direction_changes, golden_section_min, log_grid};

const GRID: usize = 41;
const MAX_EXPANSIONS: usize = 40;
const JOINT_ITERS: u64 = 500;
/// Stop once the objective spread over the simplex is this small.
const JOINT_TOL: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TunedDecoder {
    Rls,
    BoxRls,
}

fn theta_star(p: &ModelParams, kind: TunedDecoder) -> Result<f64> {
    let r = match kind {
        TunedDecoder::Rls => rls_theta_star(p.rho_d, p.sigma_hhat_sq, p.sigma_delta_sq, p.lambda, p.delta),
        TunedDecoder::BoxRls => box_saddle_solve(p).map(|s| s.theta_star),
    };
    match r {
        // the unregularized end of the range may be infeasible (delta <= 1)
        Err(Error::Infeasible(_)) => Ok(f64::INFINITY),
        other => other,
    }
}

/// Minimizes `f` over `grid ∪ refinement`, warning when the sampled profile
/// is not unimodal (in which case the global grid minimum seeds the refinement).
fn minimize_on_grid<F>(what: &str, grid: &[f64], mut f: F) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    let mut vals = Vec::with_capacity(grid.len());
    for &x in grid {
        vals.push(f(x)?);
    }
    if direction_changes(&vals, 1e-10) > 1 {
        log::warn!("{what}: sampled profile is not unimodal, refining around the global grid minimum");
    }
    let k = argmin(&vals)
        .filter(|&k| vals[k].is_finite())
        .ok_or_else(|| Error::NonConvergence {
            what: "parameter tuning",
            detail: format!("{what}: no finite objective value on the grid"),
        })?;
    let a = grid[k.saturating_sub(1)];
    let b = grid[(k + 1).min(grid.len() - 1)];
    let mut failure = None;
    let (x, fx) = golden_section_min(
        |x| match f(x) {
            Ok(v) => v,
            Err(e) => {
                failure.get_or_insert(e);
                f64::INFINITY
            }
        },
        a,
        b,
        (1e-9 * b).max(1e-14),
        200,
    );
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(if fx <= vals[k] { x } else { grid[k] })
}

/// Upper end of the search range, doubled until `f` stops decreasing there.
fn expand_upper<F>(mut hi: f64, mut f: F) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    for _ in 0..MAX_EXPANSIONS {
        if f(hi)? >= f(0.5 * hi)? {
            return Ok(hi);
        }
        hi *= 2.0;
    }
    Err(Error::NonConvergence {
        what: "parameter tuning",
        detail: format!("objective still decreasing at the upper bracket {hi}"),
    })
}

/// `argmin_{λ ≥ 0} θ*(λ)` for the given decoder at `p.t_box`.
pub fn lambda_star_numeric(p: &ModelParams, kind: TunedDecoder) -> Result<f64> {
    let f = |lam: f64| theta_star(&p.with_lambda(lam), kind);
    let scale = 1.0 / p.rho_d + p.sigma_delta_sq;
    let hi = expand_upper(4.0 * scale, f)?;
    let mut grid = vec![0.0];
    grid.extend(log_grid(1e-9 * hi, hi, GRID));
    minimize_on_grid("lambda", &grid, f)
}

/// `argmin_{t > 0} θ*(t)` for Box-RLS at `p.lambda`.
pub fn t_star_numeric(p: &ModelParams) -> Result<f64> {
    let f = |t: f64| theta_star(&p.with_t_box(t), TunedDecoder::BoxRls);
    let hi = expand_upper(2.0 * p.max_symbol(), f)?;
    minimize_on_grid("t", &log_grid(1e-3 * hi, hi, GRID), f)
}

/// `θ*` of Box-RLS as a function of `(u, v)` with `λ = u²`, `t = exp(v)`,
/// so the simplex search below is unconstrained.
struct JointTheta<'a> {
    p: &'a ModelParams,
    failure: RefCell<Option<Error>>,
}

impl CostFunction for JointTheta<'_> {
    type Param = Vec<f64>;
    type Output = f64;

    fn cost(&self, x: &Vec<f64>) -> std::result::Result<f64, argmin::core::Error> {
        let q = self.p.with_lambda(x[0] * x[0]).with_t_box(x[1].exp());
        match theta_star(&q, TunedDecoder::BoxRls) {
            Ok(v) => Ok(v),
            Err(e) => {
                self.failure.borrow_mut().get_or_insert(e);
                Ok(f64::INFINITY)
            }
        }
    }
}

/// Joint `argmin_{λ ≥ 0, t > 0} θ*` for Box-RLS. Returns `(λ*, t*)`.
///
/// Nelder-Mead over `(sqrt λ, ln t)` started from the closed-form RLS
/// regularization and `t = (M-1)/sqrt(E)`.
pub fn lambda_t_star_numeric(p: &ModelParams) -> Result<(f64, f64)> {
    let u0 = (1.0 / p.rho_d + p.sigma_delta_sq).sqrt();
    let v0 = p.max_symbol().ln();
    let simplex = vec![vec![u0, v0], vec![0.5 * u0, v0], vec![u0, v0 - 0.2]];
    let problem = JointTheta {
        p,
        failure: RefCell::new(None),
    };
    let tuning_error = |e: argmin::core::Error| Error::NonConvergence {
        what: "joint parameter tuning",
        detail: e.to_string(),
    };
    let solver = NelderMead::new(simplex).with_sd_tolerance(JOINT_TOL).map_err(tuning_error)?;
    let res = Executor::new(problem, solver)
        .configure(|s| s.max_iters(JOINT_ITERS))
        .run()
        .map_err(tuning_error)?;
    if let Some(e) = res.problem.problem.as_ref().and_then(|p| p.failure.take()) {
        return Err(e);
    }
    let state = res.state();
    let best = state.get_best_param().ok_or_else(|| Error::NonConvergence {
        what: "joint parameter tuning",
        detail: "no finite objective value found".into(),
    })?;
    if state.get_termination_status() != &TerminationStatus::Terminated(TerminationReason::SolverConverged) {
        log::warn!("joint lambda/t search stopped after {} iterations", state.get_iter());
    }
    Ok((best[0] * best[0], best[1].exp()))
}
