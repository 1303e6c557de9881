//! Standard normal tail, density and truncated second moments.

use crate::error::{Error, Result};
use std::f64::consts::{FRAC_1_SQRT_2, PI};

/// Gaussian tail probability `Q(x) = P[N(0,1) > x]`, with `Q(-inf) = 1`, `Q(inf) = 0`.
pub fn q_function(x: f64) -> f64 {
    if x == f64::INFINITY {
        0.0
    } else if x == f64::NEG_INFINITY {
        1.0
    } else {
        0.5 * libm::erfc(x * FRAC_1_SQRT_2)
    }
}

/// Standard normal density; zero at ±inf.
pub fn normal_pdf(x: f64) -> f64 {
    if x.is_infinite() {
        0.0
    } else {
        (-0.5 * x * x).exp() / (2.0 * PI).sqrt()
    }
}

/// `P[l < h < u]` for standard normal `h`, evaluated on whichever tail keeps
/// the subtraction well conditioned.
pub fn normal_mass(l: f64, u: f64) -> f64 {
    if l >= 0.0 {
        q_function(l) - q_function(u)
    } else if u <= 0.0 {
        q_function(-u) - q_function(-l)
    } else {
        1.0 - q_function(-l) - q_function(u)
    }
}

/// `x * p(x)`, with the `±inf` limit taken as zero.
fn x_pdf(x: f64) -> f64 {
    if x.is_infinite() {
        0.0
    } else {
        x * normal_pdf(x)
    }
}

/// `∫_l^u (a + b h)^2 p(h) dh` for standard normal density `p`.
///
/// Closed form: `(a²+b²)(Q(l)-Q(u)) + b(bl+2a)p(l) - b(bu+2a)p(u)`.
/// Infinite limits are allowed.
pub fn gaussian_partial_second_moment(a: f64, b: f64, l: f64, u: f64) -> Result<f64> {
    if l.is_nan() || u.is_nan() || l > u {
        return Err(Error::InvalidArgument(format!(
            "partial moment needs l <= u, got l={l}, u={u}"
        )));
    }
    let mass = normal_mass(l, u);
    let lower = b * b * x_pdf(l) + 2.0 * a * b * normal_pdf(l);
    let upper = b * b * x_pdf(u) + 2.0 * a * b * normal_pdf(u);
    Ok((a * a + b * b) * mass + lower - upper)
}

/// `∫_l^u (a + b h) p(h) dh`.
pub fn gaussian_partial_first_moment(a: f64, b: f64, l: f64, u: f64) -> f64 {
    a * normal_mass(l, u) + b * (normal_pdf(l) - normal_pdf(u))
}
