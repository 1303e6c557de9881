//! One-dimensional search primitives shared by the asymptotic solvers and
//! the optimizers.

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section minimization of a unimodal `f` on `[a, b]`.
///
/// Stops when the bracket is narrower than `tol` or after `max_iter`
/// shrinks. Returns the best point seen and its value.
pub fn golden_section_min<F>(mut f: F, a: f64, b: f64, tol: f64, max_iter: usize) -> (f64, f64)
where
    F: FnMut(f64) -> f64,
{
    let (mut a, mut b) = if a <= b { (a, b) } else { (b, a) };
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..max_iter {
        if (b - a).abs() <= tol {
            break;
        }
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    if fc <= fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

/// Golden-section maximization; see [`golden_section_min`].
pub fn golden_section_max<F>(mut f: F, a: f64, b: f64, tol: f64, max_iter: usize) -> (f64, f64)
where
    F: FnMut(f64) -> f64,
{
    let (x, fx) = golden_section_min(|x| -f(x), a, b, tol, max_iter);
    (x, -fx)
}

/// Index of the smallest value, ignoring NaNs. `None` when every value is NaN.
pub fn argmin(values: &[f64]) -> Option<usize> {
    values
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_nan())
        .min_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, _)| i)
}

/// `n` log-spaced points from `lo` to `hi` inclusive.
pub fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    assert!(lo > 0.0 && hi > lo && n >= 2);
    let (llo, lhi) = (lo.ln(), hi.ln());
    (0..n)
        .map(|i| (llo + (lhi - llo) * i as f64 / (n - 1) as f64).exp())
        .collect()
}

/// `n` evenly spaced points from `lo` to `hi` inclusive.
pub fn lin_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    assert!(hi > lo && n >= 2);
    (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect()
}

/// Bisection for a sign change of `g` on `[a, b]`, assuming `g(a) <= 0 <= g(b)`
/// (or the reverse). Returns the midpoint of the final bracket.
pub fn bisect<F>(mut g: F, a: f64, b: f64, tol: f64, max_iter: usize) -> f64
where
    F: FnMut(f64) -> f64,
{
    let (mut a, mut b) = (a, b);
    let ga = g(a);
    let increasing = ga <= 0.0;
    for _ in 0..max_iter {
        if (b - a).abs() <= tol {
            break;
        }
        let m = 0.5 * (a + b);
        let gm = g(m);
        if gm == 0.0 {
            return m;
        }
        if (gm < 0.0) == increasing {
            a = m;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

/// Number of direction reversals (decrease→increase or increase→decrease)
/// in a sampled sequence. A unimodal-minimum profile has at most one.
/// Steps smaller than `rel_tol * max(|a|, |b|)` count as flat.
pub fn direction_changes(values: &[f64], rel_tol: f64) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for w in values.windows(2) {
        let tol = rel_tol * w[0].abs().max(w[1].abs());
        let dir = if w[1] - w[0] > tol {
            1
        } else if w[0] - w[1] > tol {
            -1
        } else {
            0
        };
        if dir != 0 {
            if last != 0 && dir != last {
                changes += 1;
            }
            last = dir;
        }
    }
    changes
}
