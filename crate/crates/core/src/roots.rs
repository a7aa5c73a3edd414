//! Bracketed scalar solvers shared by the norm, inverse and asymptotics code.

use crate::error::{Error, Result};

/// Solves `f(x) = 0` for a continuous `f` with `f(lo) < 0 <= f(hi)` (either
/// orientation of monotonicity works as long as the signs differ).
///
/// Stops when the bracket is relatively narrower than `rel_tol` or after 400
/// halvings.
pub fn bisect<F: FnMut(f64) -> f64>(mut f: F, mut lo: f64, mut hi: f64, rel_tol: f64) -> Result<f64> {
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::NoConvergence(format!("bracket [{lo:e}, {hi:e}] does not change sign ({flo:e}, {fhi:e})")));
    }
    for _ in 0..400 {
        let mid = 0.5 * (lo + hi);
        if (hi - lo).abs() <= rel_tol * mid.abs().max(f64::MIN_POSITIVE) || mid == lo || mid == hi {
            return Ok(mid);
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Bisection in `ln x` for a positive root, with `lo, hi > 0`.
pub fn bisect_log<F: FnMut(f64) -> f64>(mut f: F, lo: f64, hi: f64, rel_tol: f64) -> Result<f64> {
    let u = bisect(|u| f(u.exp()), lo.ln(), hi.ln(), 0.0)?;
    // refine on the linear scale so the relative tolerance is honoured near the root
    let x = u.exp();
    let (a, b) = (x * (1.0 - 1e-9), x * (1.0 + 1e-9));
    let (fa, fb) = (f(a), f(b));
    if fa.signum() != fb.signum() && fa != 0.0 && fb != 0.0 {
        bisect(f, a, b, rel_tol)
    } else {
        Ok(x)
    }
}

/// Expands `[lo, hi]` geometrically until a decreasing function `g` satisfies
/// `g(lo) > 0 >= g(hi)`; both ends must be positive.
pub fn expand_decreasing<F: FnMut(f64) -> f64>(mut g: F, mut lo: f64, mut hi: f64) -> Result<(f64, f64)> {
    for _ in 0..2000 {
        if g(lo) > 0.0 {
            break;
        }
        lo *= 0.5;
        if lo < 1e-300 {
            return Err(Error::NoConvergence("lower bracket underflowed".into()));
        }
    }
    for _ in 0..2000 {
        if g(hi) <= 0.0 {
            return Ok((lo, hi));
        }
        hi *= 2.0;
        if !hi.is_finite() {
            break;
        }
    }
    Err(Error::NoConvergence("upper bracket overflowed".into()))
}
