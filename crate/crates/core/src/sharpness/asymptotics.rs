use serde::Serialize;

use crate::error::{domain, Result};
use crate::orlicz::inv_b;
use crate::roots;

/// `ϱ(t) = t·𝓑⁻¹(1/t)`.
pub fn rho(t: f64) -> Result<f64> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(domain(format!("rho needs t > 0, got {t}")));
    }
    Ok(t * inv_b(1.0 / t)?)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BinvRow {
    pub t: f64,
    pub tau: f64,
    /// `|τ/√(2t) − 1|`.
    pub large_dev: f64,
    /// `|τ ln(1/t) − 1|`, only for `t < 1`.
    pub small_dev: Option<f64>,
    /// `|τ ln(1/t) − 1 − ln ln(1/t)/ln(1/t)|`, only for `t < 1/e`.
    pub two_term_dev: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BinvReport {
    pub rows: Vec<BinvRow>,
    /// `τ` strictly increasing along the grid.
    pub increasing: bool,
}

impl BinvReport {
    pub fn row(&self, t: f64) -> Option<&BinvRow> {
        self.rows.iter().find(|r| r.t == t)
    }
}

/// `τ(t) = t·𝓑⁻¹(1/t)` on a grid with its deviations from the large-`t`
/// and small-`t` forms.
pub fn binv_asymptotics(t_grid: &[f64]) -> Result<BinvReport> {
    let rows = t_grid
        .iter()
        .map(|&t| {
            let tau = rho(t)?;
            let l = (1.0 / t).ln();
            Ok(BinvRow {
                t,
                tau,
                large_dev: (tau / (2.0 * t).sqrt() - 1.0).abs(),
                small_dev: (t < 1.0).then(|| (tau * l - 1.0).abs()),
                two_term_dev: (l > 1.0).then(|| (tau * l - 1.0 - l.ln() / l).abs()),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut sorted: Vec<(f64, f64)> = rows.iter().map(|r| (r.t, r.tau)).collect();
    sorted.sort_by(|a, b| a.0.total_cmp(&b.0));
    let increasing = sorted.windows(2).all(|w| w[0].0 == w[1].0 || w[1].1 > w[0].1);
    Ok(BinvReport { rows, increasing })
}

/// Principal branch of `w e^w = v` for `v > 0` (Halley iteration).
pub fn lambert_w(v: f64) -> Result<f64> {
    if !(v > 0.0 && v.is_finite()) {
        return Err(domain(format!("lambert_w needs v > 0, got {v}")));
    }
    let e = std::f64::consts::E;
    let mut w = if v > e {
        let l = v.ln();
        l - l.ln()
    } else {
        v.ln_1p() * 0.9 + 0.1 * v / e
    };
    for _ in 0..100 {
        let ew = w.exp();
        let f = w * ew - v;
        let d = ew * (w + 1.0);
        let step = f / (d - (w + 2.0) * f / (2.0 * w + 2.0));
        w -= step;
        if step.abs() <= 4.0 * f64::EPSILON * w.abs() {
            break;
        }
    }
    Ok(w)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LambertCheck {
    pub v: f64,
    pub w: f64,
    /// `|w e^w − v|`.
    pub residual: f64,
    /// `|w − (ln v − ln ln v + ln ln v/ln v)|`.
    pub remainder: f64,
    /// `3 (ln ln v/ln v)²`.
    pub remainder_bound: f64,
}

/// `W(v)` with its residual and the three-term large-`v` expansion; needs `v > e`.
pub fn lambert_check(v: f64) -> Result<LambertCheck> {
    if !(v > std::f64::consts::E) {
        return Err(domain(format!("the expansion needs v > e, got {v}")));
    }
    let w = lambert_w(v)?;
    let (l1, l2) = (v.ln(), v.ln().ln());
    Ok(LambertCheck {
        v,
        w,
        residual: (w * w.exp() - v).abs(),
        remainder: (w - (l1 - l2 + l2 / l1)).abs(),
        remainder_bound: 3.0 * (l2 / l1).powi(2),
    })
}

/// `φ = ϱ⁻¹` at `τ`, by bisection in `ln t`.
pub fn phi(tau: f64) -> Result<f64> {
    let (lo, hi) = (-690.0f64, 690.0f64);
    let f = |u: f64| rho(u.exp()).map(|r| r - tau).unwrap_or(f64::NAN);
    if !(f(lo) < 0.0 && f(hi) > 0.0) {
        return Err(domain(format!("tau = {tau} is outside the range of rho on [e^-690, e^690]")));
    }
    Ok(roots::bisect(f, lo, hi, 0.0)?.exp())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhiRow {
    pub tau: f64,
    pub phi: f64,
    /// `ln(φ(τ) e^{1/τ}/τ)`.
    pub log_ratio: f64,
    /// `|ϱ(φ(τ)) − τ|`.
    pub inverse_residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhiReport {
    pub rows: Vec<PhiRow>,
    pub max_abs_log_ratio: f64,
    pub max_inverse_residual: f64,
    /// `φ` strictly increasing along the sorted grid.
    pub increasing: bool,
}

/// `φ(τ)` against `τ e^{−1/τ}` on a grid in `(0, 0.2]`.
pub fn phi_asymptotics(tau_grid: &[f64]) -> Result<PhiReport> {
    if let Some(t) = tau_grid.iter().find(|t| !(**t > 0.0 && **t <= 0.2)) {
        return Err(domain(format!("tau grid must lie in (0, 0.2], found {t}")));
    }
    let mut rows = tau_grid
        .iter()
        .map(|&tau| {
            let p = phi(tau)?;
            Ok(PhiRow {
                tau,
                phi: p,
                log_ratio: p.ln() + 1.0 / tau - tau.ln(),
                inverse_residual: (rho(p)? - tau).abs(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by(|a, b| a.tau.total_cmp(&b.tau));
    let increasing = rows.windows(2).all(|w| w[0].tau == w[1].tau || w[1].phi > w[0].phi);
    Ok(PhiReport {
        max_abs_log_ratio: rows.iter().map(|r| r.log_ratio.abs()).fold(0.0, f64::max),
        max_inverse_residual: rows.iter().map(|r| r.inverse_residual).fold(0.0, f64::max),
        increasing,
        rows,
    })
}
