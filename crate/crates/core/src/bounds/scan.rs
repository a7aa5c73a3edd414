//! Coupling-constant scans and threshold sensitivity.

use super::{theorem1_bound, weak_l1_norm, BoundConfig};
use crate::decomposition::{d_sequence, g_sequence, AnnularScheme, Sequence};
use crate::error::{domain, Result};
use crate::measure::AtomicMeasure;
use crate::potential::PotentialField;
use rayon::prelude::*;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanRow {
    pub gamma: f64,
    /// `4 Σ_{Gₙ > 1/4} √Gₙ` for `γV`.
    pub g_term: f64,
    /// `A Σ_{𝓓ₙ > c} 𝓓ₙ` for `γV`.
    pub d_term: f64,
    pub bound: f64,
    pub weak_l1: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanSummary {
    pub rows: Vec<ScanRow>,
    /// Log–log slopes against `γ` over the rows where the quantity is positive.
    pub g_term_exponent: Option<f64>,
    pub d_term_exponent: Option<f64>,
    pub bound_exponent: Option<f64>,
}

/// Least-squares slope of `ln y` against `ln x` over points with `x, y > 0`;
/// `None` with fewer than two such points.
pub fn loglog_slope(xs: &[f64], ys: &[f64]) -> Option<f64> {
    let pts: Vec<(f64, f64)> =
        xs.iter().zip(ys).filter(|(x, y)| **x > 0.0 && **y > 0.0).map(|(x, y)| (x.ln(), y.ln())).collect();
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// Recomputes `Gₙ`, `𝓓ₙ` and the main bound for each `γV`.
pub fn coupling_scan(
    v: &PotentialField,
    measure: &AtomicMeasure,
    scheme: &AnnularScheme,
    gammas: &[f64],
    config: &BoundConfig,
) -> Result<ScanSummary> {
    if gammas.iter().any(|g| !(*g > 0.0 && g.is_finite())) || gammas.windows(2).any(|w| w[1] <= w[0]) {
        return Err(domain("coupling grid must be positive and strictly increasing"));
    }
    let rows: Vec<ScanRow> = gammas
        .par_iter()
        .map(|&gamma| {
            let vg = v.scaled(gamma)?;
            let g = g_sequence(&vg, measure);
            let d = d_sequence(&vg, measure, scheme)?;
            let r = theorem1_bound(&g, &d, config);
            Ok(ScanRow {
                gamma,
                g_term: r.radial_term,
                d_term: r.nonradial_term,
                bound: r.total,
                weak_l1: weak_l1_norm(g.values().copied()),
            })
        })
        .collect::<Result<_>>()?;
    let col = |f: fn(&ScanRow) -> f64| rows.iter().map(f).collect::<Vec<f64>>();
    Ok(ScanSummary {
        g_term_exponent: loglog_slope(gammas, &col(|r| r.g_term)),
        d_term_exponent: loglog_slope(gammas, &col(|r| r.d_term)),
        bound_exponent: loglog_slope(gammas, &col(|r| r.bound)),
        rows,
    })
}

/// The main bound for each threshold in `cs` with everything else fixed.
pub fn c_sensitivity(g: &Sequence, d: &Sequence, config: &BoundConfig, cs: &[f64]) -> Vec<(f64, f64)> {
    cs.iter().map(|&c| (c, theorem1_bound(g, d, &BoundConfig { c, ..*config }).total)).collect()
}
