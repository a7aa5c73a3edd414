//! Eigenvalue-count upper bounds and weak-ℓ¹ diagnostics.

mod calibrate;
mod scan;

pub use calibrate::{calibrate, Calibration, CalibrationSample};
pub use scan::{c_sensitivity, coupling_scan, loglog_slope, ScanRow, ScanSummary};

use crate::decomposition::Sequence;
use crate::error::{domain, Result};
use crate::measure::AtomicMeasure;
use crate::orlicz::{orlicz_norm, NFunctionPair, WeightedSampleSpace};
use crate::potential::PotentialField;
use serde::{Deserialize, Serialize};

/// Threshold on `Gₙ` in the main bound.
pub const G_THRESHOLD: f64 = 0.25;
/// Factor in front of `Σ √Gₙ`.
pub const G_FACTOR: f64 = 4.0;
/// Threshold on `𝓖ₙ` in the radial bound.
pub const CAL_G_THRESHOLD: f64 = 0.046;
/// Factor in front of `Σ √𝓖ₙ`.
pub const CAL_G_FACTOR: f64 = 7.61;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// Arbitrary defaults; the constants exist but have no known values.
    PaperPlaceholder,
    /// Smallest values consistent with a validation suite; not rigorous.
    Calibrated,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundConfig {
    #[serde(rename = "A")]
    pub a: f64,
    pub c: f64,
    #[serde(rename = "B")]
    pub b: f64,
    pub provenance: Provenance,
}

impl Default for BoundConfig {
    fn default() -> Self {
        Self { a: 100.0, c: 0.01, b: 100.0, provenance: Provenance::PaperPlaceholder }
    }
}

impl BoundConfig {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("A", self.a), ("c", self.c), ("B", self.b)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(domain(format!("{name} must be positive and finite, got {v}")));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    /// `4 Σ_{Gₙ > 1/4} √Gₙ`.
    pub radial_term: f64,
    /// `A Σ_{𝓓ₙ > c} 𝓓ₙ`.
    pub nonradial_term: f64,
    pub total: f64,
    pub g_indices: Vec<i64>,
    pub d_indices: Vec<i64>,
    pub config: BoundConfig,
}

/// `1 + 4 Σ_{Gₙ > 1/4} √Gₙ + A Σ_{𝓓ₙ > c} 𝓓ₙ`.
pub fn theorem1_bound(g: &Sequence, d: &Sequence, config: &BoundConfig) -> BoundReport {
    let g_indices: Vec<i64> = g.iter().filter(|(_, &x)| x > G_THRESHOLD).map(|(&n, _)| n).collect();
    let d_indices: Vec<i64> = d.iter().filter(|(_, &x)| x > config.c).map(|(&n, _)| n).collect();
    let radial_term = G_FACTOR * g_indices.iter().map(|n| g[n].sqrt()).sum::<f64>();
    let nonradial_term = config.a * d_indices.iter().map(|n| d[n]).sum::<f64>();
    BoundReport {
        radial_term,
        nonradial_term,
        total: 1.0 + radial_term + nonradial_term,
        g_indices,
        d_indices,
        config: *config,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadialBound {
    /// `1 + 7.61 Σ_{𝓖ₙ > 0.046} √𝓖ₙ`.
    pub cal_g_form: f64,
    /// `1 + 4 Σ_{Gₙ > 1/4} √Gₙ`.
    pub g_form: f64,
}

fn threshold_sqrt_sum(a: &Sequence, threshold: f64) -> f64 {
    a.values().filter(|&&x| x > threshold).map(|x| x.sqrt()).sum()
}

/// `1 + 7.61 Σ_{𝓖ₙ > 0.046} √𝓖ₙ`.
pub fn radial_bound(cal_g: &Sequence) -> f64 {
    1.0 + CAL_G_FACTOR * threshold_sqrt_sum(cal_g, CAL_G_THRESHOLD)
}

/// `1 + 4 Σ_{Gₙ > 1/4} √Gₙ`.
pub fn radial_bound_g_form(g: &Sequence) -> f64 {
    1.0 + G_FACTOR * threshold_sqrt_sum(g, G_THRESHOLD)
}

/// Both radial forms, with `G` taken as `2π𝓖`.
pub fn radial_bounds(cal_g: &Sequence) -> RadialBound {
    let g: Sequence = cal_g.iter().map(|(&n, &x)| (n, 2.0 * std::f64::consts::PI * x)).collect();
    RadialBound { cal_g_form: radial_bound(cal_g), g_form: radial_bound_g_form(&g) }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CorollaryReport {
    /// `∫ V ln(1 + |x|) dμ`.
    pub log_term: f64,
    /// `‖V‖_{𝓑, ℝ², μ}`.
    pub norm_term: f64,
    pub total: f64,
}

/// `1 + B (∫ V ln(1 + |x|) dμ + ‖V‖_𝓑)`.
pub fn corollary_bound(v: &PotentialField, measure: &AtomicMeasure, config: &BoundConfig) -> Result<CorollaryReport> {
    let log_term = measure
        .points()
        .iter()
        .zip(measure.weights())
        .zip(v.values())
        .map(|((p, w), vi)| vi * w * p[0].hypot(p[1]).ln_1p())
        .sum();
    let norm_term = if measure.is_empty() {
        0.0
    } else {
        let space = WeightedSampleSpace::new(measure.weights().to_vec())?;
        orlicz_norm(v.values(), &space, &NFunctionPair::b_a())?
    };
    Ok(CorollaryReport { log_term, norm_term, total: 1.0 + config.b * (log_term + norm_term) })
}

/// Smallest `B` with `corollary ≥ theorem`; `None` if the corollary
/// integrals vanish while the theorem bound exceeds 1.
pub fn domination_constant(theorem_total: f64, corollary: &CorollaryReport) -> Option<f64> {
    let s = corollary.log_term + corollary.norm_term;
    if theorem_total <= 1.0 {
        Some(0.0)
    } else if s > 0.0 {
        Some((theorem_total - 1.0) / s)
    } else {
        None
    }
}

/// `sup_{s>0} s·#{n : |aₙ| > s} = max_k k·a_(k)` over the decreasing rearrangement.
pub fn weak_l1_norm(a: impl IntoIterator<Item = f64>) -> f64 {
    let mut v: Vec<f64> = a.into_iter().map(f64::abs).collect();
    v.sort_by(|x, y| y.total_cmp(x));
    v.iter().enumerate().map(|(k, x)| (k + 1) as f64 * x).fold(0.0, f64::max)
}

/// `Σ_{aₙ > c} √aₙ`.
pub fn sqrt_sum_above(a: impl IntoIterator<Item = f64>, c: f64) -> f64 {
    a.into_iter().filter(|&x| x > c).map(f64::sqrt).sum()
}
