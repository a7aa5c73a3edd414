//! Smallest constants `A`, `B` consistent with observed counts.

use super::{BoundConfig, Provenance, G_FACTOR, G_THRESHOLD};
use crate::decomposition::Sequence;
use serde::Serialize;

/// Floor applied to fitted constants so the result stays a valid config.
const FLOOR: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct CalibrationSample {
    pub label: String,
    pub g: Sequence,
    pub d: Sequence,
    /// `∫ V ln(1 + |x|) dμ + ‖V‖_𝓑`.
    pub corollary_integral: f64,
    /// Negative-eigenvalue count from the oracle.
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Calibration {
    pub config: BoundConfig,
    /// Samples no value of `A` can satisfy (no `𝓓ₙ` above `c`).
    pub infeasible_a: Vec<String>,
    /// Samples no value of `B` can satisfy (zero corollary integral).
    pub infeasible_b: Vec<String>,
}

/// Minimal `A` and `B` (at threshold `c`) such that every sample's count is
/// at most the corresponding bound.
pub fn calibrate(samples: &[CalibrationSample], c: f64) -> Calibration {
    let mut a = FLOOR;
    let mut b = FLOOR;
    let mut infeasible_a = Vec::new();
    let mut infeasible_b = Vec::new();
    for s in samples {
        let count = s.count as f64;
        let g_part = 1.0 + G_FACTOR * s.g.values().filter(|&&x| x > G_THRESHOLD).map(|x| x.sqrt()).sum::<f64>();
        let d_sum: f64 = s.d.values().filter(|&&x| x > c).sum();
        if count > g_part {
            if d_sum > 0.0 {
                a = a.max((count - g_part) / d_sum);
            } else {
                infeasible_a.push(s.label.clone());
            }
        }
        if count > 1.0 {
            if s.corollary_integral > 0.0 {
                b = b.max((count - 1.0) / s.corollary_integral);
            } else {
                infeasible_b.push(s.label.clone());
            }
        }
    }
    Calibration { config: BoundConfig { a, c, b, provenance: Provenance::Calibrated }, infeasible_a, infeasible_b }
}
