//! Exponential-dyadic intervals, annuli `Qₙ`, the radial measure `ν`, the
//! sequences `Gₙ`, `𝓖ₙ`, `𝓓ₙ`, and equal-norm square covers.

mod annuli;
mod cover;
mod export;
mod radial;

pub use annuli::{build_annuli, AnnularScheme, SchemeOptions};
pub use cover::{equal_norm_cover, CoverConfig, SquareCover};
pub use export::{sequence_rows, write_sequences_csv, SequenceRow};
pub use radial::{radialize, RadialMeasure};

use crate::error::Result;
use crate::measure::AtomicMeasure;
use crate::orlicz::{average_norm, NFunctionPair, WeightedSampleSpace};
use crate::potential::PotentialField;
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::f64::consts::PI;

pub type Sequence = BTreeMap<i64, f64>;

/// Endpoint slack in `t = ln r` for the closed intervals.
const T_TOL: f64 = 1e-10;

/// The interval `𝐈ₙ` in `t = ln r`: `[−1, 1]` for `n = 0`,
/// `[2^{n−1}, 2ⁿ]` for `n > 0` and its mirror image for `n < 0`.
pub fn t_interval(n: i64) -> (f64, f64) {
    match n {
        0 => (-1.0, 1.0),
        n if n > 0 => (2f64.powi(n as i32 - 1), 2f64.powi(n as i32)),
        n => (-(2f64.powi(-n as i32)), -(2f64.powi(-n as i32 - 1))),
    }
}

/// `Jₙ` as a radius interval `[e^{lo}, e^{hi}]`.
pub fn j_interval(n: i64) -> (f64, f64) {
    let (a, b) = t_interval(n);
    (a.exp(), b.exp())
}

/// Indices `n` with `t ∈ 𝐈ₙ` (closed, so shared endpoints give two indices).
pub fn interval_indices(t: f64) -> Vec<i64> {
    let mut out = Vec::with_capacity(2);
    let a = t.abs();
    let tol = T_TOL * a.max(1.0);
    if a <= 1.0 + tol {
        out.push(0);
    }
    if a >= 1.0 - tol {
        // a just below 2^k still touches [2^k, 2^{k+1}] within the slack
        let k = a.log2().floor() as i64;
        let sign = if t < 0.0 { -1 } else { 1 };
        for n in k..=k + 2 {
            if n < 1 {
                continue;
            }
            let (lo, hi) = t_interval(n);
            if a >= lo - tol && a <= hi + tol {
                out.push(sign * n);
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Accumulates `weight(t)·mass` over every interval index containing `t`.
fn accumulate(items: impl Iterator<Item = (f64, f64)>) -> Sequence {
    let mut seq = Sequence::new();
    for (t, mass) in items {
        if mass == 0.0 {
            continue;
        }
        for n in interval_indices(t) {
            let weight = if n == 0 { 1.0 } else { t.abs() };
            *seq.entry(n).or_insert(0.0) += weight * mass;
        }
    }
    seq
}

/// `Gₙ` for every index with a nonzero contribution. Atoms at the origin are
/// skipped (`|ln|x|| = ∞` there; a positive `V` at 0 is reported by the caller).
pub fn g_sequence(v: &PotentialField, measure: &AtomicMeasure) -> Sequence {
    accumulate(
        measure
            .points()
            .iter()
            .zip(measure.weights())
            .zip(v.values())
            .filter(|((p, _), _)| p[0] != 0.0 || p[1] != 0.0)
            .map(|((p, w), vi)| (p[0].hypot(p[1]).ln(), vi * w)),
    )
}

/// `Gₙ`; 0 when `n` carries no mass.
pub fn compute_gn(v: &PotentialField, measure: &AtomicMeasure, n: i64) -> f64 {
    g_sequence(v, measure).get(&n).copied().unwrap_or(0.0)
}

/// `𝓖ₙ` for every index with a nonzero contribution.
pub fn cal_g_sequence(nu: &RadialMeasure) -> Sequence {
    let mut seq = accumulate(nu.atoms().iter().map(|&(r, m)| (r.ln(), m)));
    for x in seq.values_mut() {
        *x /= 2.0 * PI;
    }
    seq
}

/// `𝓖ₙ`; 0 when `n` carries no mass.
pub fn compute_cal_gn(nu: &RadialMeasure, n: i64) -> f64 {
    cal_g_sequence(nu).get(&n).copied().unwrap_or(0.0)
}

/// `𝓓ₙ = ‖V‖^(av)_{𝓑, Qₙ, μ}`; 0 for an empty annulus.
pub fn compute_dn(v: &PotentialField, measure: &AtomicMeasure, scheme: &AnnularScheme, n: i64) -> Result<f64> {
    let idx = scheme.members(measure, n);
    if idx.is_empty() {
        return Ok(0.0);
    }
    let space = WeightedSampleSpace::new(idx.iter().map(|&i| measure.weights()[i]).collect())?;
    average_norm(&v.restrict(&idx), &space, &NFunctionPair::b_a())
}

/// `𝓓ₙ` over the scheme's index range, computed in parallel.
pub fn d_sequence(v: &PotentialField, measure: &AtomicMeasure, scheme: &AnnularScheme) -> Result<Sequence> {
    let vals: Vec<(i64, f64)> = scheme
        .n_range()
        .par_iter()
        .map(|&n| compute_dn(v, measure, scheme, n).map(|d| (n, d)))
        .collect::<Result<_>>()?;
    Ok(vals.into_iter().filter(|(_, d)| *d > 0.0).collect())
}
