//! CSV rows `(n, inner_radius, outer_radius, mass, G_n, D_n)`.

use super::{AnnularScheme, Sequence};
use crate::measure::AtomicMeasure;
use serde::Serialize;
use std::collections::BTreeSet;
use std::io::Write;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SequenceRow {
    pub n: i64,
    pub inner_radius: f64,
    pub outer_radius: f64,
    /// `μ(Qₙ)`.
    pub mass: f64,
    pub g_n: f64,
    pub d_n: f64,
}

/// One row per index appearing in the annuli, `Gₙ` or `𝓓ₙ`.
pub fn sequence_rows(measure: &AtomicMeasure, scheme: &AnnularScheme, g: &Sequence, d: &Sequence) -> Vec<SequenceRow> {
    let ns: BTreeSet<i64> = scheme.n_range().iter().chain(g.keys()).chain(d.keys()).copied().collect();
    ns.into_iter()
        .map(|n| SequenceRow {
            n,
            inner_radius: scheme.inner(n),
            outer_radius: scheme.outer(n),
            mass: scheme.members(measure, n).iter().map(|&i| measure.weights()[i]).sum::<f64>() + 0.0,
            g_n: g.get(&n).copied().unwrap_or(0.0),
            d_n: d.get(&n).copied().unwrap_or(0.0),
        })
        .collect()
}

pub fn write_sequences_csv(rows: &[SequenceRow], mut out: impl Write) -> std::io::Result<()> {
    writeln!(out, "n,inner_radius,outer_radius,mass,G_n,D_n")?;
    for r in rows {
        writeln!(out, "{},{:e},{:e},{:e},{:e},{:e}", r.n, r.inner_radius, r.outer_radius, r.mass, r.g_n, r.d_n)?;
    }
    Ok(())
}
