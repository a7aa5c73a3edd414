//! The radial push-forward `ν(I) = ∫_{|x|∈I} V dμ`.

use crate::measure::AtomicMeasure;
use crate::potential::PotentialField;

/// Radii closer than this relative gap are one shell.
const MERGE_REL: f64 = 1e-12;

/// Atoms `(r, mass)` sorted by radius, all with `r > 0` and `mass > 0`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct RadialMeasure {
    atoms: Vec<(f64, f64)>,
}

impl RadialMeasure {
    /// Sorts, drops zero masses and non-positive radii, and merges shells.
    ///
    /// A merged shell sits at the mass-weighted geometric mean radius, so
    /// `Σ ln(r)·mass` is preserved exactly up to rounding.
    pub fn from_atoms(mut raw: Vec<(f64, f64)>) -> Self {
        raw.retain(|&(r, m)| r > 0.0 && m > 0.0);
        raw.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut atoms: Vec<(f64, f64)> = Vec::new();
        let mut start = f64::NAN;
        let mut tsum = 0.0;
        for (r, m) in raw {
            match atoms.last_mut() {
                Some(last) if r - start <= MERGE_REL * start => {
                    tsum += r.ln() * m;
                    last.1 += m;
                    last.0 = (tsum / last.1).exp();
                }
                _ => {
                    start = r;
                    tsum = r.ln() * m;
                    atoms.push((r, m));
                }
            }
        }
        Self { atoms }
    }

    pub fn atoms(&self) -> &[(f64, f64)] {
        &self.atoms
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn total_mass(&self) -> f64 {
        self.atoms.iter().map(|a| a.1).sum()
    }

    /// `ν` with every mass multiplied by `c`.
    pub fn scaled(&self, c: f64) -> Self {
        Self::from_atoms(self.atoms.iter().map(|&(r, m)| (r, c * m)).collect())
    }
}

/// One shell per distinct `|xᵢ| > 0` with mass `Σ V(xᵢ) wᵢ`.
pub fn radialize(v: &PotentialField, measure: &AtomicMeasure) -> RadialMeasure {
    RadialMeasure::from_atoms(
        measure
            .points()
            .iter()
            .zip(measure.weights())
            .zip(v.values())
            .map(|((p, w), vi)| (p[0].hypot(p[1]), vi * w))
            .collect(),
    )
}
