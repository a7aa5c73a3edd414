//! Nonnegative potentials sampled at the atoms of a measure.

use crate::error::{domain, Result};
use crate::measure::{AtomicMeasure, Point};
use std::fmt;
use std::sync::Arc;

pub type Profile = Arc<dyn Fn(Point) -> f64 + Send + Sync>;

/// Values `V(xᵢ) ≥ 0` at the atoms, optionally remembering the closed form
/// they were sampled from so the field can be re-sampled on another measure.
#[derive(Clone)]
pub struct PotentialField {
    values: Vec<f64>,
    profile: Option<Profile>,
}

impl fmt::Debug for PotentialField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PotentialField")
            .field("len", &self.values.len())
            .field("closed_form", &self.profile.is_some())
            .finish()
    }
}

fn check(values: &[f64]) -> Result<()> {
    match values.iter().position(|v| !(v.is_finite() && *v >= 0.0)) {
        Some(i) => Err(domain(format!("potential value {} at atom {i} is not finite and nonnegative", values[i]))),
        None => Ok(()),
    }
}

impl PotentialField {
    pub fn from_values(measure: &AtomicMeasure, values: Vec<f64>) -> Result<Self> {
        if values.len() != measure.len() {
            return Err(domain(format!("{} values for {} atoms", values.len(), measure.len())));
        }
        check(&values)?;
        Ok(Self { values, profile: None })
    }

    pub fn from_fn(measure: &AtomicMeasure, f: impl Fn(Point) -> f64 + Send + Sync + 'static) -> Result<Self> {
        let profile: Profile = Arc::new(f);
        Self::from_profile(measure, profile)
    }

    pub fn from_profile(measure: &AtomicMeasure, profile: Profile) -> Result<Self> {
        let values: Vec<f64> = measure.points().iter().map(|p| profile(*p)).collect();
        check(&values)?;
        Ok(Self { values, profile: Some(profile) })
    }

    pub fn constant(measure: &AtomicMeasure, c: f64) -> Result<Self> {
        Self::from_fn(measure, move |_| c)
    }

    /// A function of `|x|` only.
    pub fn radial(measure: &AtomicMeasure, f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Result<Self> {
        Self::from_fn(measure, move |p| f(p[0].hypot(p[1])))
    }

    pub fn zero(measure: &AtomicMeasure) -> Self {
        Self { values: vec![0.0; measure.len()], profile: Some(Arc::new(|_| 0.0)) }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn has_closed_form(&self) -> bool {
        self.profile.is_some()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| *v == 0.0)
    }

    /// `γ V`.
    pub fn scaled(&self, gamma: f64) -> Result<Self> {
        if !(gamma.is_finite() && gamma >= 0.0) {
            return Err(domain(format!("coupling must be finite and nonnegative, got {gamma}")));
        }
        let profile = self.profile.clone().map(|p| -> Profile { Arc::new(move |x| gamma * p(x)) });
        Ok(Self { values: self.values.iter().map(|v| gamma * v).collect(), profile })
    }

    /// Evaluates the closed form on another measure; table potentials cannot be re-sampled.
    pub fn resample(&self, measure: &AtomicMeasure) -> Result<Self> {
        match &self.profile {
            Some(p) => Self::from_profile(measure, p.clone()),
            None => Err(domain("a tabulated potential has no closed form to re-sample")),
        }
    }

    /// Values restricted to the given atom indices.
    pub fn restrict(&self, idx: &[usize]) -> Vec<f64> {
        idx.iter().map(|&i| self.values[i]).collect()
    }

    /// `∫ V dμ`.
    pub fn integral(&self, measure: &AtomicMeasure) -> f64 {
        self.values.iter().zip(measure.weights()).map(|(v, w)| v * w).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::generate_circle;

    #[test]
    fn validation_and_resampling() {
        let m = generate_circle([0.0, 0.0], 1.0, 10).unwrap();
        assert!(PotentialField::from_values(&m, vec![1.0; 9]).is_err());
        assert!(PotentialField::from_values(&m, vec![-1.0; 10]).is_err());
        assert!(PotentialField::constant(&m, f64::NAN).is_err());
        let v = PotentialField::radial(&m, |r| 2.0 * r).unwrap();
        assert!(v.values().iter().all(|x| (x - 2.0).abs() < 1e-14));
        let m2 = generate_circle([0.0, 0.0], 3.0, 5).unwrap();
        let v2 = v.scaled(0.5).unwrap().resample(&m2).unwrap();
        assert!(v2.values().iter().all(|x| (x - 3.0).abs() < 1e-14));
        let table = PotentialField::from_values(&m, vec![1.0; 10]).unwrap();
        assert!(table.resample(&m2).is_err());
        assert!((table.integral(&m) - 2.0 * std::f64::consts::PI).abs() < 1e-12);
        assert!(PotentialField::zero(&m).is_zero());
    }
}
