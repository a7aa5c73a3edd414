use crate::error::{domain, Result};

/// A finite measure space: atoms indexed `0..len()` carrying strictly positive
/// weights.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedSampleSpace {
    weights: Vec<f64>,
    total_mass: f64,
}

impl WeightedSampleSpace {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if let Some((i, w)) = weights.iter().enumerate().find(|(_, w)| !(w.is_finite() && **w > 0.0)) {
            return Err(domain(format!("atom {i} has weight {w}; weights must be finite and > 0")));
        }
        let total_mass = weights.iter().sum();
        Ok(Self { weights, total_mass })
    }

    /// `n` atoms of equal weight `mass / n`.
    pub fn uniform(n: usize, mass: f64) -> Result<Self> {
        Self::new(vec![mass / n as f64; n])
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn total_mass(&self) -> f64 {
        self.total_mass
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// The same atoms with every weight multiplied by `c > 0`.
    pub fn scaled(&self, c: f64) -> Result<Self> {
        Self::new(self.weights.iter().map(|w| w * c).collect())
    }

    /// The sub-space on the given atom indices.
    pub fn restrict(&self, indices: &[usize]) -> Result<Self> {
        Self::new(indices.iter().map(|&i| self.weights[i]).collect())
    }
}
