//! Atomic approximations of Ahlfors-regular measures in the plane.

mod ahlfors;
mod direction;
mod generate;
pub mod geometry;
mod index;
mod io;
mod kappa;

pub use ahlfors::{verify_ahlfors, verify_ahlfors_at, AhlforsEstimate, Extreme};
pub use direction::{max_line_mass, pick_direction, pick_direction_from, DirectionChoice};
pub use generate::{generate_circle, generate_ifs, generate_lebesgue, generate_polyline, Rect, Similarity};
pub use geometry::{diameter, Point, Region, Square};
pub use index::BallIndex;
pub use io::{read_measure, write_measure};
pub use kappa::kappa0;

use crate::error::{domain, Result};

/// A finite sum of weighted point masses together with its regularity data.
#[derive(Debug, Clone, PartialEq)]
pub struct AtomicMeasure {
    points: Vec<Point>,
    weights: Vec<f64>,
    alpha: f64,
    c0_est: Option<f64>,
    c1_est: Option<f64>,
    diam_support: f64,
    truncated: bool,
    generator_tag: String,
    cell_size: f64,
}

impl AtomicMeasure {
    /// Validates weights (finite, > 0), points (finite) and `alpha ∈ (0, 2]`.
    pub fn new(points: Vec<Point>, weights: Vec<f64>, alpha: f64, generator_tag: impl Into<String>) -> Result<Self> {
        if points.len() != weights.len() {
            return Err(domain(format!("{} points but {} weights", points.len(), weights.len())));
        }
        if !(alpha > 0.0 && alpha <= 2.0) {
            return Err(domain(format!("alpha must lie in (0, 2], got {alpha}")));
        }
        if let Some(i) = weights.iter().position(|w| !(w.is_finite() && *w > 0.0)) {
            return Err(domain(format!("weight {} at atom {i} is not strictly positive", weights[i])));
        }
        if let Some(i) = points.iter().position(|p| !(p[0].is_finite() && p[1].is_finite())) {
            return Err(domain(format!("atom {i} has a non-finite coordinate")));
        }
        let diam_support = diameter(&points);
        let cell_size = if points.is_empty() { 0.0 } else { diam_support / (points.len() as f64).powf(1.0 / alpha) };
        Ok(Self {
            points,
            weights,
            alpha,
            c0_est: None,
            c1_est: None,
            diam_support,
            truncated: false,
            generator_tag: generator_tag.into(),
            cell_size,
        })
    }

    /// Attaches Ahlfors constants; requires `0 < c0 ≤ c1`.
    pub fn with_ahlfors(mut self, c0: f64, c1: f64) -> Result<Self> {
        if !(c0 > 0.0 && c0 <= c1 && c1.is_finite()) {
            return Err(domain(format!("Ahlfors constants need 0 < c0 <= c1, got ({c0}, {c1})")));
        }
        self.c0_est = Some(c0);
        self.c1_est = Some(c1);
        Ok(self)
    }

    /// Marks the measure as a window of an unbounded family.
    pub fn with_truncated(mut self, truncated: bool) -> Self {
        self.truncated = truncated;
        self
    }

    /// Overrides the discretization scale used by smoothing and slack models.
    pub fn with_cell_size(mut self, h: f64) -> Self {
        self.cell_size = h;
        self
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }
    pub fn alpha(&self) -> f64 {
        self.alpha
    }
    pub fn c0_est(&self) -> Option<f64> {
        self.c0_est
    }
    pub fn c1_est(&self) -> Option<f64> {
        self.c1_est
    }
    /// Largest pairwise atom distance; for truncated windows this is the window's.
    pub fn diam_support(&self) -> f64 {
        self.diam_support
    }
    pub fn is_truncated(&self) -> bool {
        self.truncated
    }
    pub fn generator_tag(&self) -> &str {
        &self.generator_tag
    }
    pub fn cell_size(&self) -> f64 {
        self.cell_size
    }
    pub fn len(&self) -> usize {
        self.points.len()
    }
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
    pub fn total_mass(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// `μ(B̄(center, r))` by a linear scan.
    pub fn ball_mass(&self, center: Point, r: f64) -> f64 {
        let r2 = r * r * (1.0 + geometry::CLOSED_SLACK);
        self.points.iter().zip(&self.weights).filter(|(p, _)| geometry::dist2(**p, center) <= r2).map(|(_, w)| w).sum()
    }

    /// Mass of the atoms lying in a closed region.
    pub fn region_mass(&self, region: &Region) -> f64 {
        self.points.iter().zip(&self.weights).filter(|(p, _)| region.contains(**p)).map(|(_, w)| w).sum()
    }

    /// Indices of atoms lying in a closed region.
    pub fn indices_in(&self, region: &Region) -> Vec<usize> {
        (0..self.points.len()).filter(|&i| region.contains(self.points[i])).collect()
    }

    /// Spatial index for repeated ball queries.
    pub fn index(&self) -> BallIndex<'_> {
        BallIndex::new(self)
    }

    /// Same atoms mapped by `x ↦ R(angle)·x·scale`; Ahlfors constants rescale by `scale^α`.
    pub fn transformed(&self, scale: f64, angle: f64) -> Result<Self> {
        if !(scale > 0.0 && scale.is_finite()) {
            return Err(domain(format!("scale must be positive, got {scale}")));
        }
        let (s, c) = angle.sin_cos();
        let points =
            self.points.iter().map(|p| [scale * (c * p[0] - s * p[1]), scale * (s * p[0] + c * p[1])]).collect();
        let mut out = Self::new(points, self.weights.clone(), self.alpha, self.generator_tag.clone())?
            .with_truncated(self.truncated)
            .with_cell_size(self.cell_size * scale);
        if let (Some(c0), Some(c1)) = (self.c0_est, self.c1_est) {
            // μ(B(λx, λr)) = μ(B(x, r)) so the ratio scales by λ^{-α}
            let f = scale.powf(-self.alpha);
            out = out.with_ahlfors(c0 * f, c1 * f)?;
        }
        Ok(out)
    }

    /// Same atoms translated by `offset`.
    pub fn translated(&self, offset: Point) -> Self {
        let mut out = self.clone();
        for p in &mut out.points {
            p[0] += offset[0];
            p[1] += offset[1];
        }
        out
    }

    /// Union of two measures of the same dimension.
    pub fn union(&self, other: &AtomicMeasure) -> Result<Self> {
        if (self.alpha - other.alpha).abs() > 1e-12 {
            return Err(domain(format!("cannot join alpha {} with alpha {}", self.alpha, other.alpha)));
        }
        let mut points = self.points.clone();
        points.extend_from_slice(&other.points);
        let mut weights = self.weights.clone();
        weights.extend_from_slice(&other.weights);
        Ok(Self::new(points, weights, self.alpha, format!("{}+{}", self.generator_tag, other.generator_tag))?
            .with_truncated(self.truncated || other.truncated)
            .with_cell_size(self.cell_size.max(other.cell_size)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructor_validates() {
        assert!(AtomicMeasure::new(vec![[0.0, 0.0]], vec![0.0], 1.0, "x").is_err());
        assert!(AtomicMeasure::new(vec![[0.0, 0.0]], vec![1.0], 2.5, "x").is_err());
        assert!(AtomicMeasure::new(vec![[0.0, 0.0]], vec![1.0], 0.0, "x").is_err());
        assert!(AtomicMeasure::new(vec![[f64::NAN, 0.0]], vec![1.0], 1.0, "x").is_err());
        assert!(AtomicMeasure::new(vec![], vec![1.0], 1.0, "x").is_err());
        let m = AtomicMeasure::new(vec![[0.0, 0.0], [3.0, 4.0]], vec![1.0, 2.0], 1.0, "x").unwrap();
        assert!((m.diam_support() - 5.0).abs() < 1e-15);
        assert!(m.clone().with_ahlfors(2.0, 1.0).is_err());
        assert_eq!(m.with_ahlfors(1.0, 2.0).unwrap().c1_est(), Some(2.0));
    }

    #[test]
    fn ball_mass_is_closed() {
        let m = AtomicMeasure::new(vec![[0.0, 0.0], [1.0, 0.0]], vec![1.0, 2.0], 1.0, "x").unwrap();
        assert_eq!(m.ball_mass([0.0, 0.0], 1.0), 3.0);
        assert_eq!(m.ball_mass([0.0, 0.0], 0.999), 1.0);
    }

    #[test]
    fn transform_rescales_constants() {
        let m = AtomicMeasure::new(vec![[1.0, 0.0], [0.0, 1.0]], vec![1.0, 1.0], 1.0, "x")
            .unwrap()
            .with_ahlfors(1.0, 2.0)
            .unwrap();
        let t = m.transformed(2.0, std::f64::consts::FRAC_PI_2).unwrap();
        assert!((t.points()[0][1] - 2.0).abs() < 1e-15);
        assert!((t.c0_est().unwrap() - 0.5).abs() < 1e-15);
        assert!((t.diam_support() - 2.0 * 2f64.sqrt()).abs() < 1e-12);
    }
}
