//! Empirical Ahlfors constants `min/max μ(B̄(x, r)) / r^α` over sampled balls.

use super::geometry::Point;
use super::AtomicMeasure;
use crate::error::{domain, Result};
use rayon::prelude::*;

/// One sampled ball and its density ratio.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extreme {
    pub center: Point,
    pub radius: f64,
    pub ratio: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AhlforsEstimate {
    pub c0: f64,
    pub c1: f64,
    pub argmin: Extreme,
    pub argmax: Extreme,
}

/// Samples `n_centers` atoms spread evenly through the atom list.
pub fn verify_ahlfors(measure: &AtomicMeasure, n_centers: usize, radii: &[f64]) -> Result<AhlforsEstimate> {
    if measure.is_empty() {
        return Err(domain("measure has no atoms"));
    }
    let n = measure.len();
    let k = n_centers.clamp(1, n);
    let centers: Vec<Point> = (0..k).map(|i| measure.points()[i * n / k]).collect();
    verify_ahlfors_at(measure, &centers, radii)
}

/// Same as [`verify_ahlfors`] with explicit centres.
pub fn verify_ahlfors_at(measure: &AtomicMeasure, centers: &[Point], radii: &[f64]) -> Result<AhlforsEstimate> {
    if measure.is_empty() {
        return Err(domain("measure has no atoms"));
    }
    if centers.is_empty() || radii.is_empty() {
        return Err(domain("need at least one centre and one radius"));
    }
    let diam = measure.diam_support();
    if let Some(r) = radii.iter().find(|&&r| !(r > 0.0 && r <= diam * (1.0 + 1e-9))) {
        return Err(domain(format!("radius {r} outside (0, diam = {diam}]")));
    }
    let alpha = measure.alpha();
    let index = measure.index();
    let samples: Vec<Extreme> = centers
        .par_iter()
        .flat_map_iter(|&c| {
            let index = &index;
            radii.iter().map(move |&r| Extreme { center: c, radius: r, ratio: index.ball_mass(c, r) / r.powf(alpha) })
        })
        .collect();
    let mut argmin = samples[0];
    let mut argmax = samples[0];
    for s in &samples[1..] {
        if s.ratio < argmin.ratio {
            argmin = *s;
        }
        if s.ratio > argmax.ratio {
            argmax = *s;
        }
    }
    Ok(AhlforsEstimate { c0: argmin.ratio, c1: argmax.ratio, argmin, argmax })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::{generate_lebesgue, generate_polyline, Rect};
    use std::f64::consts::PI;

    fn geom(lo: f64, hi: f64, k: usize) -> Vec<f64> {
        (0..k).map(|i| lo * (hi / lo).powf(i as f64 / (k - 1) as f64)).collect()
    }

    #[test]
    fn lebesgue_interior_ratio_near_one() {
        let m = generate_lebesgue(Rect::unit(), 200).unwrap();
        let est = verify_ahlfors_at(&m, &[[0.5, 0.5]], &geom(0.05, 0.5, 20)).unwrap();
        assert!(est.c1 / est.c0 <= 1.3, "{est:?}");
        // r = 0.5 exactly is the inscribed disk, so interior ratio stays near π
        assert!((est.c0 - PI).abs() < 0.05 * PI);
    }

    #[test]
    fn lebesgue_corner_is_quarter_disk() {
        let m = generate_lebesgue(Rect::unit(), 200).unwrap();
        let est = verify_ahlfors(&m, 400, &geom(0.05, 0.5, 8)).unwrap();
        assert!(est.c0 >= PI / 4.0 * 0.95, "{est:?}");
        assert!(est.c0 < PI / 4.0 * 1.1);
        assert!(est.c1 <= PI * 1.01);
        let corner = est.argmin.center;
        assert!(corner[0].min(1.0 - corner[0]) < 0.01 && corner[1].min(1.0 - corner[1]) < 0.01);
    }

    #[test]
    fn segment_endpoints_halve_the_mass() {
        let m = generate_polyline(&[[0.0, 0.0], [1.0, 0.0]], 1000.0).unwrap();
        let est = verify_ahlfors(&m, 1000, &geom(0.01, 0.4, 12)).unwrap();
        assert!((est.c0 - 1.0).abs() < 0.1, "{est:?}");
        assert!((est.c1 - 2.0).abs() < 0.2, "{est:?}");
    }

    #[test]
    fn full_ball_bounds_c1() {
        let m = generate_lebesgue(Rect { min: [0.0, 0.0], max: [2.0, 1.0] }, 30).unwrap();
        let d = m.diam_support();
        let est = verify_ahlfors(&m, 50, &[d]).unwrap();
        assert!(est.c1 >= m.total_mass() / d.powf(2.0) - 1e-12);
    }

    #[test]
    fn invalid_radii_rejected() {
        let m = generate_lebesgue(Rect::unit(), 10).unwrap();
        assert!(verify_ahlfors(&m, 3, &[0.0]).is_err());
        assert!(verify_ahlfors(&m, 3, &[10.0]).is_err());
    }
}
