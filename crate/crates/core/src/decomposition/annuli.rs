//! Annuli `Qₙ = {η ρ^{n−1} ≤ |x| ≤ η ρⁿ}` with `ρ = (2c₁/c₀)^{1/α}`.

use crate::error::{domain, Error, Result};
use crate::measure::{AtomicMeasure, Region};

/// Slack on the annulus index `ln(r/η)/ln ρ` for closed boundaries.
const INDEX_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Default, PartialEq)]
pub struct SchemeOptions {
    /// Replaces the measure's `c₁/c₀`.
    pub c_ratio: Option<f64>,
    /// When set, some atom must lie within this distance of the origin.
    pub origin_tolerance: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AnnularScheme {
    eta: f64,
    m: Option<i64>,
    ratio: f64,
    alpha: f64,
    c_ratio: f64,
    n_range: Vec<i64>,
}

impl AnnularScheme {
    /// Scheme for a support of diameter `diam` (`None` for unbounded support,
    /// which takes `η = 1`). Requires `diam > 1`.
    pub fn new(diam: Option<f64>, c_ratio: f64, alpha: f64) -> Result<Self> {
        if !(c_ratio >= 1.0 && c_ratio.is_finite()) {
            return Err(domain(format!("c1/c0 must be finite and >= 1, got {c_ratio}")));
        }
        if !(alpha > 0.0 && alpha <= 2.0) {
            return Err(domain(format!("alpha must lie in (0, 2], got {alpha}")));
        }
        let ratio = (2.0 * c_ratio).powf(1.0 / alpha);
        let (eta, m) = match diam {
            None => (1.0, None),
            Some(d) => {
                if !(d > 1.0 && d.is_finite()) {
                    return Err(Error::Precondition(format!(
                        "support diameter {d} must exceed 1; rescale the measure first"
                    )));
                }
                let m = (d.ln() / ratio.ln() - 1e-9).ceil() as i64;
                (d / ratio.powi(m as i32), Some(m))
            }
        };
        Ok(Self { eta, m, ratio, alpha, c_ratio, n_range: Vec::new() })
    }

    /// Replaces `η`; it must lie in `(1/ρ, 1]`. The cap `m` is dropped.
    pub fn with_eta(mut self, eta: f64) -> Result<Self> {
        if !(eta > 1.0 / self.ratio && eta <= 1.0) {
            return Err(domain(format!("eta {eta} outside (1/rho, 1] = ({}, 1]", 1.0 / self.ratio)));
        }
        self.eta = eta;
        self.m = None;
        Ok(self)
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }
    /// Index cap; `None` for unbounded support or a fixed `η`.
    pub fn m(&self) -> Option<i64> {
        self.m
    }
    pub fn ratio(&self) -> f64 {
        self.ratio
    }
    pub fn alpha(&self) -> f64 {
        self.alpha
    }
    pub fn c_ratio(&self) -> f64 {
        self.c_ratio
    }
    /// Indices of annuli carrying atoms, ascending.
    pub fn n_range(&self) -> &[i64] {
        &self.n_range
    }

    pub fn inner(&self, n: i64) -> f64 {
        self.eta * self.ratio.powi(n as i32 - 1)
    }

    pub fn outer(&self, n: i64) -> f64 {
        self.eta * self.ratio.powi(n as i32)
    }

    pub fn region(&self, n: i64) -> Region {
        Region::Annulus { center: [0.0, 0.0], inner: self.inner(n), outer: self.outer(n) }
    }

    /// Annuli containing radius `r > 0`; boundary radii belong to two.
    pub fn annulus_indices(&self, r: f64) -> Vec<i64> {
        if !(r > 0.0) {
            return Vec::new();
        }
        let u = (r / self.eta).ln() / self.ratio.ln();
        let k = u.round();
        if (u - k).abs() <= INDEX_TOL * u.abs().max(1.0) {
            vec![k as i64, k as i64 + 1]
        } else {
            vec![u.ceil() as i64]
        }
    }

    /// Atom indices of `measure` in the closed annulus `Qₙ`.
    pub fn members(&self, measure: &AtomicMeasure, n: i64) -> Vec<usize> {
        measure
            .points()
            .iter()
            .enumerate()
            .filter(|(_, p)| self.annulus_indices(p[0].hypot(p[1])).contains(&n))
            .map(|(i, _)| i)
            .collect()
    }

    /// Records which annuli carry atoms of `measure`.
    pub fn assign(mut self, measure: &AtomicMeasure) -> Self {
        let mut ns: Vec<i64> = measure.points().iter().flat_map(|p| self.annulus_indices(p[0].hypot(p[1]))).collect();
        ns.sort_unstable();
        ns.dedup();
        self.n_range = ns;
        self
    }
}

/// Builds the scheme from the measure's diameter and Ahlfors constants.
pub fn build_annuli(measure: &AtomicMeasure, opts: &SchemeOptions) -> Result<AnnularScheme> {
    let c_ratio = match (opts.c_ratio, measure.c0_est(), measure.c1_est()) {
        (Some(c), _, _) => c,
        (None, Some(c0), Some(c1)) => c1 / c0,
        _ => return Err(Error::Precondition("no Ahlfors constants: run verify_ahlfors or supply c1/c0".into())),
    };
    if let Some(tol) = opts.origin_tolerance {
        let nearest = measure.points().iter().map(|p| p[0].hypot(p[1])).fold(f64::INFINITY, f64::min);
        if !(nearest <= tol) {
            return Err(Error::Precondition(format!(
                "origin is not in the support (nearest atom at distance {nearest:e} > {tol:e}); translate the measure"
            )));
        }
    }
    let diam = if measure.is_truncated() { None } else { Some(measure.diam_support()) };
    Ok(AnnularScheme::new(diam, c_ratio, measure.alpha())?.assign(measure))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::{generate_circle, generate_lebesgue, Rect};

    #[test]
    fn lebesgue_ratio() {
        let s = AnnularScheme::new(Some(3.0), 1.0, 2.0).unwrap();
        assert!((s.ratio() - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn bracketing_boundary_and_interior() {
        let rho = 2f64.sqrt();
        let s = AnnularScheme::new(Some(rho.powi(3)), 1.0, 2.0).unwrap();
        assert_eq!(s.m(), Some(3));
        assert!((s.eta() - 1.0).abs() < 1e-12);
        let s = AnnularScheme::new(Some(2.5), 1.0, 1.0).unwrap();
        assert_eq!(s.m(), Some(2));
        assert!((s.eta() - 0.625).abs() < 1e-15);
        assert!(s.eta() > 1.0 / s.ratio());
        assert!((s.outer(2) / 2.5 - 1.0).abs() < 1e-9);
        assert!(AnnularScheme::new(Some(0.9), 1.0, 1.0).is_err());
        let unbounded = AnnularScheme::new(None, 1.0, 1.0).unwrap();
        assert_eq!((unbounded.eta(), unbounded.m()), (1.0, None));
    }

    #[test]
    fn radii_geometric_and_boundaries_shared() {
        let s = AnnularScheme::new(Some(10.0), 1.5, 1.2).unwrap();
        for n in -5..5 {
            assert!((s.outer(n) / s.inner(n) - s.ratio()).abs() < 1e-12);
            assert_eq!(s.annulus_indices(s.outer(n)), vec![n, n + 1]);
            let mid = (s.inner(n) * s.outer(n)).sqrt();
            assert_eq!(s.annulus_indices(mid), vec![n]);
        }
    }

    #[test]
    fn build_checks_preconditions() {
        let small = generate_lebesgue(Rect { min: [0.0, 0.0], max: [0.5, 0.5] }, 10).unwrap();
        assert!(build_annuli(&small, &SchemeOptions::default()).is_err());
        let opts = SchemeOptions { c_ratio: Some(1.0), origin_tolerance: None };
        assert!(matches!(build_annuli(&small, &opts), Err(Error::Precondition(_))));
        let ring = generate_circle([0.0, 0.0], 3.0, 100).unwrap();
        let with_origin = SchemeOptions { c_ratio: Some(1.0), origin_tolerance: Some(1e-3) };
        assert!(build_annuli(&ring, &with_origin).is_err());
        let s = build_annuli(&ring, &opts).unwrap();
        assert!(!s.n_range().is_empty());
        for i in 0..ring.len() {
            let r = ring.points()[i][0].hypot(ring.points()[i][1]);
            assert!(s.n_range().iter().any(|&n| s.inner(n) * (1.0 - 1e-9) <= r && r <= s.outer(n) * (1.0 + 1e-9)));
        }
    }
}
