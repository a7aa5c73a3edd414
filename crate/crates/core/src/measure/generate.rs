//! Measure generators: Lebesgue grids, arclength on polylines and circles,
//! and self-similar measures of iterated function systems.

use super::geometry::{diameter, Point};
use super::AtomicMeasure;
use crate::error::{domain, Result};
use crate::roots::bisect;
use std::f64::consts::PI;

/// Axis-aligned rectangle `[min.0, max.0] × [min.1, max.1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rect {
    pub min: Point,
    pub max: Point,
}

impl Rect {
    pub fn unit() -> Self {
        Rect { min: [0.0, 0.0], max: [1.0, 1.0] }
    }
}

/// Midpoint-rule discretization of planar Lebesgue measure on `rect`.
pub fn generate_lebesgue(rect: Rect, resolution: usize) -> Result<AtomicMeasure> {
    if resolution < 2 {
        return Err(domain(format!("resolution must be at least 2, got {resolution}")));
    }
    let wx = rect.max[0] - rect.min[0];
    let wy = rect.max[1] - rect.min[1];
    if !(wx > 0.0 && wy > 0.0 && wx.is_finite() && wy.is_finite()) {
        return Err(domain(format!("degenerate box {rect:?}")));
    }
    let (dx, dy) = (wx / resolution as f64, wy / resolution as f64);
    let mut points = Vec::with_capacity(resolution * resolution);
    for j in 0..resolution {
        for i in 0..resolution {
            points.push([rect.min[0] + (i as f64 + 0.5) * dx, rect.min[1] + (j as f64 + 0.5) * dy]);
        }
    }
    let weights = vec![dx * dy; points.len()];
    Ok(AtomicMeasure::new(points, weights, 2.0, "lebesgue")?.with_cell_size(dx.max(dy)))
}

/// Arclength measure on a polyline, `resolution` atoms per unit length.
///
/// Each segment is split into `ceil(len·resolution)` equal pieces with one
/// atom at each piece midpoint.
pub fn generate_polyline(vertices: &[Point], resolution: f64) -> Result<AtomicMeasure> {
    if vertices.len() < 2 {
        return Err(domain("a polyline needs at least 2 vertices"));
    }
    if !(resolution > 0.0 && resolution.is_finite()) {
        return Err(domain(format!("resolution must be positive, got {resolution}")));
    }
    let total: f64 = vertices.windows(2).map(|w| seg_len(w[0], w[1])).sum();
    if !(total > 0.0) {
        return Err(domain("polyline has zero length"));
    }
    let mut points = Vec::new();
    let mut weights = Vec::new();
    for w in vertices.windows(2) {
        let len = seg_len(w[0], w[1]);
        if len == 0.0 {
            continue;
        }
        let k = (len * resolution).ceil().max(1.0) as usize;
        for i in 0..k {
            let t = (i as f64 + 0.5) / k as f64;
            points.push([w[0][0] + t * (w[1][0] - w[0][0]), w[0][1] + t * (w[1][1] - w[0][1])]);
            weights.push(len / k as f64);
        }
    }
    Ok(AtomicMeasure::new(points, weights, 1.0, "polyline")?.with_cell_size(1.0 / resolution))
}

fn seg_len(a: Point, b: Point) -> f64 {
    (b[0] - a[0]).hypot(b[1] - a[1])
}

/// Arclength measure on a circle with `n` atoms placed exactly on it.
pub fn generate_circle(center: Point, radius: f64, n: usize) -> Result<AtomicMeasure> {
    if !(radius > 0.0 && radius.is_finite()) || n < 3 {
        return Err(domain(format!("circle needs radius > 0 and n >= 3, got ({radius}, {n})")));
    }
    let points = (0..n)
        .map(|i| {
            let a = 2.0 * PI * (i as f64 + 0.5) / n as f64;
            [center[0] + radius * a.cos(), center[1] + radius * a.sin()]
        })
        .collect();
    let w = 2.0 * PI * radius / n as f64;
    Ok(AtomicMeasure::new(points, vec![w; n], 1.0, "circle")?.with_cell_size(w))
}

/// `x ↦ ratio · R(rotation) · x + translation`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Similarity {
    pub ratio: f64,
    pub rotation: f64,
    pub translation: Point,
}

impl Similarity {
    pub fn new(ratio: f64, translation: Point) -> Self {
        Self { ratio, rotation: 0.0, translation }
    }

    pub fn apply(&self, p: Point) -> Point {
        let (s, c) = self.rotation.sin_cos();
        [
            self.ratio * (c * p[0] - s * p[1]) + self.translation[0],
            self.ratio * (s * p[0] + c * p[1]) + self.translation[1],
        ]
    }

    fn fixed_point(&self) -> Point {
        // solve (I − rR) x = t
        let (s, c) = self.rotation.sin_cos();
        let (a, b) = (1.0 - self.ratio * c, self.ratio * s);
        let det = a * a + b * b;
        let t = self.translation;
        [(a * t[0] - b * t[1]) / det, (b * t[0] + a * t[1]) / det]
    }
}

const MAX_IFS_ATOMS: usize = 20_000_000;

/// Self-similar probability measure of an IFS, discretized at `depth`.
///
/// Atoms are the images of the first map's fixed point under all words of
/// length `depth`; each word carries weight `Π rᵢ^α` with `Σ rᵢ^α = 1`, which
/// is `m^{-depth}` when all ratios agree. The open-set condition is assumed,
/// not checked.
pub fn generate_ifs(maps: &[Similarity], depth: u32) -> Result<AtomicMeasure> {
    if maps.is_empty() {
        return Err(domain("an IFS needs at least one map"));
    }
    if let Some(m) = maps.iter().find(|m| !(m.ratio > 0.0 && m.ratio < 1.0)) {
        return Err(domain(format!("map with ratio {} is not contractive", m.ratio)));
    }
    let m = maps.len();
    let count = (m as f64).powi(depth as i32);
    if count > MAX_IFS_ATOMS as f64 {
        return Err(domain(format!("{m}^{depth} atoms exceeds the limit {MAX_IFS_ATOMS}")));
    }
    let alpha = similarity_dimension(maps)?;
    if !(alpha > 0.0 && alpha <= 2.0 + 1e-12) {
        return Err(domain(format!("similarity dimension {alpha} is outside (0, 2]")));
    }
    let alpha = alpha.min(2.0);
    let probs: Vec<f64> = maps.iter().map(|s| s.ratio.powf(alpha)).collect();
    let mut points = vec![maps[0].fixed_point()];
    let mut weights = vec![1.0];
    for _ in 0..depth {
        let mut np = Vec::with_capacity(points.len() * m);
        let mut nw = Vec::with_capacity(points.len() * m);
        for (s, p) in maps.iter().zip(&probs) {
            for (x, w) in points.iter().zip(&weights) {
                np.push(s.apply(*x));
                nw.push(w * p);
            }
        }
        points = np;
        weights = nw;
    }
    let rmax = maps.iter().map(|s| s.ratio).fold(0.0, f64::max);
    let cell = rmax.powi(depth as i32) * diameter(&points);
    Ok(AtomicMeasure::new(points, weights, alpha, "ifs")?.with_cell_size(cell))
}

/// Solution of the Moran equation `Σ rᵢ^α = 1`.
fn similarity_dimension(maps: &[Similarity]) -> Result<f64> {
    let r0 = maps[0].ratio;
    if maps.iter().all(|s| (s.ratio - r0).abs() <= 1e-15 * r0) {
        return Ok((maps.len() as f64).ln() / (1.0 / r0).ln());
    }
    let f = |a: f64| maps.iter().map(|s| s.ratio.powf(a)).sum::<f64>() - 1.0;
    bisect(f, 1e-9, 16.0, 1e-15)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cantor_dust() -> Vec<Similarity> {
        let r = 1.0 / 3.0;
        vec![
            Similarity::new(r, [0.0, 0.0]),
            Similarity::new(r, [2.0 / 3.0, 0.0]),
            Similarity::new(r, [0.0, 2.0 / 3.0]),
            Similarity::new(r, [2.0 / 3.0, 2.0 / 3.0]),
        ]
    }

    #[test]
    fn lebesgue_unit_square() {
        let m = generate_lebesgue(Rect::unit(), 10).unwrap();
        assert_eq!(m.len(), 100);
        assert!(m.weights().iter().all(|w| (w - 0.01).abs() < 1e-15));
        assert!((m.total_mass() - 1.0).abs() < 1e-12);
        assert_eq!(m.alpha(), 2.0);
        assert!(generate_lebesgue(Rect::unit(), 1).is_err());
        assert!(generate_lebesgue(Rect { min: [0.0, 0.0], max: [1.0, 0.0] }, 5).is_err());
    }

    #[test]
    fn lebesgue_disk_mass() {
        let m = generate_lebesgue(Rect::unit(), 200).unwrap();
        let b = m.ball_mass([0.5, 0.5], 0.25);
        assert!((b / (PI * 0.0625) - 1.0).abs() < 0.05, "{b}");
    }

    #[test]
    fn polyline_masses() {
        let seg = generate_polyline(&[[0.0, 0.0], [1.0, 0.0]], 100.0).unwrap();
        assert!((seg.total_mass() - 1.0).abs() < 1e-12);
        assert_eq!(seg.alpha(), 1.0);
        let gon: Vec<Point> = (0..=360)
            .map(|i| {
                let a = 2.0 * PI * i as f64 / 360.0;
                [a.cos(), a.sin()]
            })
            .collect();
        let ring = generate_polyline(&gon, 50.0).unwrap();
        assert!((ring.total_mass() / (2.0 * PI) - 1.0).abs() < 1e-3);
        assert!(generate_polyline(&[[1.0, 1.0], [1.0, 1.0]], 10.0).is_err());
        assert!(generate_polyline(&[[1.0, 1.0]], 10.0).is_err());
    }

    #[test]
    fn circle_atoms_on_circle() {
        let c = generate_circle([0.0, 0.0], 2.0, 100).unwrap();
        assert!(c.points().iter().all(|p| (p[0].hypot(p[1]) - 2.0).abs() < 1e-14));
        assert!((c.total_mass() - 4.0 * PI).abs() < 1e-12);
    }

    #[test]
    fn ifs_dimensions() {
        let dust = generate_ifs(&cantor_dust(), 3).unwrap();
        assert!((dust.alpha() - 4f64.ln() / 3f64.ln()).abs() < 1e-12);
        assert_eq!(dust.len(), 64);
        assert!(dust.weights().iter().all(|w| (w - 4f64.powi(-3)).abs() < 1e-18));
        assert!((dust.total_mass() - 1.0).abs() < 1e-12);
        let line =
            generate_ifs(&[Similarity::new(1.0 / 3.0, [0.0, 0.0]), Similarity::new(1.0 / 3.0, [2.0 / 3.0, 0.0])], 4)
                .unwrap();
        assert!((line.alpha() - 0.6309297535714574).abs() < 1e-12);
        assert!(generate_ifs(&[Similarity::new(1.0, [0.0, 0.0])], 2).is_err());
    }

    #[test]
    fn ifs_unequal_ratios_use_moran() {
        // 0.5^a + 0.25^a = 1 has a = log2 of the golden ratio
        let maps = [Similarity::new(0.5, [0.0, 0.0]), Similarity::new(0.25, [0.75, 0.0])];
        let m = generate_ifs(&maps, 6).unwrap();
        let golden = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((m.alpha() - golden.log2()).abs() < 1e-12);
        assert!((m.total_mass() - 1.0).abs() < 1e-12);
    }
}
