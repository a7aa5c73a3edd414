//! Grid-bucket spatial index for closed-ball mass queries.

use super::geometry::{dist2, Point, CLOSED_SLACK};
use super::AtomicMeasure;
use std::collections::HashMap;

/// Immutable bucket grid over the atoms of a measure; `Sync`, so queries can
/// be issued from many threads.
#[derive(Debug)]
pub struct BallIndex<'a> {
    measure: &'a AtomicMeasure,
    origin: Point,
    cell: f64,
    buckets: HashMap<(i64, i64), Vec<u32>>,
}

impl<'a> BallIndex<'a> {
    pub fn new(measure: &'a AtomicMeasure) -> Self {
        let pts = measure.points();
        let mut origin = [f64::INFINITY; 2];
        for p in pts {
            origin[0] = origin[0].min(p[0]);
            origin[1] = origin[1].min(p[1]);
        }
        let n = pts.len().max(1) as f64;
        let cell = (measure.diam_support() / n.sqrt()).max(1e-300);
        let mut buckets: HashMap<(i64, i64), Vec<u32>> = HashMap::new();
        let mut idx = Self { measure, origin, cell, buckets: HashMap::new() };
        for (i, p) in pts.iter().enumerate() {
            buckets.entry(idx.key(*p)).or_default().push(i as u32);
        }
        idx.buckets = buckets;
        idx
    }

    fn key(&self, p: Point) -> (i64, i64) {
        (((p[0] - self.origin[0]) / self.cell).floor() as i64, ((p[1] - self.origin[1]) / self.cell).floor() as i64)
    }

    /// Calls `visit(i)` for every atom in the closed ball `B̄(center, r)`.
    pub fn for_each_in_ball(&self, center: Point, r: f64, mut visit: impl FnMut(usize)) {
        let pts = self.measure.points();
        let r2 = r * r * (1.0 + CLOSED_SLACK);
        let span = (2.0 * r / self.cell + 2.0).powi(2);
        if span >= self.buckets.len() as f64 {
            for (i, p) in pts.iter().enumerate() {
                if dist2(*p, center) <= r2 {
                    visit(i);
                }
            }
            return;
        }
        let rr = r * (1.0 + CLOSED_SLACK);
        let (x0, y0) = self.key([center[0] - rr, center[1] - rr]);
        let (x1, y1) = self.key([center[0] + rr, center[1] + rr]);
        for kx in x0..=x1 {
            for ky in y0..=y1 {
                if let Some(b) = self.buckets.get(&(kx, ky)) {
                    for &i in b {
                        if dist2(pts[i as usize], center) <= r2 {
                            visit(i as usize);
                        }
                    }
                }
            }
        }
    }

    /// `μ(B̄(center, r))`.
    pub fn ball_mass(&self, center: Point, r: f64) -> f64 {
        let w = self.measure.weights();
        let mut total = 0.0;
        self.for_each_in_ball(center, r, |i| total += w[i]);
        total
    }
}
