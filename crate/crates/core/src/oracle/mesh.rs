//! Log-polar triangulations of a disk with nested red refinement.
//!
//! Rings sit at `r_min·e^{k h}` with `ceil(2π/h)` (at least 8) nodes each and a
//! fan of triangles to the centre, so element diameters scale like `r·h`:
//! fine near the origin, coarse far out. The outer ring is the first one at
//! radius `≥ L`, so enlarging `L` only appends rings and refining splits every
//! triangle into four through edge midpoints. Both operations give nested
//! P1 spaces.

use crate::error::{domain, Result};
use crate::measure::Point;
use std::collections::HashMap;
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeshSpec {
    /// Domain radius `L`; the outer ring is the first at radius `≥ L`.
    pub radius: f64,
    /// Base log-radial and angular step.
    pub h: f64,
    /// Innermost ring radius.
    pub r_min: f64,
    /// Red refinement steps applied to the base mesh.
    pub refinements: u32,
}

impl MeshSpec {
    /// Chooses `r_min` as half the smallest positive atom radius (capped at `L/2`).
    pub fn for_atoms(points: &[Point], radius: f64, h: f64) -> Self {
        let rmin_atom = points.iter().map(|p| p[0].hypot(p[1])).filter(|&r| r > 0.0).fold(f64::INFINITY, f64::min);
        let r_min = (0.5 * rmin_atom).min(0.5 * radius);
        Self { radius, h, r_min, refinements: 0 }
    }

    pub fn refined(&self, k: u32) -> Self {
        Self { refinements: self.refinements + k, ..*self }
    }

    /// Effective step after refinement.
    pub fn effective_h(&self) -> f64 {
        self.h / 2f64.powi(self.refinements as i32)
    }
}

#[derive(Debug, Clone)]
struct Level {
    tris: Vec<[usize; 3]>,
    children: Vec<[usize; 4]>,
}

#[derive(Debug, Clone)]
pub struct Mesh {
    spec: MeshSpec,
    nodes: Vec<Point>,
    boundary: Vec<bool>,
    levels: Vec<Level>,
    rings: usize,
    n_theta: usize,
    outer_radius: f64,
}

pub(crate) fn barycentric(p: Point, a: Point, b: Point, c: Point) -> [f64; 3] {
    let det = (b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]);
    let l1 = ((p[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (p[1] - a[1])) / det;
    let l2 = ((b[0] - a[0]) * (p[1] - a[1]) - (p[0] - a[0]) * (b[1] - a[1])) / det;
    [1.0 - l1 - l2, l1, l2]
}

fn min3(l: [f64; 3]) -> f64 {
    l[0].min(l[1]).min(l[2])
}

const INSIDE_TOL: f64 = 1e-10;

impl Mesh {
    pub fn new(spec: MeshSpec) -> Result<Self> {
        if !(spec.h > 0.0 && spec.h <= 1.0) {
            return Err(domain(format!("mesh step must lie in (0, 1], got {}", spec.h)));
        }
        if !(spec.r_min > 0.0 && spec.r_min < spec.radius && spec.radius.is_finite()) {
            return Err(domain(format!("need 0 < r_min < L, got r_min = {}, L = {}", spec.r_min, spec.radius)));
        }
        let rings = ((spec.radius / spec.r_min).ln() / spec.h - 1e-9).ceil().max(1.0) as usize;
        let n_theta = ((2.0 * PI / spec.h).ceil() as usize).max(8);
        let mut nodes = vec![[0.0, 0.0]];
        for k in 0..=rings {
            let r = spec.r_min * (k as f64 * spec.h).exp();
            for j in 0..n_theta {
                let a = 2.0 * PI * j as f64 / n_theta as f64;
                nodes.push([r * a.cos(), r * a.sin()]);
            }
        }
        let id = |k: usize, j: usize| 1 + k * n_theta + j % n_theta;
        let mut tris = Vec::with_capacity(n_theta * (2 * rings + 1));
        for j in 0..n_theta {
            tris.push([0, id(0, j), id(0, j + 1)]);
        }
        for k in 0..rings {
            for j in 0..n_theta {
                let (a, b, c, d) = (id(k, j), id(k, j + 1), id(k + 1, j + 1), id(k + 1, j));
                tris.push([a, b, c]);
                tris.push([a, c, d]);
            }
        }
        let mut boundary = vec![false; nodes.len()];
        for j in 0..n_theta {
            boundary[id(rings, j)] = true;
        }
        let outer_radius = spec.r_min * (rings as f64 * spec.h).exp();
        let mut mesh = Self {
            spec,
            nodes,
            boundary,
            levels: vec![Level { tris, children: Vec::new() }],
            rings,
            n_theta,
            outer_radius,
        };
        for _ in 0..spec.refinements {
            mesh.refine();
        }
        Ok(mesh)
    }

    fn refine(&mut self) {
        let mut mid: HashMap<(usize, usize), usize> = HashMap::new();
        let parent = self.levels.last_mut().expect("base level");
        let mut tris = Vec::with_capacity(4 * parent.tris.len());
        let mut children = Vec::with_capacity(parent.tris.len());
        for &[a, b, c] in &parent.tris {
            let mut m = |u: usize, v: usize| -> usize {
                *mid.entry((u.min(v), u.max(v))).or_insert_with(|| {
                    let (p, q) = (self.nodes[u], self.nodes[v]);
                    self.nodes.push([0.5 * (p[0] + q[0]), 0.5 * (p[1] + q[1])]);
                    self.boundary.push(self.boundary[u] && self.boundary[v]);
                    self.nodes.len() - 1
                })
            };
            let (ab, bc, ca) = (m(a, b), m(b, c), m(c, a));
            let base = tris.len();
            tris.extend_from_slice(&[[a, ab, ca], [ab, b, bc], [ca, bc, c], [ab, bc, ca]]);
            children.push([base, base + 1, base + 2, base + 3]);
        }
        parent.children = children;
        self.levels.push(Level { tris, children: Vec::new() });
    }

    pub fn spec(&self) -> MeshSpec {
        self.spec
    }
    pub fn nodes(&self) -> &[Point] {
        &self.nodes
    }
    pub fn is_boundary(&self, node: usize) -> bool {
        self.boundary[node]
    }
    /// Triangles of the finest level.
    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.levels.last().expect("base level").tris
    }
    pub fn outer_radius(&self) -> f64 {
        self.outer_radius
    }
    pub fn rings(&self) -> usize {
        self.rings
    }
    pub fn n_theta(&self) -> usize {
        self.n_theta
    }

    fn tri_points(&self, t: [usize; 3]) -> (Point, Point, Point) {
        (self.nodes[t[0]], self.nodes[t[1]], self.nodes[t[2]])
    }

    fn locate_base(&self, p: Point) -> Option<usize> {
        let base = &self.levels[0].tris;
        let nt = self.n_theta as i64;
        let theta = p[1].atan2(p[0]).rem_euclid(2.0 * PI);
        let j0 = (theta / (2.0 * PI) * nt as f64).floor() as i64;
        let r = p[0].hypot(p[1]);
        let k0 = if r > 0.0 { ((r / self.spec.r_min).ln() / self.spec.h).floor() as i64 } else { -1 };
        let mut cands = Vec::new();
        for dj in -1..=1 {
            let j = (j0 + dj).rem_euclid(nt) as usize;
            if k0 <= 0 {
                cands.push(j);
            }
            for k in (k0 - 1)..=(k0 + 1) {
                if k >= 0 && (k as usize) < self.rings {
                    let q = self.n_theta + 2 * (k as usize * self.n_theta + j);
                    cands.extend_from_slice(&[q, q + 1]);
                }
            }
        }
        let mut best = None;
        let mut best_val = f64::NEG_INFINITY;
        for t in cands {
            let (a, b, c) = self.tri_points(base[t]);
            let v = min3(barycentric(p, a, b, c));
            if v > best_val {
                best_val = v;
                best = Some(t);
            }
        }
        best.filter(|_| best_val >= -INSIDE_TOL)
    }

    /// Finest-level triangle containing `p` with its barycentric coordinates.
    pub fn locate(&self, p: Point) -> Option<(usize, [f64; 3])> {
        let mut t = self.locate_base(p)?;
        for level in 0..self.levels.len() - 1 {
            let kids = self.levels[level].children[t];
            let next = &self.levels[level + 1].tris;
            t = *kids
                .iter()
                .max_by(|&&x, &&y| {
                    let bx = self.tri_points(next[x]);
                    let by = self.tri_points(next[y]);
                    min3(barycentric(p, bx.0, bx.1, bx.2)).total_cmp(&min3(barycentric(p, by.0, by.1, by.2)))
                })
                .expect("four children");
        }
        let tri = self.triangles()[t];
        let (a, b, c) = self.tri_points(tri);
        let l = barycentric(p, a, b, c);
        (min3(l) >= -INSIDE_TOL).then_some((t, l))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn area(m: &Mesh) -> f64 {
        m.triangles()
            .iter()
            .map(|t| {
                let (a, b, c) = m.tri_points(*t);
                0.5 * ((b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1])).abs()
            })
            .sum()
    }

    #[test]
    fn areas_and_refinement_agree() {
        let spec = MeshSpec { radius: 3.0, h: 0.3, r_min: 0.05, refinements: 0 };
        let m0 = Mesh::new(spec).unwrap();
        let m1 = Mesh::new(spec.refined(1)).unwrap();
        assert_eq!(m1.triangles().len(), 4 * m0.triangles().len());
        assert!((area(&m0) - area(&m1)).abs() < 1e-12);
        let n = m0.n_theta() as f64;
        let polygon = 0.5 * n * m0.outer_radius().powi(2) * (2.0 * PI / n).sin();
        assert!((area(&m0) - polygon).abs() < 1e-10);
        assert!(m0.outer_radius() >= 3.0);
        // the coarse nodes survive refinement unchanged
        assert_eq!(&m1.nodes()[..m0.nodes().len()], m0.nodes());
    }

    #[test]
    fn location_finds_containing_triangle() {
        let m = Mesh::new(MeshSpec { radius: 5.0, h: 0.25, r_min: 0.1, refinements: 2 }).unwrap();
        for k in 0..500 {
            let a = k as f64 * 0.731;
            let r = 0.01 + 4.5 * ((k * 37 % 500) as f64 / 500.0);
            let p = [r * a.cos(), r * a.sin()];
            let (t, l) = m.locate(p).expect("inside");
            let tri = m.triangles()[t];
            let q = [0, 1, 2].iter().fold([0.0, 0.0], |acc, &i| {
                let x = m.nodes()[tri[i]];
                [acc[0] + l[i] * x[0], acc[1] + l[i] * x[1]]
            });
            assert!((q[0] - p[0]).abs() < 1e-12 && (q[1] - p[1]).abs() < 1e-12);
        }
        assert!(m.locate([100.0, 0.0]).is_none());
        assert!(m.locate([0.0, 0.0]).is_some());
    }

    #[test]
    fn boundary_is_outer_ring_only() {
        let m = Mesh::new(MeshSpec { radius: 2.0, h: 0.5, r_min: 0.2, refinements: 1 }).unwrap();
        for (i, p) in m.nodes().iter().enumerate() {
            let chord = m.outer_radius() * (PI / m.n_theta() as f64).cos();
            let on_outer = p[0].hypot(p[1]) >= chord * (1.0 - 1e-9);
            assert_eq!(m.is_boundary(i), on_outer, "node {i} at {p:?}");
        }
    }
}
