//! Planar primitives: oriented squares, regions, convex-hull diameter.

pub type Point = [f64; 2];

pub(crate) fn dist2(a: Point, b: Point) -> f64 {
    let dx = a[0] - b[0];
    let dy = a[1] - b[1];
    dx * dx + dy * dy
}

/// Relative slack applied to closed-set membership tests.
pub(crate) const CLOSED_SLACK: f64 = 1e-12;

/// A closed square with sides in the directions `theta` and `theta + π/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Square {
    pub center: Point,
    pub side: f64,
    pub theta: f64,
}

impl Square {
    /// Coordinates of `p` in the square's frame (origin at the centre).
    pub fn local(&self, p: Point) -> (f64, f64) {
        let (s, c) = self.theta.sin_cos();
        let dx = p[0] - self.center[0];
        let dy = p[1] - self.center[1];
        (dx * c + dy * s, -dx * s + dy * c)
    }

    pub fn contains(&self, p: Point) -> bool {
        let (u, v) = self.local(p);
        let half = 0.5 * self.side * (1.0 + CLOSED_SLACK);
        u.abs() <= half && v.abs() <= half
    }

    pub fn corners(&self) -> [Point; 4] {
        let (s, c) = self.theta.sin_cos();
        let h = 0.5 * self.side;
        let at = |u: f64, v: f64| [self.center[0] + u * c - v * s, self.center[1] + u * s + v * c];
        [at(-h, -h), at(h, -h), at(h, h), at(-h, h)]
    }

    /// Concentric square with the side multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Square {
        Square { side: self.side * factor, ..*self }
    }
}

/// A bounded closed region of the plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Region {
    Square(Square),
    Annulus { center: Point, inner: f64, outer: f64 },
    Disk { center: Point, radius: f64 },
}

impl Region {
    pub fn contains(&self, p: Point) -> bool {
        match *self {
            Region::Square(sq) => sq.contains(p),
            Region::Annulus { center, inner, outer } => {
                let r = dist2(p, center).sqrt();
                r >= inner * (1.0 - CLOSED_SLACK) && r <= outer * (1.0 + CLOSED_SLACK)
            }
            Region::Disk { center, radius } => dist2(p, center).sqrt() <= radius * (1.0 + CLOSED_SLACK),
        }
    }

    /// The smallest closed square with sides in directions `theta`,
    /// `theta + π/2` containing the region.
    pub fn enclosing_square(&self, theta: f64) -> Square {
        match *self {
            Region::Annulus { center, outer: radius, .. } | Region::Disk { center, radius } => {
                Square { center, side: 2.0 * radius, theta }
            }
            Region::Square(sq) => {
                let frame = Square { center: [0.0, 0.0], side: 0.0, theta };
                let mut umin = f64::INFINITY;
                let mut umax = f64::NEG_INFINITY;
                let mut vmin = f64::INFINITY;
                let mut vmax = f64::NEG_INFINITY;
                for c in sq.corners() {
                    let (u, v) = frame.local(c);
                    umin = umin.min(u);
                    umax = umax.max(u);
                    vmin = vmin.min(v);
                    vmax = vmax.max(v);
                }
                let (uc, vc) = (0.5 * (umin + umax), 0.5 * (vmin + vmax));
                let (s, c) = theta.sin_cos();
                Square { center: [uc * c - vc * s, uc * s + vc * c], side: (umax - umin).max(vmax - vmin), theta }
            }
        }
    }
}

fn cross(o: Point, a: Point, b: Point) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Convex hull by monotone chain (counter-clockwise, no repeated endpoint).
pub(crate) fn convex_hull(points: &[Point]) -> Vec<Point> {
    let mut pts: Vec<Point> = points.to_vec();
    pts.sort_by(|a, b| a[0].total_cmp(&b[0]).then(a[1].total_cmp(&b[1])));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let chain = |iter: &mut dyn Iterator<Item = &Point>| {
        let mut h: Vec<Point> = Vec::new();
        for &p in iter {
            while h.len() >= 2 && cross(h[h.len() - 2], h[h.len() - 1], p) <= 0.0 {
                h.pop();
            }
            h.push(p);
        }
        h.pop();
        h
    };
    let mut hull = chain(&mut pts.iter());
    hull.extend(chain(&mut pts.iter().rev()));
    hull
}

/// Largest pairwise distance of a point set.
pub fn diameter(points: &[Point]) -> f64 {
    let hull = convex_hull(points);
    let mut best = 0.0f64;
    for i in 0..hull.len() {
        for j in i + 1..hull.len() {
            best = best.max(dist2(hull[i], hull[j]));
        }
    }
    best.sqrt()
}
