//! Squares centred on the support on which `V` has a prescribed average norm.

use crate::error::{domain, Error, Result};
use crate::measure::{kappa0, AtomicMeasure, Region, Square};
use crate::orlicz::{average_norm, NFunctionPair, WeightedSampleSpace};
use crate::potential::PotentialField;
use rayon::prelude::*;

#[derive(Debug, Clone, PartialEq)]
pub struct CoverConfig {
    /// Planar Besicovitch constant `N`.
    pub besicovitch: f64,
    /// Relative tolerance on the achieved norm.
    pub rel_tol: f64,
    /// Spread each atom over a square cell of the measure's `cell_size`, which
    /// makes the square norm continuous in the side length.
    pub smoothing: bool,
}

impl Default for CoverConfig {
    fn default() -> Self {
        Self { besicovitch: 19.0, rel_tol: 1e-6, smoothing: true }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SquareCover {
    pub squares: Vec<Square>,
    /// Atom index of each square's centre.
    pub centers: Vec<usize>,
    pub achieved_norms: Vec<f64>,
    /// `κ₀ N n⁻¹ ‖V‖^(av)` (0 in the single-square branch).
    pub target: f64,
    pub kappa0: f64,
    /// `‖V‖^(av)` on the region.
    pub region_norm: f64,
    pub single_branch: bool,
}

/// Atoms in the `θ₀` frame, sorted by the first coordinate.
struct Frame<'a> {
    measure: &'a AtomicMeasure,
    v_star: Vec<f64>,
    local: Vec<(f64, f64, usize)>,
    pos: Vec<usize>,
    h: f64,
}

impl<'a> Frame<'a> {
    fn new(measure: &'a AtomicMeasure, v_star: Vec<f64>, theta0: f64, h: f64) -> Self {
        let frame = Square { center: [0.0, 0.0], side: 0.0, theta: theta0 };
        let mut local: Vec<(f64, f64, usize)> = measure
            .points()
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let (u, v) = frame.local(*p);
                (u, v, i)
            })
            .collect();
        local.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut pos = vec![0; local.len()];
        for (k, l) in local.iter().enumerate() {
            pos[l.2] = k;
        }
        Self { measure, v_star, local, pos, h }
    }

    fn coords(&self, atom: usize) -> (f64, f64) {
        let l = self.local[self.pos[atom]];
        (l.0, l.1)
    }

    /// Fraction of the atom cell `[c − h/2, c + h/2]` inside `[−s/2, s/2]`.
    fn overlap(&self, c: f64, s: f64) -> f64 {
        let half = 0.5 * s;
        if self.h == 0.0 {
            return if c.abs() <= half * (1.0 + 1e-12) { 1.0 } else { 0.0 };
        }
        let lo = (c - 0.5 * self.h).max(-half);
        let hi = (c + 0.5 * self.h).min(half);
        ((hi - lo) / self.h).clamp(0.0, 1.0)
    }

    /// Average 𝓑-norm of `V*` on the square of side `s` centred at `(cu, cv)`.
    fn norm(&self, cu: f64, cv: f64, s: f64) -> Result<f64> {
        if s <= 0.0 {
            return Ok(0.0);
        }
        let reach = 0.5 * (s + self.h) * (1.0 + 1e-12);
        let start = self.local.partition_point(|l| l.0 < cu - reach);
        let mut vals = Vec::new();
        let mut wts = Vec::new();
        for &(u, v, i) in &self.local[start..] {
            if u > cu + reach {
                break;
            }
            let f = self.overlap(u - cu, s) * self.overlap(v - cv, s);
            if f > 0.0 {
                vals.push(self.v_star[i]);
                wts.push(f * self.measure.weights()[i]);
            }
        }
        if wts.is_empty() {
            return Ok(0.0);
        }
        average_norm(&vals, &WeightedSampleSpace::new(wts)?, &NFunctionPair::b_a())
    }
}

fn solve_side(frame: &Frame, atom: usize, s_max: f64, target: f64, tol: f64) -> Result<(f64, f64)> {
    let (cu, cv) = frame.coords(atom);
    let (mut lo, mut hi) = (0.0, s_max);
    let (mut jlo, mut jhi) = (0.0, frame.norm(cu, cv, hi)?);
    if jhi < target * (1.0 - tol) {
        return Err(Error::NoConvergence(format!(
            "square at atom {atom} reaches norm {jhi:e} < target {target:e} at the largest side {s_max:e}"
        )));
    }
    for _ in 0..400 {
        let mid = 0.5 * (lo + hi);
        let j = frame.norm(cu, cv, mid)?;
        if (j - target).abs() <= tol * target {
            return Ok((mid, j));
        }
        if j < target {
            (lo, jlo) = (mid, j);
        } else {
            (hi, jhi) = (mid, j);
        }
        if hi - lo <= 1e-15 * hi {
            break;
        }
    }
    let p = frame.measure.points()[atom];
    Err(Error::NoConvergence(format!(
        "norm jumps from {jlo:e} to {jhi:e} across side {hi:e} for the square centred at atom {atom} ({:.6e}, {:.6e}); \
         a line in the chosen direction carries mass",
        p[0], p[1]
    )))
}

/// Covers `supp μ ∩ region` by at most about `n` squares centred on atoms of
/// the region; each square's average `𝓑`-norm of `V·1_region` equals
/// `κ₀ N n⁻¹ ‖V‖^(av)_region`. When `n ≤ κ₀N` (or `V ≡ 0` on the region) a
/// single square of twice the enclosing side is returned.
pub fn equal_norm_cover(
    v: &PotentialField,
    measure: &AtomicMeasure,
    region: &Region,
    n: usize,
    theta0: f64,
    config: &CoverConfig,
) -> Result<SquareCover> {
    if n == 0 {
        return Err(domain("requested cover size must be positive"));
    }
    let inside = measure.indices_in(region);
    if inside.is_empty() {
        return Err(domain(format!("region {region:?} carries no mass")));
    }
    let k0 = kappa0(measure, region, theta0)?;
    let space = WeightedSampleSpace::new(inside.iter().map(|&i| measure.weights()[i]).collect())?;
    let region_norm = average_norm(&v.restrict(&inside), &space, &NFunctionPair::b_a())?;

    let mut v_star = vec![0.0; measure.len()];
    for &i in &inside {
        v_star[i] = v.values()[i];
    }
    let h = if config.smoothing { measure.cell_size() } else { 0.0 };
    let frame = Frame::new(measure, v_star, theta0, h);
    let g0 = region.enclosing_square(theta0);

    if region_norm == 0.0 || n as f64 <= k0 * config.besicovitch {
        let center = *inside
            .iter()
            .min_by(|&&a, &&b| {
                let d = |i: usize| {
                    let p = measure.points()[i];
                    (p[0] - g0.center[0]).hypot(p[1] - g0.center[1])
                };
                d(a).total_cmp(&d(b)).then(a.cmp(&b))
            })
            .expect("nonempty");
        let sq = Square { center: measure.points()[center], side: 2.0 * g0.side, theta: theta0 };
        let (cu, cv) = frame.coords(center);
        let achieved = frame.norm(cu, cv, sq.side)?;
        return Ok(SquareCover {
            squares: vec![sq],
            centers: vec![center],
            achieved_norms: vec![achieved],
            target: 0.0,
            kappa0: k0,
            region_norm,
            single_branch: true,
        });
    }

    let target = k0 * config.besicovitch / n as f64 * region_norm;
    let s_max = 2.0 * g0.side + h;
    let solved: Vec<(f64, f64)> =
        inside.par_iter().map(|&i| solve_side(&frame, i, s_max, target, config.rel_tol)).collect::<Result<_>>()?;

    // largest first among centres not yet covered
    let mut order: Vec<usize> = (0..inside.len()).collect();
    order.sort_by(|&a, &b| solved[b].0.total_cmp(&solved[a].0).then(a.cmp(&b)));
    let mut covered = vec![false; inside.len()];
    let mut out = SquareCover {
        squares: Vec::new(),
        centers: Vec::new(),
        achieved_norms: Vec::new(),
        target,
        kappa0: k0,
        region_norm,
        single_branch: false,
    };
    for k in order {
        if covered[k] {
            continue;
        }
        let atom = inside[k];
        let sq = Square { center: measure.points()[atom], side: solved[k].0, theta: theta0 };
        for (j, &i) in inside.iter().enumerate() {
            if !covered[j] && sq.contains(measure.points()[i]) {
                covered[j] = true;
            }
        }
        covered[k] = true;
        out.squares.push(sq);
        out.centers.push(atom);
        out.achieved_norms.push(solved[k].1);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::{generate_polyline, pick_direction};

    fn segment_setup() -> (AtomicMeasure, PotentialField, Region, f64) {
        let m = generate_polyline(&[[0.0, 0.0], [1.0, 0.0]], 100.0).unwrap();
        let v = PotentialField::constant(&m, 1.0).unwrap();
        let region = Region::Square(Square { center: [0.5, 0.0], side: 1.2, theta: 0.0 });
        let dir = pick_direction(&m, 16, 2.0 * m.weights()[0], 7).unwrap();
        (m, v, region, dir.theta0)
    }

    #[test]
    fn small_n_takes_single_square() {
        let (m, v, region, theta) = segment_setup();
        let c = equal_norm_cover(&v, &m, &region, 5, theta, &CoverConfig::default()).unwrap();
        assert!(c.single_branch);
        assert_eq!(c.squares.len(), 1);
        assert!(m.points().iter().all(|p| c.squares[0].contains(*p)));
        let zero = PotentialField::zero(&m);
        let z = equal_norm_cover(&zero, &m, &region, 1000, theta, &CoverConfig::default()).unwrap();
        assert!(z.single_branch);
    }

    #[test]
    fn large_n_hits_target_and_covers() {
        let (m, v, region, theta) = segment_setup();
        let n = 400;
        let c = equal_norm_cover(&v, &m, &region, n, theta, &CoverConfig::default()).unwrap();
        assert!(!c.single_branch);
        assert!(c.squares.len() <= n, "{}", c.squares.len());
        for a in &c.achieved_norms {
            assert!((a / c.target - 1.0).abs() <= 1e-6);
        }
        for p in m.points() {
            assert!(c.squares.iter().any(|s| s.contains(*p)));
        }
        for (s, &i) in c.squares.iter().zip(&c.centers) {
            assert_eq!(s.center, m.points()[i]);
        }
    }

    #[test]
    fn charged_direction_without_smoothing_reports_the_centre() {
        let (m, v, region, _) = segment_setup();
        let cfg = CoverConfig { smoothing: false, ..CoverConfig::default() };
        let err = equal_norm_cover(&v, &m, &region, 400, 0.0, &cfg).unwrap_err();
        assert!(err.to_string().contains("centred at atom"), "{err}");
    }
}
