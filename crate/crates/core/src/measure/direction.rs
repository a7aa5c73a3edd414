//! Choice of a grid direction whose lines carry no concentrated mass.

use super::AtomicMeasure;
use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::FRAC_PI_2;

/// Width of the line bins.
pub const LINE_BIN_WIDTH: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirectionChoice {
    /// Accepted angle in `[0, π/2)`.
    pub theta0: f64,
    pub line_mass_tolerance: f64,
    /// Largest bin mass seen for `theta0` and `theta0 + π/2`.
    pub observed_line_mass: f64,
    /// 1-based index of the accepted candidate.
    pub attempts: usize,
}

/// Largest mass carried by a strip of width [`LINE_BIN_WIDTH`] around a line
/// in direction `theta`.
pub fn max_line_mass(measure: &AtomicMeasure, theta: f64) -> f64 {
    let (s, c) = theta.sin_cos();
    let mut offs: Vec<(f64, f64)> =
        measure.points().iter().zip(measure.weights()).map(|(p, w)| (-p[0] * s + p[1] * c, *w)).collect();
    offs.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut best = 0.0f64;
    let mut lo = 0;
    let mut acc = 0.0;
    for hi in 0..offs.len() {
        acc += offs[hi].1;
        while offs[hi].0 - offs[lo].0 > LINE_BIN_WIDTH {
            acc -= offs[lo].1;
            lo += 1;
        }
        best = best.max(acc);
    }
    best
}

fn charge(measure: &AtomicMeasure, theta: f64) -> f64 {
    max_line_mass(measure, theta).max(max_line_mass(measure, theta + FRAC_PI_2))
}

/// Uniformly samples up to `candidates` angles in `[0, π/2)` from `seed` and
/// returns the first whose line families both stay below `tolerance`.
pub fn pick_direction(
    measure: &AtomicMeasure,
    candidates: usize,
    tolerance: f64,
    seed: u64,
) -> Result<DirectionChoice> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let thetas: Vec<f64> = (0..candidates).map(|_| rng.gen::<f64>() * FRAC_PI_2).collect();
    pick_direction_from(measure, &thetas, tolerance)
}

/// Tests the given angles in order.
pub fn pick_direction_from(measure: &AtomicMeasure, thetas: &[f64], tolerance: f64) -> Result<DirectionChoice> {
    for (k, &theta) in thetas.iter().enumerate() {
        let observed = charge(measure, theta);
        if observed <= tolerance {
            return Ok(DirectionChoice {
                theta0: theta.rem_euclid(FRAC_PI_2),
                line_mass_tolerance: tolerance,
                observed_line_mass: observed,
                attempts: k + 1,
            });
        }
    }
    Err(Error::NoDirection { candidates: thetas.len(), tolerance })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::{generate_ifs, generate_polyline, Similarity};
    use std::f64::consts::FRAC_PI_4;

    #[test]
    fn segment_charges_its_own_line() {
        let seg = generate_polyline(&[[0.0, 0.0], [1.0, 0.0]], 100.0).unwrap();
        let tol = 0.02;
        assert!(pick_direction_from(&seg, &[0.0], tol).is_err());
        let ok = pick_direction_from(&seg, &[0.0, FRAC_PI_4], tol).unwrap();
        assert_eq!(ok.theta0, FRAC_PI_4);
        assert_eq!(ok.attempts, 2);
    }

    #[test]
    fn orthogonal_segments_reject_zero_twice() {
        let h = generate_polyline(&[[0.0, 0.0], [1.0, 0.0]], 100.0).unwrap();
        let v = generate_polyline(&[[2.0, 0.0], [2.0, 1.0]], 100.0).unwrap();
        let both = h.union(&v).unwrap();
        assert!((max_line_mass(&both, 0.0) - 1.0).abs() < 1e-9);
        assert!((max_line_mass(&both, FRAC_PI_2) - 1.0).abs() < 1e-9);
        assert!(pick_direction_from(&both, &[0.0], 0.5).is_err());
    }

    #[test]
    fn cantor_dust_accepts_random_angles() {
        let r = 1.0 / 3.0;
        let maps = [
            Similarity::new(r, [0.0, 0.0]),
            Similarity::new(r, [2.0 / 3.0, 0.0]),
            Similarity::new(r, [0.0, 2.0 / 3.0]),
            Similarity::new(r, [2.0 / 3.0, 2.0 / 3.0]),
        ];
        let dust = generate_ifs(&maps, 5).unwrap();
        let tol = 2.0 * dust.weights()[0];
        for seed in 0..5 {
            let c = pick_direction(&dust, 1, tol, seed).unwrap();
            assert_eq!(c.attempts, 1);
            assert!(c.theta0 >= 0.0 && c.theta0 < FRAC_PI_2);
        }
    }

    #[test]
    fn deterministic_in_seed() {
        let seg = generate_polyline(&[[0.0, 0.0], [1.0, 1.0]], 50.0).unwrap();
        let a = pick_direction(&seg, 10, 0.05, 42).unwrap();
        let b = pick_direction(&seg, 10, 0.05, 42).unwrap();
        assert_eq!(a, b);
        let err = pick_direction_from(&seg, &[FRAC_PI_4], 0.05).unwrap_err();
        assert!(err.to_string().contains("finer tolerance"));
    }
}
