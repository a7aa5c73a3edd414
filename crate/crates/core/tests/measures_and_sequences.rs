//! Cross-module properties of measures, annuli and the G/D sequences.

use std::f64::consts::{FRAC_PI_6, PI};

use morse_index::decomposition::{cal_g_sequence, d_sequence, g_sequence, radialize, AnnularScheme};
use morse_index::measure::{
    generate_circle, generate_ifs, generate_lebesgue, pick_direction_from, AtomicMeasure, Rect, Similarity,
};
use morse_index::orlicz::{average_norm, NFunctionPair, WeightedSampleSpace};
use morse_index::potential::PotentialField;

fn cantor_dust(depth: u32) -> AtomicMeasure {
    let maps: Vec<Similarity> = [[0.0, 0.0], [2.0 / 3.0, 0.0], [0.0, 2.0 / 3.0], [2.0 / 3.0, 2.0 / 3.0]]
        .iter()
        .map(|&t| Similarity::new(1.0 / 3.0, t))
        .collect();
    generate_ifs(&maps, depth).unwrap()
}

fn slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let (lx, ly): (Vec<f64>, Vec<f64>) = xs.iter().zip(ys).map(|(x, y)| (x.ln(), y.ln())).unzip();
    let (mx, my) = (lx.iter().sum::<f64>() / n, ly.iter().sum::<f64>() / n);
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = lx.iter().map(|x| (x - mx).powi(2)).sum();
    sxy / sxx
}

#[test]
fn ifs_mass_scaling_matches_dimension() {
    let mu = cantor_dust(7);
    let alpha = 4f64.ln() / 3f64.ln();
    assert!((mu.alpha() - alpha).abs() < 1e-12);
    assert!((mu.total_mass() - 1.0).abs() < 1e-9);
    let radii: Vec<f64> = (1..=5).map(|k| 3f64.powi(-k)).collect();
    let index = mu.index();
    let centers: Vec<_> = (0..50).map(|i| mu.points()[i * mu.len() / 50]).collect();
    let masses: Vec<f64> = radii
        .iter()
        .map(|&r| centers.iter().map(|&c| index.ball_mass(c, r)).sum::<f64>() / centers.len() as f64)
        .collect();
    let s = slope(&radii, &masses);
    assert!((s / alpha - 1.0).abs() < 0.05, "slope {s} vs {alpha}");
}

#[test]
fn direction_test_is_rotation_invariant() {
    let mu = generate_lebesgue(Rect::unit(), 20).unwrap();
    let rotated = mu.transformed(1.0, FRAC_PI_6).unwrap();
    let mut thetas = vec![0.0, 0.5f64.atan(), 1.0 / 3.0];
    thetas.extend((0..40).map(|i| 0.037 * i as f64 + 0.011));
    let mut accepted = 0;
    for &t in &thetas {
        let a = pick_direction_from(&mu, &[t], 0.01).is_ok();
        let b = pick_direction_from(&rotated, &[t + FRAC_PI_6], 0.01).is_ok();
        assert_eq!(a, b, "theta {t}");
        accepted += a as usize;
    }
    assert!(pick_direction_from(&mu, &[0.0], 0.01).is_err());
    assert!(accepted > 20);
}

#[test]
fn radialization_identity() {
    let circles = generate_circle([0.0, 0.0], (-1f64).exp(), 200)
        .unwrap()
        .union(&generate_circle([0.0, 0.0], 1.0, 300).unwrap())
        .unwrap()
        .union(&generate_circle([0.0, 0.0], 2f64.exp(), 500).unwrap())
        .unwrap();
    let dust = cantor_dust(5);
    for mu in [circles, dust] {
        for v in [
            PotentialField::constant(&mu, 1.7).unwrap(),
            PotentialField::radial(&mu, |r| 1.0 / (1.0 + r * r)).unwrap(),
            PotentialField::from_fn(&mu, |p| 1.0 + p[0].abs()).unwrap(),
        ] {
            let g = g_sequence(&v, &mu);
            let cal = cal_g_sequence(&radialize(&v, &mu));
            assert_eq!(g.keys().collect::<Vec<_>>(), cal.keys().collect::<Vec<_>>());
            for (n, gn) in &g {
                assert!(
                    (gn - 2.0 * PI * cal[n]).abs() <= 1e-12 * gn.max(1.0),
                    "n = {n}: {gn} vs {}",
                    2.0 * PI * cal[n]
                );
            }
        }
    }
}

#[test]
fn even_annuli_sum_below_whole_norm() {
    let mu = cantor_dust(5);
    let v = PotentialField::from_fn(&mu, |p| 3.0 + 10.0 * p[1]).unwrap();
    let scheme = AnnularScheme::new(Some(mu.diam_support()), 2.0, mu.alpha()).unwrap().assign(&mu);
    let d = d_sequence(&v, &mu, &scheme).unwrap();
    let pair = NFunctionPair::b_a();
    let whole = average_norm(v.values(), &WeightedSampleSpace::new(mu.weights().to_vec()).unwrap(), &pair).unwrap();
    for parity in [0, 1] {
        let s: f64 = d.iter().filter(|(n, _)| n.rem_euclid(2) == parity).map(|(_, x)| x).sum();
        assert!(s <= whole * (1.0 + 1e-9), "parity {parity}: {s} > {whole}");
    }
}

#[test]
fn scaling_shifts_annuli_by_one() {
    let mu = cantor_dust(5).translated([0.05, 0.02]);
    let v = PotentialField::from_fn(&mu, |p| 1.0 + p[0]).unwrap();
    let base = AnnularScheme::new(None, 1.5, mu.alpha()).unwrap().with_eta(0.9).unwrap();
    let scheme = base.clone().assign(&mu);
    let scaled_mu = mu.transformed(base.ratio(), 0.0).unwrap();
    let scaled_v = PotentialField::from_values(&scaled_mu, v.values().to_vec()).unwrap();
    let scaled_scheme = base.assign(&scaled_mu);
    let shifted: Vec<i64> = scheme.n_range().iter().map(|n| n + 1).collect();
    assert_eq!(scaled_scheme.n_range(), &shifted[..]);
    let d = d_sequence(&v, &mu, &scheme).unwrap();
    let ds = d_sequence(&scaled_v, &scaled_mu, &scaled_scheme).unwrap();
    for (n, x) in &d {
        assert!((ds[&(n + 1)] - x).abs() <= 1e-12 * x, "n = {n}");
    }
}
