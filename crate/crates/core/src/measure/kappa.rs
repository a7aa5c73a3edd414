//! The doubling ratio `κ₀(G) = μ(G*)/μ(Ḡ)`.

use super::geometry::Region;
use super::AtomicMeasure;
use crate::error::{domain, Result};

/// `G₀` is the smallest square in direction `theta0` containing `region` and
/// `G*` is concentric with three times its side.
pub fn kappa0(measure: &AtomicMeasure, region: &Region, theta0: f64) -> Result<f64> {
    let inside = measure.region_mass(region);
    if !(inside > 0.0) {
        return Err(domain(format!("region {region:?} carries no mass")));
    }
    let star = Region::Square(region.enclosing_square(theta0).scaled(3.0));
    Ok(measure.region_mass(&star) / inside)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::{generate_lebesgue, verify_ahlfors, Rect, Square};

    #[test]
    fn whole_support_gives_one() {
        let m = generate_lebesgue(Rect::unit(), 20).unwrap();
        let sq = Square { center: [0.5, 0.5], side: 1.0, theta: 0.0 };
        assert_eq!(kappa0(&m, &Region::Square(sq), 0.0).unwrap(), 1.0);
        let empty = Square { center: [5.0, 5.0], side: 1.0, theta: 0.0 };
        assert!(kappa0(&m, &Region::Square(empty), 0.0).is_err());
    }

    #[test]
    fn annulus_and_square_upper_bounds() {
        let m = generate_lebesgue(Rect { min: [-4.0, -4.0], max: [4.0, 4.0] }, 320).unwrap();
        let radii: Vec<f64> = (0..8).map(|i| 0.3 * 1.3f64.powi(i)).collect();
        let centers: Vec<[f64; 2]> = (0..9).map(|i| [-0.8 + 0.2 * i as f64, 0.1 * i as f64 - 0.4]).collect();
        let est = crate::measure::verify_ahlfors_at(&m, &centers, &radii).unwrap();
        let ratio = est.c1 / est.c0;
        let rho = (2.0 * ratio).sqrt();
        let ann = Region::Annulus { center: [0.0, 0.0], inner: 0.5, outer: 0.5 * rho };
        let k_ann = kappa0(&m, &ann, 0.3).unwrap();
        assert!(k_ann <= 2.0 * ratio * 36.0, "{k_ann}");
        let sq = Region::Square(Square { center: [0.2, -0.1], side: 1.0, theta: 0.3 });
        let k_sq = kappa0(&m, &sq, 0.3).unwrap();
        assert!(k_sq <= ratio * 72.0, "{k_sq}");
        assert!(k_sq >= 1.0 && k_ann >= 1.0);
        let _ = verify_ahlfors(&m, 1, &[1.0]).unwrap();
    }
}
