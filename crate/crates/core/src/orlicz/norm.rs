//! Luxemburg and dual (Orlicz / average / τ-average) norms on finite spaces.

use crate::error::{domain, Result};
use crate::roots;

use super::nfunction::{NFunction, NFunctionPair};
use super::space::WeightedSampleSpace;

fn check_values(f: &[f64], space: &WeightedSampleSpace) -> Result<()> {
    if f.len() != space.len() {
        return Err(domain(format!("{} values for a space of {} atoms", f.len(), space.len())));
    }
    if let Some(v) = f.iter().find(|v| !v.is_finite()) {
        return Err(domain(format!("non-finite value {v}")));
    }
    Ok(())
}

/// `inf{κ > 0 : Σ Ψ(|fᵢ|/κ) wᵢ ≤ 1}`.
///
/// Empty spaces and `f ≡ 0` give 0.
pub fn luxemburg_norm(f: &[f64], space: &WeightedSampleSpace, psi: &dyn NFunction) -> Result<f64> {
    check_values(f, space)?;
    let fmax = f.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if fmax == 0.0 {
        return Ok(0.0);
    }
    let w = space.weights();
    let excess =
        |kappa: f64| -> f64 { f.iter().zip(w).map(|(v, wi)| psi.eval(v.abs() / kappa) * wi).sum::<f64>() - 1.0 };
    let (lo, hi) = roots::expand_decreasing(excess, fmax, fmax)?;
    roots::bisect_log(excess, lo, hi, 1e-14)
}

/// Maximizer of the dual problem together with its value.
#[derive(Debug, Clone, PartialEq)]
pub struct DualSolution {
    pub value: f64,
    /// Lagrange multiplier of the active constraint (0 when `f ≡ 0`).
    pub lambda: f64,
    /// Optimal `gᵢ = Ψ'(fᵢ/λ)`.
    pub g: Vec<f64>,
}

/// `sup{Σ |fᵢ| gᵢ wᵢ : Σ Φ(gᵢ) wᵢ ≤ budget}` together with the optimal `g`.
///
/// Stationarity gives `gᵢ = Ψ'(|fᵢ|/λ)` (so `Φ'(gᵢ) = |fᵢ|/λ`), with `λ > 0`
/// fixed by making the constraint active. The constraint function is
/// decreasing in `λ`, so a geometric bracket plus bisection in `ln λ` locates
/// it for any pair.
pub fn orlicz_dual_solution(
    f: &[f64],
    space: &WeightedSampleSpace,
    pair: &NFunctionPair,
    budget: f64,
) -> Result<DualSolution> {
    if !(budget > 0.0 && budget.is_finite()) {
        return Err(domain(format!("budget must be positive and finite, got {budget}")));
    }
    check_values(f, space)?;
    let w = space.weights();
    let fmax = f.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if fmax == 0.0 {
        return Ok(DualSolution { value: 0.0, lambda: 0.0, g: vec![0.0; f.len()] });
    }
    let active: Vec<(f64, f64)> = f.iter().zip(w).filter(|(v, _)| **v != 0.0).map(|(v, wi)| (v.abs(), *wi)).collect();
    let slack = |lambda: f64| -> f64 {
        active.iter().map(|&(v, wi)| pair.slope_conjugate(v / lambda) * wi).sum::<f64>() - budget
    };
    let l1: f64 = active.iter().map(|(v, wi)| v * wi).sum();
    let lo = 1e-3 * l1 / budget;
    let hi = fmax * space.total_mass() / budget;
    let (lo, hi) = roots::expand_decreasing(slack, lo.min(hi), hi.max(lo))?;
    let lambda = roots::bisect_log(slack, lo, hi, 1e-15)?;
    let g: Vec<f64> = f.iter().map(|v| pair.psi.derivative(v.abs() / lambda)).collect();
    let value = f.iter().zip(&g).zip(w).map(|((v, gi), wi)| v.abs() * gi * wi).sum();
    Ok(DualSolution { value, lambda, g })
}

/// `sup{Σ |fᵢ| gᵢ wᵢ : Σ Φ(gᵢ) wᵢ ≤ budget}`.
///
/// `budget = 1` is the Orlicz norm, `budget = total_mass` the average norm and
/// `budget = τ·total_mass` the τ-average norm.
pub fn orlicz_norm_dual(f: &[f64], space: &WeightedSampleSpace, pair: &NFunctionPair, budget: f64) -> Result<f64> {
    Ok(orlicz_dual_solution(f, space, pair, budget)?.value)
}

/// The Orlicz norm `‖f‖_Ψ` (dual budget 1).
pub fn orlicz_norm(f: &[f64], space: &WeightedSampleSpace, pair: &NFunctionPair) -> Result<f64> {
    orlicz_norm_dual(f, space, pair, 1.0)
}

/// The average norm `‖f‖^(av)_Ψ` (dual budget `μ(Ω)`); 0 on the empty space.
pub fn average_norm(f: &[f64], space: &WeightedSampleSpace, pair: &NFunctionPair) -> Result<f64> {
    if space.is_empty() {
        return Ok(0.0);
    }
    orlicz_norm_dual(f, space, pair, space.total_mass())
}

/// The τ-average norm (dual budget `τ μ(Ω)`).
pub fn tau_average_norm(f: &[f64], space: &WeightedSampleSpace, pair: &NFunctionPair, tau: f64) -> Result<f64> {
    if !(tau > 0.0) {
        return Err(domain(format!("tau must be positive, got {tau}")));
    }
    if space.is_empty() {
        return Ok(0.0);
    }
    orlicz_norm_dual(f, space, pair, tau * space.total_mass())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orlicz::{eval_b, inv_a, BFunction};
    use std::f64::consts::E;

    #[test]
    fn zero_function_and_empty_space() {
        let space = WeightedSampleSpace::new(vec![1.0, 2.0]).unwrap();
        let pair = NFunctionPair::b_a();
        assert_eq!(luxemburg_norm(&[0.0, 0.0], &space, &BFunction).unwrap(), 0.0);
        assert_eq!(orlicz_norm(&[0.0, 0.0], &space, &pair).unwrap(), 0.0);
        let empty = WeightedSampleSpace::new(vec![]).unwrap();
        assert_eq!(luxemburg_norm(&[], &empty, &BFunction).unwrap(), 0.0);
        assert_eq!(average_norm(&[], &empty, &pair).unwrap(), 0.0);
    }

    #[test]
    fn constant_on_unit_mass() {
        let space = WeightedSampleSpace::new(vec![0.25; 4]).unwrap();
        let lux = luxemburg_norm(&[3.0; 4], &space, &BFunction).unwrap();
        assert!((lux - 3.0 / (E - 1.0)).abs() < 1e-12);
        assert!((lux - 1.745930).abs() < 1e-6);
        let dual = orlicz_norm(&[1.0; 4], &space, &NFunctionPair::b_a()).unwrap();
        assert!((dual - inv_a(1.0).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn two_atom_luxemburg_solves_scalar_equation() {
        let space = WeightedSampleSpace::new(vec![1.0, 1.0]).unwrap();
        let v = luxemburg_norm(&[1.0, 2.0], &space, &BFunction).unwrap();
        // independent scalar solve of 𝓑(1/v) + 𝓑(2/v) = 1
        let oracle =
            roots::bisect(|k| eval_b(1.0 / k).unwrap() + eval_b(2.0 / k).unwrap() - 1.0, 0.5, 10.0, 1e-16).unwrap();
        assert!((v - oracle).abs() < 1e-12 * oracle);
        let residual = eval_b(1.0 / v).unwrap() + eval_b(2.0 / v).unwrap() - 1.0;
        assert!(residual.abs() < 1e-9);
    }

    #[test]
    fn dual_constraint_is_active() {
        let space = WeightedSampleSpace::new(vec![0.3, 1.2, 0.5]).unwrap();
        let pair = NFunctionPair::b_a();
        let sol = orlicz_dual_solution(&[0.2, 4.0, 1.5], &space, &pair, 2.0).unwrap();
        let used: f64 = sol.g.iter().zip(space.weights()).map(|(g, w)| pair.phi.eval(*g) * w).sum();
        assert!((used - 2.0).abs() < 1e-10);
    }

    #[test]
    fn signed_input_uses_absolute_value() {
        let space = WeightedSampleSpace::new(vec![1.0, 1.0]).unwrap();
        let pair = NFunctionPair::b_a();
        let a = orlicz_norm(&[-1.0, 2.0], &space, &pair).unwrap();
        let b = orlicz_norm(&[1.0, 2.0], &space, &pair).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn invalid_arguments() {
        let space = WeightedSampleSpace::new(vec![1.0]).unwrap();
        let pair = NFunctionPair::b_a();
        assert!(orlicz_norm_dual(&[1.0], &space, &pair, 0.0).is_err());
        assert!(orlicz_norm_dual(&[1.0], &space, &pair, -1.0).is_err());
        assert!(orlicz_norm_dual(&[1.0, 2.0], &space, &pair, 1.0).is_err());
        assert!(luxemburg_norm(&[f64::NAN], &space, &BFunction).is_err());
    }

    #[test]
    fn general_pair_matches_closed_form_pair() {
        let space = WeightedSampleSpace::new(vec![0.7, 0.2, 1.1]).unwrap();
        let f = [0.5, 3.0, 1.0];
        let exact = orlicz_norm(&f, &space, &NFunctionPair::b_a()).unwrap();
        let numeric =
            orlicz_norm(&f, &space, &NFunctionPair::with_numeric_conjugate(std::sync::Arc::new(BFunction))).unwrap();
        assert!(((exact - numeric) / exact).abs() < 1e-8);
    }
}
