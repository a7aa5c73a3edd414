//! N-functions and complementary pairs.
//!
//! The concrete pair used throughout the crate is
//! `𝓑(s) = (1 + s) ln(1 + s) − s` with complement `𝓐(s) = eˢ − 1 − s`.
//! Other pairs are supported through [`NFunctionPair`], with the complement
//! computed as a numerical Legendre transform when no closed form is known.

use std::fmt;
use std::sync::Arc;

use crate::error::{domain, Result};
use crate::roots;

/// A convex, nondecreasing `Ψ: [0, ∞) → [0, ∞)` with `Ψ(t)/t → 0` at the
/// origin and `→ ∞` at infinity.
pub trait NFunction: Send + Sync + fmt::Debug {
    fn name(&self) -> &str;

    fn eval(&self, s: f64) -> f64;

    fn derivative(&self, s: f64) -> f64;

    /// Monotone inverse on `[0, ∞)`.
    fn inverse(&self, y: f64) -> f64 {
        convex_inverse(|s| self.eval(s), |s| self.derivative(s), y)
    }

    /// `Φ(Ψ'(s))` for the complementary function `Φ`, when a cancellation-free
    /// closed form exists.
    fn conjugate_at_slope(&self, _s: f64) -> Option<f64> {
        None
    }
}

/// Inverts an increasing convex `f` with `f(0) = 0`.
///
/// Newton iterates started to the right of the root decrease monotonically
/// onto it, so no safeguard beyond the initial bracket is needed.
pub(crate) fn convex_inverse<F, D>(f: F, df: D, y: f64) -> f64
where
    F: Fn(f64) -> f64,
    D: Fn(f64) -> f64,
{
    if y <= 0.0 {
        return 0.0;
    }
    if y.is_infinite() {
        return f64::INFINITY;
    }
    let mut hi = 1.0;
    while f(hi) < y {
        hi *= 2.0;
        if !hi.is_finite() {
            return f64::INFINITY;
        }
    }
    while hi > 1e-300 && f(0.5 * hi) >= y {
        hi *= 0.5;
    }
    let mut x = hi;
    for _ in 0..200 {
        let fx = f(x) - y;
        let d = df(x);
        if fx <= 0.0 || d <= 0.0 {
            break;
        }
        let step = fx / d;
        let next = x - step;
        if next <= 0.0 {
            x *= 0.5;
            continue;
        }
        if step <= 1e-16 * x {
            x = next;
            break;
        }
        x = next;
    }
    x
}

/// `𝓑(s) = (1 + s) ln(1 + s) − s`.
#[derive(Debug, Clone, Copy, Default)]
pub struct BFunction;

/// `𝓐(s) = eˢ − 1 − s`.
#[derive(Debug, Clone, Copy, Default)]
pub struct AFunction;

/// `Ψ(t) = tᵖ/p` for `1 < p < ∞`.
#[derive(Debug, Clone, Copy)]
pub struct PowerFunction {
    pub p: f64,
}

/// `Ψ(s) = 𝓑(s) / √ln(e + s)`: an N-function strictly weaker than `𝓑`
/// (`Ψ/𝓑 → 0`) that still satisfies `Ψ(s)/s → ∞`.
#[derive(Debug, Clone, Copy, Default)]
pub struct DampedB;

fn b_value(s: f64) -> f64 {
    if s < 1e-4 {
        s * s * (0.5 - s / 6.0 + s * s / 12.0)
    } else if s < 0.05 {
        // Σ_{k≥2} (−1)^k s^k / (k(k−1))
        let mut sum = 0.0;
        let mut pow = s * s;
        let mut k = 2.0;
        loop {
            let term = pow / (k * (k - 1.0));
            sum += if (k as i64) % 2 == 0 { term } else { -term };
            if term < 1e-18 * sum {
                break;
            }
            pow *= s;
            k += 1.0;
        }
        sum
    } else {
        (1.0 + s) * s.ln_1p() - s
    }
}

fn a_value(s: f64) -> f64 {
    if s < 0.05 {
        let mut sum = 0.0;
        let mut term = s * s / 2.0;
        let mut k = 2.0;
        while term > 1e-18 * sum || sum == 0.0 {
            sum += term;
            k += 1.0;
            term *= s / k;
            if term == 0.0 {
                break;
            }
        }
        sum
    } else {
        s.exp_m1() - s
    }
}

/// `s − ln(1 + s)`, which is `𝓐(𝓑'(s))`.
fn b_slope_conjugate(s: f64) -> f64 {
    if s < 0.05 {
        let mut sum = 0.0;
        let mut pow = s * s;
        let mut k = 2.0;
        loop {
            let term = pow / k;
            sum += if (k as i64) % 2 == 0 { term } else { -term };
            if term < 1e-18 * sum {
                break;
            }
            pow *= s;
            k += 1.0;
        }
        sum
    } else {
        s - s.ln_1p()
    }
}

impl NFunction for BFunction {
    fn name(&self) -> &str {
        "B"
    }
    fn eval(&self, s: f64) -> f64 {
        b_value(s.abs())
    }
    fn derivative(&self, s: f64) -> f64 {
        s.abs().ln_1p()
    }
    fn conjugate_at_slope(&self, s: f64) -> Option<f64> {
        Some(b_slope_conjugate(s.abs()))
    }
}

impl NFunction for AFunction {
    fn name(&self) -> &str {
        "A"
    }
    fn eval(&self, s: f64) -> f64 {
        a_value(s.abs())
    }
    fn derivative(&self, s: f64) -> f64 {
        s.abs().exp_m1()
    }
}

impl NFunction for PowerFunction {
    fn name(&self) -> &str {
        "power"
    }
    fn eval(&self, s: f64) -> f64 {
        s.abs().powf(self.p) / self.p
    }
    fn derivative(&self, s: f64) -> f64 {
        s.abs().powf(self.p - 1.0)
    }
    fn inverse(&self, y: f64) -> f64 {
        (self.p * y.max(0.0)).powf(1.0 / self.p)
    }
}

impl NFunction for DampedB {
    fn name(&self) -> &str {
        "B/sqrt(ln(e+s))"
    }
    fn eval(&self, s: f64) -> f64 {
        let s = s.abs();
        b_value(s) / (std::f64::consts::E + s).ln().sqrt()
    }
    fn derivative(&self, s: f64) -> f64 {
        let s = s.abs();
        let l = (std::f64::consts::E + s).ln();
        let q = l.sqrt();
        let dq = 0.5 / (q * (std::f64::consts::E + s));
        s.ln_1p() / q - b_value(s) * dq / l
    }
}

/// Complement `Φ(t) = sup_s (s t − Ψ(s))` of an arbitrary N-function, evaluated
/// by solving `Ψ'(s) = t`.
#[derive(Debug, Clone)]
pub struct NumericConjugate {
    psi: Arc<dyn NFunction>,
    name: String,
}

impl NumericConjugate {
    pub fn new(psi: Arc<dyn NFunction>) -> Self {
        let name = format!("conj({})", psi.name());
        Self { psi, name }
    }

    /// The maximizer `s*` with `Ψ'(s*) = t`.
    fn argmax(&self, t: f64) -> f64 {
        if t <= 0.0 {
            return 0.0;
        }
        let g = |s: f64| self.psi.derivative(s) - t;
        let mut hi = 1.0;
        while g(hi) < 0.0 {
            hi *= 2.0;
            if hi > 1e300 {
                return hi;
            }
        }
        roots::bisect(g, 0.0, hi, 1e-15).unwrap_or(hi)
    }
}

impl NFunction for NumericConjugate {
    fn name(&self) -> &str {
        &self.name
    }
    fn eval(&self, t: f64) -> f64 {
        let t = t.abs();
        let s = self.argmax(t);
        (s * t - self.psi.eval(s)).max(0.0)
    }
    fn derivative(&self, t: f64) -> f64 {
        self.argmax(t.abs())
    }
}

/// A complementary pair `(Ψ, Φ)`.
#[derive(Debug, Clone)]
pub struct NFunctionPair {
    pub psi: Arc<dyn NFunction>,
    pub phi: Arc<dyn NFunction>,
}

impl NFunctionPair {
    /// The pair `(𝓑, 𝓐)`.
    pub fn b_a() -> Self {
        Self { psi: Arc::new(BFunction), phi: Arc::new(AFunction) }
    }

    /// The pair `(tᵖ/p, t^q/q)` with `1/p + 1/q = 1`.
    pub fn power(p: f64) -> Result<Self> {
        if !(p > 1.0 && p.is_finite()) {
            return Err(domain(format!("power exponent must lie in (1, ∞), got {p}")));
        }
        let q = p / (p - 1.0);
        Ok(Self { psi: Arc::new(PowerFunction { p }), phi: Arc::new(PowerFunction { p: q }) })
    }

    /// `Ψ` paired with its numerically evaluated complement.
    pub fn with_numeric_conjugate(psi: Arc<dyn NFunction>) -> Self {
        let phi = Arc::new(NumericConjugate::new(psi.clone()));
        Self { psi, phi }
    }

    pub fn name(&self) -> String {
        format!("({}, {})", self.psi.name(), self.phi.name())
    }

    /// `Φ(Ψ'(s))`, the complementary cost of the optimal dual slope.
    pub fn slope_conjugate(&self, s: f64) -> f64 {
        self.psi.conjugate_at_slope(s).unwrap_or_else(|| self.phi.eval(self.psi.derivative(s)))
    }

    /// Runs the sampled N-function checks and returns a description of each
    /// violation (empty when all pass).
    pub fn check_invariants(&self, young_pairs: &[(f64, f64)]) -> Vec<String> {
        let mut failures = Vec::new();
        for (label, f) in [("psi", &self.psi), ("phi", &self.phi)] {
            if f.eval(0.0) != 0.0 {
                failures.push(format!("{label}(0) = {} != 0", f.eval(0.0)));
            }
            let grid: Vec<f64> = (0..=400).map(|i| 10f64.powf(-6.0 + 12.0 * i as f64 / 400.0)).collect();
            let vals: Vec<f64> = grid.iter().map(|&s| f.eval(s)).collect();
            for w in 1..grid.len() {
                if vals[w] < vals[w - 1] {
                    failures.push(format!("{label} decreases at s = {:e}", grid[w]));
                    break;
                }
            }
            let slopes: Vec<f64> = (1..grid.len()).map(|i| (vals[i] - vals[i - 1]) / (grid[i] - grid[i - 1])).collect();
            for i in 1..slopes.len() {
                if slopes[i] < slopes[i - 1] * (1.0 - 1e-6) - 1e-300 {
                    failures.push(format!("{label} secant slopes decrease near s = {:e}", grid[i]));
                    break;
                }
            }
            let small = f.eval(1e-8) / 1e-8;
            let large = f.eval(1e8) / 1e8;
            if small > 1e-3 {
                failures.push(format!("{label}(t)/t = {small:e} at t = 1e-8"));
            }
            if large < 2.0 {
                failures.push(format!("{label}(t)/t = {large:e} at t = 1e8"));
            }
            for i in 0..=60 {
                let s = 10f64.powf(-6.0 + 12.0 * i as f64 / 60.0);
                let y = f.eval(s);
                if !y.is_finite() {
                    continue;
                }
                let back = f.inverse(y);
                if ((back - s) / s).abs() > 1e-10 {
                    failures.push(format!("{label} inverse round trip {s:e} -> {back:e}"));
                    break;
                }
            }
        }
        for &(s, t) in young_pairs {
            let lhs = s * t;
            let rhs = self.psi.eval(s) + self.phi.eval(t);
            if lhs > rhs * (1.0 + 1e-12) + 1e-15 {
                failures.push(format!("Young inequality fails at ({s}, {t}): {lhs} > {rhs}"));
            }
        }
        failures
    }
}

fn check_arg(s: f64, what: &str) -> Result<f64> {
    if !s.is_finite() {
        return Err(domain(format!("{what}: argument must be finite, got {s}")));
    }
    if s < 0.0 {
        return Err(domain(format!("{what}: argument must be nonnegative, got {s}")));
    }
    Ok(s)
}

/// `𝓑(s)` for finite `s ≥ 0`.
pub fn eval_b(s: f64) -> Result<f64> {
    Ok(b_value(check_arg(s, "eval_B")?))
}

/// The unique `s ≥ 0` with `𝓑(s) = y`.
pub fn inv_b(y: f64) -> Result<f64> {
    let y = check_arg(y, "inv_B")?;
    Ok(BFunction.inverse(y))
}

/// `𝓐(s)` for finite `s ≥ 0`.
pub fn eval_a(s: f64) -> Result<f64> {
    Ok(a_value(check_arg(s, "eval_A")?))
}

/// The unique `s ≥ 0` with `𝓐(s) = y`.
pub fn inv_a(y: f64) -> Result<f64> {
    let y = check_arg(y, "inv_A")?;
    Ok(AFunction.inverse(y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::E;

    #[test]
    fn b_closed_forms() {
        assert_eq!(eval_b(0.0).unwrap(), 0.0);
        assert!((eval_b(E - 1.0).unwrap() - 1.0).abs() < 1e-15);
        assert!((eval_b(1.0).unwrap() - (2.0 * 2f64.ln() - 1.0)).abs() < 1e-15);
    }

    #[test]
    fn b_series_branches_agree_at_switchovers() {
        for s in [1e-4, 0.05] {
            let below = b_value(s * (1.0 - 1e-12));
            let above = b_value(s * (1.0 + 1e-12));
            assert!(((below - above) / above).abs() < 1e-9, "{s}: {below} vs {above}");
        }
        // tiny arguments: leading term dominates
        assert!((b_value(1e-9) / 5e-19 - 1.0).abs() < 1e-8);
    }

    #[test]
    fn inverses() {
        assert!((inv_b(1.0).unwrap() - (E - 1.0)).abs() < 1e-12);
        assert_eq!(inv_b(0.0).unwrap(), 0.0);
        let a1 = inv_a(1.0).unwrap();
        // bisection oracle on e^g − 1 − g = 1
        let oracle = roots::bisect(|g| g.exp() - 2.0 - g, 0.5, 2.0, 1e-16).unwrap();
        assert!((a1 - oracle).abs() < 1e-12);
        assert!((a1 - 1.14619).abs() < 1e-5);
        assert!((eval_a(a1).unwrap() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn non_finite_and_negative_inputs_are_domain_errors() {
        assert!(eval_b(f64::NAN).is_err());
        assert!(eval_b(f64::INFINITY).is_err());
        assert!(inv_b(-1.0).is_err());
        assert!(inv_a(-0.5).is_err());
    }

    #[test]
    fn pair_invariants_hold() {
        let pairs = [(0.3, 2.0), (5.0, 0.1), (10.0, 3.0), (1e-3, 7.0), (50.0, 50.0)];
        for pair in [
            NFunctionPair::b_a(),
            NFunctionPair::power(3.0).unwrap(),
            NFunctionPair::with_numeric_conjugate(Arc::new(BFunction)),
            NFunctionPair::with_numeric_conjugate(Arc::new(DampedB)),
        ] {
            let failures = pair.check_invariants(&pairs);
            assert!(failures.is_empty(), "{}: {failures:?}", pair.name());
        }
    }

    #[test]
    fn numeric_conjugate_of_b_is_a() {
        let conj = NumericConjugate::new(Arc::new(BFunction));
        for t in [0.01, 0.5, 1.0, 3.0, 10.0] {
            let exact = a_value(t);
            assert!(((conj.eval(t) - exact) / exact).abs() < 1e-9, "t = {t}");
        }
    }

    #[test]
    fn damped_derivative_matches_finite_differences() {
        for s in [0.01, 1.0, 30.0, 1e4] {
            let h = s * 1e-6;
            let fd = (DampedB.eval(s + h) - DampedB.eval(s - h)) / (2.0 * h);
            assert!(((DampedB.derivative(s) - fd) / fd).abs() < 1e-6, "s = {s}");
        }
    }

    #[test]
    fn slope_conjugate_matches_generic_route() {
        let pair = NFunctionPair::b_a();
        for s in [1e-6, 0.01, 0.049, 0.051, 2.0, 1e5] {
            let generic = pair.phi.eval(pair.psi.derivative(s));
            let fast = pair.slope_conjugate(s);
            assert!(((generic - fast) / fast).abs() < 1e-8, "s = {s}: {generic} vs {fast}");
        }
    }
}
