use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::measure::{AtomicMeasure, Point};
use crate::orlicz::{BFunction, NFunction};
use crate::potential::PotentialField;

/// Largest `ln s` at which `Ψ(s)` and `𝓑(s)` are still evaluated.
const LN_S_MAX: f64 = 690.0;
const GRID_STEP: f64 = std::f64::consts::LN_10 / 10.0;

/// `β(e^u) = sup_{s ≥ e^u} Ψ(s)/𝓑(s)`, the supremum taken over a log grid
/// with ten points per decade up to `e^690`.
pub fn beta(psi: &dyn NFunction, ln_s: f64) -> f64 {
    let ratio = |u: f64| {
        let s = u.exp();
        psi.eval(s) / BFunction.eval(s)
    };
    let mut best = ratio(ln_s);
    let mut u = ln_s + GRID_STEP;
    while u <= LN_S_MAX {
        best = best.max(ratio(u));
        u += GRID_STEP;
    }
    best
}

/// Rejects `Ψ` unless `β` decays numerically: `β(10²⁵⁰)` at most half of
/// `β(e)`, and still strictly decreasing between `10²⁰⁰` and `10²⁵⁰`.
pub fn check_weaker(psi: &dyn NFunction) -> Result<()> {
    let ln10 = std::f64::consts::LN_10;
    let start = beta(psi, 1.0);
    let mid = beta(psi, 200.0 * ln10);
    let end = beta(psi, 250.0 * ln10);
    if end <= 0.5 * start && end < mid * (1.0 - 1e-6) {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "{}/B does not decay to 0: beta(e) = {start:.6}, beta(1e200) = {mid:.6}, beta(1e250) = {end:.6}",
            psi.name()
        )))
    }
}

/// The smallest `s₀ ≥ e^{1/α}` with `Ψ(s) ≥ s` and `β(s) ≤ 1` for all
/// `s ≥ s₀^α`, by grid search in `ln s` followed by bisection.
pub fn threshold_s0(psi: &dyn NFunction, alpha: f64) -> Result<f64> {
    let good = |u: f64| {
        let s = u.exp();
        let p = psi.eval(s);
        p >= s && p <= BFunction.eval(s)
    };
    let mut grid = Vec::new();
    let mut u = 1.0;
    while u <= LN_S_MAX {
        grid.push(u);
        u += GRID_STEP / 4.0;
    }
    let last_bad = grid.iter().rposition(|&u| !good(u));
    let ln_u = match last_bad {
        None => 1.0,
        Some(i) if i + 1 == grid.len() => {
            return Err(Error::Precondition(format!("{}(s) >= s fails up to s = e^{LN_S_MAX}", psi.name())));
        }
        Some(i) => {
            let (mut lo, mut hi) = (grid[i], grid[i + 1]);
            for _ in 0..100 {
                let mid = 0.5 * (lo + hi);
                if good(mid) {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            hi
        }
    };
    Ok((ln_u.max(1.0) / alpha).exp())
}

/// `t = A₁₉ r^{−2α} / ln(1/r)`.
pub fn height(a19: f64, r: f64, alpha: f64) -> f64 {
    a19 * r.powf(-2.0 * alpha) / (1.0 / r).ln()
}

/// Numerical `∫|∇w|²` for the log cutoff `w = ln(r/|x|)/ln(1/r)` clamped to
/// `[0, 1]`: node values on a geometric grid of `n` cells over `[r², r]`,
/// squared difference quotients weighted by `2πρ Δρ` at cell midpoints.
pub fn gradient_energy_quadrature(r: f64, n: usize) -> f64 {
    let l = (1.0 / r).ln();
    let w = |rho: f64| ((r / rho).ln() / l).clamp(0.0, 1.0);
    let (a, b) = ((r * r).ln(), r.ln());
    let node = |i: usize| (a + (b - a) * i as f64 / n as f64).exp();
    (0..n)
        .map(|i| {
            let (p, q) = (node(i), node(i + 1));
            let slope = (w(q) - w(p)) / (q - p);
            2.0 * PI * 0.5 * (p + q) * (q - p) * slope * slope
        })
        .sum()
}

/// Supports near the origin on which the construction is placed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MeasureFamily {
    /// Planar Lebesgue measure: `α = 2`, `c₀ = π`.
    Lebesgue,
    /// Length on the x-axis: `α = 1`, `c₀ = 2`.
    Line,
    /// Arclength on the circle of this radius about the origin.
    Circle { radius: f64 },
}

impl MeasureFamily {
    pub fn alpha(&self) -> f64 {
        match self {
            Self::Lebesgue => 2.0,
            Self::Line | Self::Circle { .. } => 1.0,
        }
    }

    pub fn c0(&self) -> f64 {
        match self {
            Self::Lebesgue => PI,
            Self::Line => 2.0,
            Self::Circle { .. } => 1.0,
        }
    }

    fn tag(&self) -> &'static str {
        match self {
            Self::Lebesgue => "counterexample-lebesgue",
            Self::Line => "counterexample-line",
            Self::Circle { .. } => "counterexample-circle",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConstructionOptions {
    pub a19: f64,
    /// The bumps stay inside `B(0, r0)`.
    pub r0: f64,
    /// Each step multiplies `β(1/ρ^α)` by at most this factor.
    pub beta_decay: f64,
    pub patch_rings: usize,
    pub patch_sectors: usize,
    /// Extra schedule terms (no atoms) used only for tail estimates.
    pub tail_terms: usize,
}

impl ConstructionOptions {
    /// `A₁₉ = factor · 2π/c₀` for the given family.
    pub fn with_threshold_factor(family: MeasureFamily, factor: f64) -> Self {
        Self { a19: factor * 2.0 * PI / family.c0(), ..Self::default() }
    }
}

impl Default for ConstructionOptions {
    fn default() -> Self {
        Self { a19: 4.0, r0: 1.0, beta_decay: 0.85, patch_rings: 8, patch_sectors: 16, tail_terms: 10 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Bump {
    pub center: Point,
    pub rho: f64,
    /// `r_k = |x^{(k)}|/2`.
    pub radius: f64,
    /// `t_k`, the value of `V` on `B(x^{(k)}, r_k²)`.
    pub height: f64,
    /// `β(1/ρ_k^α)`.
    pub beta: f64,
    /// `c₀ r_k^{2α}`.
    pub mass: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CounterexampleSpec {
    pub family: MeasureFamily,
    pub alpha: f64,
    pub c0: f64,
    pub a19: f64,
    pub s0: f64,
    pub r0: f64,
    pub psi: String,
    /// Bumps carrying atoms.
    pub bumps: Vec<Bump>,
    /// Continuation of the schedule, used for tail estimates only.
    pub tail: Vec<Bump>,
}

impl CounterexampleSpec {
    pub fn threshold(&self) -> f64 {
        2.0 * PI / self.c0
    }

    fn all_bumps(&self) -> impl Iterator<Item = &Bump> {
        self.bumps.iter().chain(&self.tail)
    }
}

/// Atoms of one bump in coordinates relative to its centre, which keeps the
/// quadrature exact even when `r_k²` is below the resolution of `|x^{(k)}|`.
#[derive(Debug, Clone, PartialEq)]
pub struct Patch {
    pub offsets: Vec<Point>,
    pub weights: Vec<f64>,
    /// Index of the first of these atoms in the measure.
    pub first_atom: usize,
}

#[derive(Debug, Clone)]
pub struct Counterexample {
    pub spec: CounterexampleSpec,
    pub measure: AtomicMeasure,
    pub potential: PotentialField,
    pub patches: Vec<Patch>,
}

fn patch(family: MeasureFamily, radius: f64, opts: &ConstructionOptions) -> Patch {
    let (nr, ns) = (opts.patch_rings, opts.patch_sectors);
    let mut offsets = Vec::with_capacity(nr * ns);
    let mut weights = Vec::with_capacity(nr * ns);
    match family {
        MeasureFamily::Lebesgue => {
            let dtheta = 2.0 * PI / ns as f64;
            for i in 0..nr {
                let (a, b) = (radius * i as f64 / nr as f64, radius * (i + 1) as f64 / nr as f64);
                let mid = 0.5 * (a + b);
                for j in 0..ns {
                    let th = (j as f64 + 0.5) * dtheta;
                    offsets.push([mid * th.cos(), mid * th.sin()]);
                    weights.push(0.5 * (b * b - a * a) * dtheta);
                }
            }
        }
        MeasureFamily::Line | MeasureFamily::Circle { .. } => {
            let n = nr * ns;
            let w = 2.0 * radius / n as f64;
            for i in 0..n {
                offsets.push([-radius + (i as f64 + 0.5) * w, 0.0]);
                weights.push(w);
            }
        }
    }
    Patch { offsets, weights, first_atom: 0 }
}

/// Places `k` bumps of height `t_k` on `B(x^{(k)}, r_k²)` along the positive
/// x-axis, with `ρ_{k+1}` the largest value `≤ ρ_k/2` for which
/// `β(1/ρ_{k+1}^α) ≤ beta_decay · β(1/ρ_k^α)`.
pub fn build_counterexample(
    psi: &dyn NFunction,
    family: MeasureFamily,
    k: usize,
    opts: ConstructionOptions,
) -> Result<Counterexample> {
    if let MeasureFamily::Circle { radius } = family {
        return Err(Error::Precondition(format!(
            "the circle of radius {radius} has no support points in B(0, r) for r < {radius}"
        )));
    }
    if k == 0 {
        return Err(domain("at least one bump is required"));
    }
    if !(opts.a19 > 0.0 && opts.r0 > 0.0 && opts.beta_decay > 0.0 && opts.beta_decay < 1.0) {
        return Err(domain(format!("invalid construction options {opts:?}")));
    }
    if opts.patch_rings * opts.patch_sectors < 100 {
        return Err(domain("each bump needs at least 100 atoms"));
    }
    check_weaker(psi)?;
    let alpha = family.alpha();
    let c0 = family.c0();
    let s0 = threshold_s0(psi, alpha)?;

    // ln(1/ρ) schedule
    let beta_at = |l: f64| beta(psi, alpha * l);
    let mut logs = vec![(2.0 * s0).ln()];
    let mut betas = vec![beta_at(logs[0])];
    let total = k + opts.tail_terms;
    while logs.len() < total {
        let prev = *logs.last().unwrap();
        let target = opts.beta_decay * betas.last().unwrap();
        let lo = prev + std::f64::consts::LN_2;
        let l_max = LN_S_MAX / alpha;
        let next = if beta_at(lo) <= target {
            lo
        } else if beta_at(l_max) > target {
            break;
        } else {
            let (mut a, mut b) = (lo, l_max);
            for _ in 0..80 {
                let m = 0.5 * (a + b);
                if beta_at(m) <= target {
                    b = m;
                } else {
                    a = m;
                }
            }
            b
        };
        logs.push(next);
        betas.push(beta_at(next));
    }

    let mut schedule = Vec::new();
    let mut norm = 0.0;
    for (i, (&l, &b)) in logs.iter().zip(&betas).enumerate() {
        let rho = (-l).exp();
        norm = if i == 0 { 0.9 * (2.0 * opts.r0 / 3.0).min(2.0 * rho) } else { 0.9 * (norm / 3.0).min(2.0 * rho) };
        let r = 0.5 * norm;
        let t = height(opts.a19, r, alpha);
        let mass = c0 * r.powf(2.0 * alpha);
        if !(t.is_finite() && mass > 1e-300) {
            if i < k {
                return Err(domain(format!("bump {} (r = {r:e}) is not representable in double precision", i + 1)));
            }
            break;
        }
        schedule.push(Bump { center: [norm, 0.0], rho, radius: r, height: t, beta: b, mass });
    }
    if schedule.len() < k {
        return Err(Error::NoConvergence(format!("beta schedule stalled after {} of {k} bumps", schedule.len())));
    }
    let tail = schedule.split_off(k);

    let mut points = Vec::new();
    let mut weights = Vec::new();
    let mut values = Vec::new();
    let mut patches = Vec::new();
    for b in &schedule {
        let mut p = patch(family, b.radius * b.radius, &opts);
        p.first_atom = points.len();
        for (o, w) in p.offsets.iter().zip(&p.weights) {
            points.push([b.center[0] + o[0], b.center[1] + o[1]]);
            weights.push(*w);
            values.push(b.height);
        }
        patches.push(p);
    }
    let measure = AtomicMeasure::new(points, weights, alpha, family.tag())?;
    let potential = PotentialField::from_values(&measure, values)?;
    let spec = CounterexampleSpec {
        family,
        alpha,
        c0,
        a19: opts.a19,
        s0,
        r0: opts.r0,
        psi: psi.name().to_string(),
        bumps: schedule,
        tail,
    };
    Ok(Counterexample { spec, measure, potential, patches })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RayleighStatus {
    /// The lower bound alone forces `𝓔[w_k] < 0`.
    Negative,
    /// `A₁₉ = 2π/c₀`: the lower bound gives exactly zero.
    Borderline,
    /// The lower bound leaves the sign open.
    Indeterminate,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RayleighCheck {
    pub k: usize,
    pub radius: f64,
    /// `2π/ln(1/r_k)`.
    pub gradient: f64,
    /// `∫V|w_k|² dμ` by atomic quadrature.
    pub potential: f64,
    /// `c₀A₁₉/ln(1/r_k)`.
    pub lower_bound: f64,
    pub energy: f64,
    pub negative: bool,
    pub lower_bound_holds: bool,
    pub status: RayleighStatus,
}

/// `𝓔[w_k]` for the log cutoff around bump `k` (1-based).
pub fn rayleigh_check(ce: &Counterexample, k: usize) -> Result<RayleighCheck> {
    let spec = &ce.spec;
    if k == 0 || k > spec.bumps.len() {
        return Err(domain(format!("bump index {k} outside 1..={}", spec.bumps.len())));
    }
    let b = spec.bumps[k - 1];
    let patch = &ce.patches[k - 1];
    let r = b.radius;
    let l = (1.0 / r).ln();
    let w = |o: &Point| ((r / o[0].hypot(o[1])).ln() / l).clamp(0.0, 1.0);
    let potential: f64 = patch.offsets.iter().zip(&patch.weights).map(|(o, m)| b.height * w(o).powi(2) * m).sum();
    let gradient = 2.0 * PI / l;
    let lower_bound = spec.c0 * spec.a19 / l;
    let margin = 2.0 * PI - spec.c0 * spec.a19;
    let status = if margin.abs() <= 1e-12 * 2.0 * PI {
        RayleighStatus::Borderline
    } else if margin < 0.0 {
        RayleighStatus::Negative
    } else {
        RayleighStatus::Indeterminate
    };
    let energy = gradient - potential;
    Ok(RayleighCheck {
        k,
        radius: r,
        gradient,
        potential,
        lower_bound,
        energy,
        negative: energy < 0.0,
        lower_bound_holds: potential >= lower_bound * (1.0 - 1e-12),
        status,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeriesReport {
    pub terms: Vec<f64>,
    pub partial_sums: Vec<f64>,
    /// `tail_{k+1}/tail_k` with `tail_k = Σ_{j > k} terms_j` (1-based `k`);
    /// the last entry is dropped since its tail is empty.
    pub tail_ratios: Vec<f64>,
}

impl SeriesReport {
    fn new(terms: Vec<f64>) -> Self {
        let partial_sums: Vec<f64> = terms
            .iter()
            .scan(0.0, |s, t| {
                *s += t;
                Some(*s)
            })
            .collect();
        let n = terms.len();
        let tails: Vec<f64> = (1..=n).map(|k| terms[k..].iter().sum()).collect();
        let tail_ratios = tails.windows(2).take_while(|w| w[1] > 0.0).map(|w| w[1] / w[0]).collect();
        Self { terms, partial_sums, tail_ratios }
    }

    /// Largest tail ratio at indices `k > from` (1-based).
    pub fn max_tail_ratio_after(&self, from: usize) -> Option<f64> {
        self.tail_ratios.iter().skip(from).copied().reduce(f64::max)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FinitenessReport {
    pub psi: String,
    /// `Ψ(t_k) μ(B(x^{(k)}, r_k²))`.
    pub psi_series: SeriesReport,
    /// `∫_{B_k} V W dμ`.
    pub vw_series: SeriesReport,
    /// The disks `B(x^{(k)}, |x^{(k)}|/2)` are pairwise disjoint.
    pub disjoint: bool,
    /// ... and contained in `B(0, r0)`.
    pub inside_r0: bool,
}

/// Partial sums of `Σ Ψ(t_k) μ(B_k)` and `Σ ∫_{B_k} VW dμ` over the bumps and
/// the schedule tail. Tail bumps carry no atoms, so there `W` is taken at the
/// centre and `μ(B_k) = c₀ r_k^{2α}`.
pub fn finiteness_check(ce: &Counterexample, psi: &dyn NFunction, w: &dyn Fn(Point) -> f64) -> FinitenessReport {
    let spec = &ce.spec;
    let psi_terms = spec.all_bumps().map(|b| psi.eval(b.height) * b.mass).collect();
    let mut vw_terms: Vec<f64> = spec
        .bumps
        .iter()
        .zip(&ce.patches)
        .map(|(b, p)| {
            p.offsets
                .iter()
                .zip(&p.weights)
                .map(|(o, m)| b.height * w([b.center[0] + o[0], b.center[1] + o[1]]) * m)
                .sum()
        })
        .collect();
    vw_terms.extend(spec.tail.iter().map(|b| b.height * w(b.center) * b.mass));

    let disks: Vec<(f64, f64)> =
        spec.all_bumps().map(|b| (b.center[0], 0.5 * b.center[0].hypot(b.center[1]))).collect();
    let disjoint = disks.windows(2).all(|p| p[1].0 + p[1].1 < p[0].0 - p[0].1);
    let inside_r0 = disks.iter().all(|(c, r)| c + r < spec.r0);
    FinitenessReport {
        psi: psi.name().to_string(),
        psi_series: SeriesReport::new(psi_terms),
        vw_series: SeriesReport::new(vw_terms),
        disjoint,
        inside_r0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orlicz::DampedB;

    #[test]
    fn first_height_on_lebesgue() {
        // 3 · 10⁴ / ln 10, evaluated independently to 15 digits
        let expected = 13028.834457097553;
        assert!((height(3.0, 0.1, 2.0) - expected).abs() < 1e-9);
        assert!((height(3.0, 0.1, 2.0) - 13028.834).abs() < 1e-3);
    }

    #[test]
    fn beta_of_b_is_one_and_b_is_rejected() {
        assert!((beta(&BFunction, 3.0) - 1.0).abs() < 1e-15);
        assert!(matches!(check_weaker(&BFunction), Err(Error::Precondition(_))));
        assert!(check_weaker(&DampedB).is_ok());
    }

    #[test]
    fn beta_of_damped_b_matches_closed_form() {
        // Ψ/𝓑 = 1/√ln(e+s) is decreasing, so the sup sits at s
        for u in [1.0, 5.0, 40.0] {
            let s: f64 = f64::exp(u);
            let exact = 1.0 / (std::f64::consts::E + s).ln().sqrt();
            assert!((beta(&DampedB, u) - exact).abs() < 1e-12);
        }
    }

    #[test]
    fn s0_conditions_hold() {
        for alpha in [1.0, 2.0] {
            let s0 = threshold_s0(&DampedB, alpha).unwrap();
            assert!(s0 >= (1.0 / alpha).exp());
            let u = s0.powf(alpha);
            assert!(DampedB.eval(u * (1.0 + 1e-9)) >= u);
            assert!(DampedB.eval(u * 0.99) < u * 0.99);
        }
    }

    #[test]
    fn circle_family_rejected() {
        let e = build_counterexample(&DampedB, MeasureFamily::Circle { radius: 1.0 }, 3, Default::default());
        assert!(matches!(e, Err(Error::Precondition(_))));
    }

    #[test]
    fn geometry_and_patches() {
        for family in [MeasureFamily::Lebesgue, MeasureFamily::Line] {
            let ce =
                build_counterexample(&DampedB, family, 10, ConstructionOptions::with_threshold_factor(family, 2.0))
                    .unwrap();
            let spec = &ce.spec;
            assert_eq!(spec.bumps.len(), 10);
            for (i, b) in spec.bumps.iter().enumerate() {
                assert!(b.rho < 1.0 / spec.s0);
                assert!(b.center[0] < 2.0 * b.rho);
                if i > 0 {
                    assert!(b.center[0] < spec.bumps[i - 1].center[0] / 3.0);
                    assert!(b.beta <= 0.85 * spec.bumps[i - 1].beta * (1.0 + 1e-12));
                }
                assert_eq!(b.height, height(spec.a19, b.radius, spec.alpha));
                let p = &ce.patches[i];
                assert!(p.offsets.len() >= 100);
                let m: f64 = p.weights.iter().sum();
                assert!((m - b.mass).abs() < 1e-12 * b.mass);
                let r2 = b.radius * b.radius;
                assert!(p.offsets.iter().all(|o| o[0].hypot(o[1]) <= r2));
            }
            let rep = finiteness_check(&ce, &DampedB, &|_| 1.0);
            assert!(rep.disjoint && rep.inside_r0);
        }
    }

    #[test]
    fn rayleigh_signs() {
        let fam = MeasureFamily::Lebesgue;
        let strong =
            build_counterexample(&DampedB, fam, 10, ConstructionOptions::with_threshold_factor(fam, 2.0)).unwrap();
        let weak =
            build_counterexample(&DampedB, fam, 10, ConstructionOptions::with_threshold_factor(fam, 0.5)).unwrap();
        let edge =
            build_counterexample(&DampedB, fam, 10, ConstructionOptions::with_threshold_factor(fam, 1.0)).unwrap();
        for k in 1..=10 {
            let s = rayleigh_check(&strong, k).unwrap();
            assert!(s.negative && s.lower_bound_holds && s.status == RayleighStatus::Negative, "{s:?}");
            let w = rayleigh_check(&weak, k).unwrap();
            assert_eq!(w.status, RayleighStatus::Indeterminate);
            assert_eq!(rayleigh_check(&edge, k).unwrap().status, RayleighStatus::Borderline);
        }
    }

    #[test]
    fn energies_decrease_in_a19() {
        let fam = MeasureFamily::Line;
        let energies: Vec<f64> = [0.5, 1.0, 2.0, 4.0]
            .iter()
            .map(|&f| {
                let ce =
                    build_counterexample(&DampedB, fam, 4, ConstructionOptions::with_threshold_factor(fam, f)).unwrap();
                rayleigh_check(&ce, 3).unwrap().energy
            })
            .collect();
        assert!(energies.windows(2).all(|w| w[1] < w[0]), "{energies:?}");
    }

    #[test]
    fn gradient_quadrature_agrees_with_closed_form() {
        for r in [0.3f64, 0.1, 1e-3, 1e-8] {
            let exact = 2.0 * PI / (1.0 / r).ln();
            let q = gradient_energy_quadrature(r, 20000);
            assert!(((q - exact) / exact).abs() < 1e-3, "r {r}: {q} vs {exact}");
        }
    }

    #[test]
    fn series_tails() {
        let fam = MeasureFamily::Lebesgue;
        let ce = build_counterexample(&DampedB, fam, 10, ConstructionOptions::with_threshold_factor(fam, 2.0)).unwrap();
        let weak = finiteness_check(&ce, &DampedB, &|_| 1.0);
        assert!(weak.psi_series.max_tail_ratio_after(5).unwrap() < 0.9);
        assert!(weak.vw_series.max_tail_ratio_after(5).unwrap() < 0.9);
        // with 𝓑 itself every term is comparable: partial sums keep growing
        let strong = finiteness_check(&ce, &BFunction, &|_| 1.0);
        let t = &strong.psi_series.terms;
        assert!(t.iter().all(|x| *x > 0.5 * t[0]));
        assert!(strong.psi_series.max_tail_ratio_after(5).unwrap() > 0.6);
    }
}
