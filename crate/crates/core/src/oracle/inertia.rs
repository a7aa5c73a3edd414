//! Negative-eigenvalue counts of `K − γP` by Sylvester's law of inertia.

use super::assemble::{assemble_2d, assemble_radial_1d, FormMatrices, LeftEnd};
use super::mesh::MeshSpec;
use super::ordering::reverse_cuthill_mckee;
use super::skyline::SkylineLdl;
use super::sparse::CsrMatrix;
use crate::decomposition::RadialMeasure;
use crate::error::{domain, Error, Result};
use crate::measure::AtomicMeasure;
use crate::potential::PotentialField;
use nalgebra::{DMatrix, SymmetricEigen};
use rayon::prelude::*;
use serde::Serialize;

/// Relative pivot tolerance against `‖K‖∞`.
pub const PIVOT_TOL: f64 = 1e-12;
/// Largest dimension handed to the dense fallback.
pub const DENSE_LIMIT: usize = 5000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum InertiaMethod {
    Ldl,
    Dense,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RefinementStep {
    pub h: f64,
    pub extent: f64,
    pub dim: usize,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InertiaResult {
    pub negative_count: usize,
    pub h: f64,
    pub extent: f64,
    pub method: InertiaMethod,
    /// Coarse to fine.
    pub history: Vec<RefinementStep>,
    /// The last two refinement levels agree.
    pub converged: bool,
    /// Counts never decrease along the history.
    pub monotone: bool,
}

/// Eigenvalues of a symmetric matrix below `−tol`.
pub fn dense_negative_count(a: &CsrMatrix, tol: f64) -> usize {
    if a.dim() == 0 {
        return 0;
    }
    a.to_dense().symmetric_eigenvalues().iter().filter(|&&l| l < -tol).count()
}

fn count_matrix(a: &CsrMatrix, scale: f64) -> Result<(usize, InertiaMethod)> {
    let tol = PIVOT_TOL * scale.max(f64::MIN_POSITIVE);
    let perm = reverse_cuthill_mckee(a);
    match SkylineLdl::factor(&a.permuted(&perm), tol) {
        Ok(f) => Ok((f.inertia().negative, InertiaMethod::Ldl)),
        Err(Error::Breakdown { .. }) if a.dim() < DENSE_LIMIT => {
            Ok((dense_negative_count(a, tol), InertiaMethod::Dense))
        }
        Err(e) => Err(e),
    }
}

/// Number of negative eigenvalues of `K − γP`.
pub fn negative_inertia(form: &FormMatrices, gamma: f64) -> Result<InertiaResult> {
    if !(gamma >= 0.0 && gamma.is_finite()) {
        return Err(domain(format!("coupling must be finite and nonnegative, got {gamma}")));
    }
    let a = form.k.combine(1.0, &form.p, -gamma);
    let (count, method) = count_matrix(&a, form.k.norm_inf())?;
    let step = RefinementStep { h: form.meta.h, extent: form.meta.extent, dim: form.meta.dim, count };
    Ok(InertiaResult {
        negative_count: count,
        h: form.meta.h,
        extent: form.meta.extent,
        method,
        history: vec![step],
        converged: true,
        monotone: true,
    })
}

/// Same count through the Birman–Schwinger operator: eigenvalues above `1/γ`
/// of `P_S^{1/2} (K⁻¹)_{SS} P_S^{1/2}`, `S` being the unknowns touched by `P`.
pub fn birman_schwinger_count(form: &FormMatrices, gamma: f64) -> Result<usize> {
    if gamma <= 0.0 {
        return Ok(0);
    }
    let n = form.k.dim();
    let support: Vec<usize> = (0..n).filter(|&i| form.p.get(i, i) > 0.0).collect();
    if support.is_empty() {
        return Ok(0);
    }
    let perm = reverse_cuthill_mckee(&form.k);
    let mut inv = vec![0; n];
    for (k, &i) in perm.iter().enumerate() {
        inv[i] = k;
    }
    let f = SkylineLdl::factor(&form.k.permuted(&perm), PIVOT_TOL * form.k.norm_inf())?;
    let s = support.len();
    let cols: Vec<Vec<f64>> = support
        .par_iter()
        .map(|&j| {
            let mut e = vec![0.0; n];
            e[inv[j]] = 1.0;
            let x = f.solve(&e);
            support.iter().map(|&i| x[inv[i]]).collect()
        })
        .collect();
    let g = DMatrix::from_fn(s, s, |i, j| 0.5 * (cols[j][i] + cols[i][j]));
    let p = form.p.principal(&support).to_dense();
    let eig = SymmetricEigen::new(p);
    let sqrt_d = eig.eigenvalues.map(|l| l.max(0.0).sqrt());
    let root = &eig.eigenvectors * DMatrix::from_diagonal(&sqrt_d) * eig.eigenvectors.transpose();
    let b = &root * g * &root;
    let b = 0.5 * (&b + b.transpose());
    let thresh = 1.0 / gamma;
    Ok(b.symmetric_eigenvalues().iter().filter(|&&l| l > thresh * (1.0 + 1e-10)).count())
}

/// Lowest eigenvalue of `(K − γP) u = λ M u` if it is negative, by bisection
/// on the inertia of `K − γP − σM`.
pub fn lowest_ritz_value(form: &FormMatrices, gamma: f64, rel_tol: f64) -> Result<Option<f64>> {
    let a = form.k.combine(1.0, &form.p, -gamma);
    let scale = form.k.norm_inf();
    let count = |sigma: f64| -> Result<usize> { Ok(count_matrix(&a.combine(1.0, &form.m, -sigma), scale)?.0) };
    if count(0.0)? == 0 {
        return Ok(None);
    }
    let mut lo = -1.0;
    while count(lo)? > 0 {
        lo *= 2.0;
        if lo < -1e300 {
            return Err(Error::NoConvergence("no lower bracket for the lowest eigenvalue".into()));
        }
    }
    let mut hi = 0.0;
    // a zero pivot at the bisection point is a hit on an eigenvalue; nudge
    for _ in 0..200 {
        if hi - lo <= rel_tol * lo.abs() {
            break;
        }
        let mid = 0.5 * (lo + hi);
        match count(mid) {
            Ok(0) => lo = mid,
            Ok(_) => hi = mid,
            Err(Error::Breakdown { .. }) => return Ok(Some(mid)),
            Err(e) => return Err(e),
        }
    }
    Ok(Some(0.5 * (lo + hi)))
}

fn merge(history: Vec<RefinementStep>, method: InertiaMethod) -> InertiaResult {
    let last = *history.last().expect("at least one step");
    let converged = history.len() < 2 || history[history.len() - 2].count == last.count;
    let monotone = history.windows(2).all(|w| w[1].count >= w[0].count);
    InertiaResult { negative_count: last.count, h: last.h, extent: last.extent, method, history, converged, monotone }
}

/// Counts on the mesh `spec` and on its one-step refinement.
pub fn count_full(v: &PotentialField, measure: &AtomicMeasure, gamma: f64, spec: MeshSpec) -> Result<InertiaResult> {
    let (coarse, fine) = rayon::join(
        || assemble_2d(v, measure, spec).and_then(|f| negative_inertia(&f, gamma)),
        || assemble_2d(v, measure, spec.refined(1)).and_then(|f| negative_inertia(&f, gamma)),
    );
    let (coarse, fine) = (coarse?, fine?);
    let method = if coarse.method == InertiaMethod::Dense || fine.method == InertiaMethod::Dense {
        InertiaMethod::Dense
    } else {
        InertiaMethod::Ldl
    };
    Ok(merge(vec![coarse.history[0], fine.history[0]], method))
}

/// Counts of the radial and nonradial parts of the form with potential `2γν`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SplitCounts {
    /// Mode 0 with a free left end.
    pub radial: usize,
    /// `2 Σ_{m ≥ 1}` of the mode-`m` counts (cos and sin partners).
    pub nonradial: usize,
    /// Per-mode counts from `m = 1` up to the first zero.
    pub modes: Vec<usize>,
}

/// Radial and nonradial counts for a radially symmetric `Vμ` with
/// push-forward `ν`, on the `t`-window with step `h`.
pub fn split_counts(nu: &RadialMeasure, window: (f64, f64), h: f64, gamma: f64, max_mode: u32) -> Result<SplitCounts> {
    let doubled = nu.scaled(2.0);
    let count = |mode: u32, left: LeftEnd| -> Result<usize> {
        let f = assemble_radial_1d(&doubled, window, h, mode, left)?;
        Ok(negative_inertia(&f, gamma)?.negative_count)
    };
    let radial = count(0, LeftEnd::Free)?;
    let mut modes = Vec::new();
    for m in 1..=max_mode {
        let c = count(m, LeftEnd::Dirichlet)?;
        modes.push(c);
        if c == 0 {
            break;
        }
    }
    Ok(SplitCounts { radial, nonradial: 2 * modes.iter().sum::<usize>(), modes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::generate_circle;
    use std::f64::consts::PI;

    #[test]
    fn diagonal_and_zero_coupling() {
        let a = CsrMatrix::from_diagonal(&[1.0, -2.0, 3.0]);
        assert_eq!(count_matrix(&a, 3.0).unwrap().0, 1);
        let m = generate_circle([0.0, 0.0], 1.0, 40).unwrap();
        let v = PotentialField::constant(&m, 1.0).unwrap();
        let spec = MeshSpec::for_atoms(m.points(), 5.0, 0.4);
        let f = assemble_2d(&v, &m, spec).unwrap();
        assert_eq!(negative_inertia(&f, 0.0).unwrap().negative_count, 0);
    }

    #[test]
    fn delta_well_ground_state() {
        let nu = RadialMeasure::from_atoms(vec![(1.0, 2.0 * PI)]);
        let f = assemble_radial_1d(&nu, (-40.0, 40.0), 0.05, 0, LeftEnd::Dirichlet).unwrap();
        assert_eq!(negative_inertia(&f, 2.0).unwrap().negative_count, 1);
        let lam = lowest_ritz_value(&f, 2.0, 1e-10).unwrap().unwrap();
        assert!((lam + 1.0).abs() < 0.02, "{lam}");
    }

    #[test]
    fn ldl_matches_dense_and_birman_schwinger() {
        let m = generate_circle([0.0, 0.0], 1.0, 60).unwrap();
        let v = PotentialField::constant(&m, 1.0).unwrap();
        let spec = MeshSpec { radius: 4.0, h: 0.5, r_min: 0.3, refinements: 0 };
        let f = assemble_2d(&v, &m, spec).unwrap();
        assert!(f.meta.dim <= 500, "{}", f.meta.dim);
        for gamma in [0.1, 1.0, 3.0, 10.0, 30.0] {
            let a = f.k.combine(1.0, &f.p, -gamma);
            let ldl = negative_inertia(&f, gamma).unwrap().negative_count;
            assert_eq!(ldl, dense_negative_count(&a, PIVOT_TOL * f.k.norm_inf()), "gamma {gamma}");
            assert_eq!(ldl, birman_schwinger_count(&f, gamma).unwrap(), "gamma {gamma}");
        }
    }

    #[test]
    fn refinement_history() {
        let m = generate_circle([0.0, 0.0], 1.0, 120).unwrap();
        let v = PotentialField::constant(&m, 1.0).unwrap();
        let spec = MeshSpec::for_atoms(m.points(), 6.0, 0.3);
        let r = count_full(&v, &m, 1.0, spec).unwrap();
        assert_eq!(r.history.len(), 2);
        assert!(r.monotone);
        assert!(r.negative_count >= 1);
        let z = count_full(&PotentialField::zero(&m), &m, 1.0, spec).unwrap();
        assert_eq!(z.negative_count, 0);
    }
}
