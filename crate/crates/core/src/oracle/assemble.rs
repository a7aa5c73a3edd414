//! Stiffness `K`, potential `P` and mass `M` matrices of the quadratic forms.

use super::mesh::{Mesh, MeshSpec};
use super::sparse::CsrMatrix;
use crate::decomposition::RadialMeasure;
use crate::error::{domain, Error, Result};
use crate::measure::{AtomicMeasure, Point};
use crate::potential::PotentialField;
use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum FormKind {
    /// `∫|∇w|² − ∫ V|w|² dμ` on a disk with zero boundary values.
    Planar,
    /// `2π∫(|v′|² + m²|v|²) dt − Σ ν|v(ln r)|²` on a `t`-window, angular mode `m`.
    Radial { mode: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FormMeta {
    pub kind: FormKind,
    /// Effective element step.
    pub h: f64,
    /// Disk radius (planar) or right window end (radial).
    pub extent: f64,
    pub dim: usize,
    pub refinements: u32,
}

/// The form `uᵀ(K − γP)u`, plus the `L²` Gram matrix `M` of the basis.
#[derive(Debug, Clone)]
pub struct FormMatrices {
    pub k: CsrMatrix,
    pub p: CsrMatrix,
    pub m: CsrMatrix,
    pub meta: FormMeta,
    /// Position of each unknown (`[t, 0]` in the radial case).
    pub dof_points: Vec<Point>,
}

impl FormMatrices {
    /// `uᵀKu − uᵀPu`.
    pub fn energy(&self, u: &[f64]) -> f64 {
        self.k.quad_form(u) - self.p.quad_form(u)
    }
}

fn element(p: [Point; 3]) -> (f64, [[f64; 2]; 3]) {
    let det = (p[1][0] - p[0][0]) * (p[2][1] - p[0][1]) - (p[2][0] - p[0][0]) * (p[1][1] - p[0][1]);
    let mut g = [[0.0; 2]; 3];
    for i in 0..3 {
        let (b, c) = (p[(i + 1) % 3], p[(i + 2) % 3]);
        g[i] = [(b[1] - c[1]) / det, (c[0] - b[0]) / det];
    }
    (0.5 * det.abs(), g)
}

/// Assembles on `mesh`; every atom must lie in the meshed disk.
pub fn assemble_2d_on(v: &PotentialField, measure: &AtomicMeasure, mesh: &Mesh) -> Result<FormMatrices> {
    if v.len() != measure.len() {
        return Err(domain(format!("{} potential values for {} atoms", v.len(), measure.len())));
    }
    let nodes = mesh.nodes();
    let mut dof = vec![usize::MAX; nodes.len()];
    let mut dof_points = Vec::new();
    for (i, p) in nodes.iter().enumerate() {
        if !mesh.is_boundary(i) {
            dof[i] = dof_points.len();
            dof_points.push(*p);
        }
    }
    let n = dof_points.len();
    let local: Vec<Vec<(usize, usize, f64, f64)>> = mesh
        .triangles()
        .par_iter()
        .map(|t| {
            let (area, g) = element([nodes[t[0]], nodes[t[1]], nodes[t[2]]]);
            let mut out = Vec::with_capacity(9);
            for a in 0..3 {
                for b in 0..3 {
                    let (da, db) = (dof[t[a]], dof[t[b]]);
                    if da != usize::MAX && db != usize::MAX {
                        let kab = area * (g[a][0] * g[b][0] + g[a][1] * g[b][1]);
                        let mab = area / 12.0 * if a == b { 2.0 } else { 1.0 };
                        out.push((da, db, kab, mab));
                    }
                }
            }
            out
        })
        .collect();
    let flat = local.into_iter().flatten();
    let (kt, mt): (Vec<_>, Vec<_>) = flat.map(|(a, b, k, m)| ((a, b, k), (a, b, m))).unzip();

    let located: Vec<Option<(usize, [f64; 3])>> = measure.points().par_iter().map(|p| mesh.locate(*p)).collect();
    let outside: Vec<Point> =
        located.iter().zip(measure.points()).filter(|(l, _)| l.is_none()).map(|(_, p)| *p).collect();
    if !outside.is_empty() {
        return Err(Error::AtomsOutside(outside));
    }
    let tris = mesh.triangles();
    let mut pt = Vec::new();
    for ((loc, w), vi) in located.iter().zip(measure.weights()).zip(v.values()) {
        let q = vi * w;
        if q == 0.0 {
            continue;
        }
        let (t, l) = loc.expect("checked above");
        let tri = tris[t];
        for a in 0..3 {
            for b in 0..3 {
                let (da, db) = (dof[tri[a]], dof[tri[b]]);
                if da != usize::MAX && db != usize::MAX {
                    pt.push((da, db, q * l[a] * l[b]));
                }
            }
        }
    }
    let spec = mesh.spec();
    Ok(FormMatrices {
        k: CsrMatrix::from_triplets(n, kt),
        p: CsrMatrix::from_triplets(n, pt),
        m: CsrMatrix::from_triplets(n, mt),
        meta: FormMeta {
            kind: FormKind::Planar,
            h: spec.effective_h(),
            extent: mesh.outer_radius(),
            dim: n,
            refinements: spec.refinements,
        },
        dof_points,
    })
}

/// Builds the mesh from `spec` and assembles on it.
pub fn assemble_2d(v: &PotentialField, measure: &AtomicMeasure, spec: MeshSpec) -> Result<FormMatrices> {
    assemble_2d_on(v, measure, &Mesh::new(spec)?)
}

/// Condition at the left end of the radial window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LeftEnd {
    Dirichlet,
    /// Natural condition; models functions constant near the origin.
    Free,
}

/// P1 elements of step `≈ h` on `[t₀, t₁]`, zero at `t₁` and per `left` at `t₀`.
/// Each ν-atom at radius `r` sits at `t = ln r`, which must lie strictly inside.
pub fn assemble_radial_1d(
    nu: &RadialMeasure,
    window: (f64, f64),
    h: f64,
    mode: u32,
    left: LeftEnd,
) -> Result<FormMatrices> {
    let (t0, t1) = window;
    if !(t1 > t0 && h > 0.0 && h.is_finite()) {
        return Err(domain(format!("bad radial window {window:?} or step {h}")));
    }
    let cells = ((t1 - t0) / h).ceil().max(2.0) as usize;
    let hh = (t1 - t0) / cells as f64;
    let first = if left == LeftEnd::Free { 0 } else { 1 };
    let dof = |node: usize| -> Option<usize> { (node >= first && node < cells).then(|| node - first) };
    let n = cells - first;
    let m2 = (mode as f64).powi(2);
    let mut kt = Vec::new();
    let mut mt = Vec::new();
    for c in 0..cells {
        for (a, b) in [(c, c), (c, c + 1), (c + 1, c), (c + 1, c + 1)] {
            if let (Some(da), Some(db)) = (dof(a), dof(b)) {
                let same = a == b;
                let stiff = if same { 1.0 / hh } else { -1.0 / hh };
                let mass = hh / 6.0 * if same { 2.0 } else { 1.0 };
                kt.push((da, db, 2.0 * PI * (stiff + m2 * mass)));
                mt.push((da, db, 2.0 * PI * mass));
            }
        }
    }
    let mut outside = Vec::new();
    let mut pt = Vec::new();
    for &(r, mass) in nu.atoms() {
        let t = r.ln();
        if !(t > t0 && t < t1) {
            outside.push(format!("r = {r:e} (t = {t:.6})"));
            continue;
        }
        let c = (((t - t0) / hh).floor() as usize).min(cells - 1);
        let lam = (t - (t0 + c as f64 * hh)) / hh;
        let w = [(c, 1.0 - lam), (c + 1, lam)];
        for &(a, wa) in &w {
            for &(b, wb) in &w {
                if let (Some(da), Some(db)) = (dof(a), dof(b)) {
                    pt.push((da, db, mass * wa * wb));
                }
            }
        }
    }
    if !outside.is_empty() {
        return Err(domain(format!("radial atoms outside the window [{t0}, {t1}]: {}", outside.join(", "))));
    }
    Ok(FormMatrices {
        k: CsrMatrix::from_triplets(n, kt),
        p: CsrMatrix::from_triplets(n, pt),
        m: CsrMatrix::from_triplets(n, mt),
        meta: FormMeta { kind: FormKind::Radial { mode }, h: hh, extent: t1, dim: n, refinements: 0 },
        dof_points: (first..cells).map(|i| [t0 + i as f64 * hh, 0.0]).collect(),
    })
}
