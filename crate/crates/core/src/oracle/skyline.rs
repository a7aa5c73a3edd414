//! Profile (skyline) `LDLᵀ` factorization without pivoting.

use super::sparse::CsrMatrix;
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct SkylineLdl {
    first: Vec<usize>,
    /// Strictly lower row `i` of the unit factor, columns `first[i]..i`.
    lower: Vec<Vec<f64>>,
    d: Vec<f64>,
}

/// Counts of negative, zero and positive pivots.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Inertia {
    pub negative: usize,
    pub zero: usize,
    pub positive: usize,
}

impl SkylineLdl {
    /// Factors `a` in its given ordering; a pivot with `|d| < breakdown`
    /// stops the factorization.
    pub fn factor(a: &CsrMatrix, breakdown: f64) -> Result<Self> {
        let n = a.dim();
        let first: Vec<usize> = (0..n).map(|i| a.row(i).map(|(j, _)| j).min().unwrap_or(i).min(i)).collect();
        let mut lower: Vec<Vec<f64>> = Vec::with_capacity(n);
        let mut d = Vec::with_capacity(n);
        let mut u = Vec::new();
        for i in 0..n {
            let fi = first[i];
            let mut row = vec![0.0; i - fi];
            let mut diag = 0.0;
            for (j, v) in a.row(i) {
                if j < i {
                    row[j - fi] = v;
                } else if j == i {
                    diag = v;
                }
            }
            u.clear();
            u.resize(i - fi, 0.0);
            for j in fi..i {
                let fj = first[j];
                let k0 = fi.max(fj);
                let lj = &lower[j];
                let mut s = row[j - fi];
                for k in k0..j {
                    s -= u[k - fi] * lj[k - fj];
                }
                u[j - fi] = s;
                row[j - fi] = s / d[j];
            }
            let di = diag - u.iter().zip(&row).map(|(a, b)| a * b).sum::<f64>();
            if !(di.abs() >= breakdown) {
                return Err(Error::Breakdown { index: i, pivot: di, dim: n });
            }
            lower.push(row);
            d.push(di);
        }
        Ok(Self { first, lower, d })
    }

    pub fn pivots(&self) -> &[f64] {
        &self.d
    }

    pub fn inertia(&self) -> Inertia {
        let negative = self.d.iter().filter(|&&x| x < 0.0).count();
        let zero = self.d.iter().filter(|&&x| x == 0.0).count();
        Inertia { negative, zero, positive: self.d.len() - negative - zero }
    }

    /// Solves `L D Lᵀ x = b`.
    pub fn solve(&self, b: &[f64]) -> Vec<f64> {
        let n = self.d.len();
        let mut x = b.to_vec();
        for i in 0..n {
            let fi = self.first[i];
            let s: f64 = self.lower[i].iter().zip(&x[fi..i]).map(|(l, y)| l * y).sum();
            x[i] -= s;
        }
        for (xi, di) in x.iter_mut().zip(&self.d) {
            *xi /= di;
        }
        for i in (0..n).rev() {
            let fi = self.first[i];
            let xi = x[i];
            for (k, l) in self.lower[i].iter().enumerate() {
                x[fi + k] -= l * xi;
            }
        }
        x
    }
}
