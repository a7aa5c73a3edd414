//! Compressed-row symmetric matrices (both triangles stored).

use nalgebra::DMatrix;
use std::io::Write;

#[derive(Debug, Clone, PartialEq)]
pub struct CsrMatrix {
    n: usize,
    indptr: Vec<usize>,
    indices: Vec<usize>,
    values: Vec<f64>,
}

impl CsrMatrix {
    /// Sums duplicate `(row, col, value)` triplets.
    pub fn from_triplets(n: usize, mut trips: Vec<(usize, usize, f64)>) -> Self {
        trips.sort_by_key(|t| (t.0, t.1));
        let mut indptr = vec![0; n + 1];
        let mut indices = Vec::with_capacity(trips.len());
        let mut values: Vec<f64> = Vec::with_capacity(trips.len());
        let mut last: Option<(usize, usize)> = None;
        for (i, j, v) in trips {
            assert!(i < n && j < n, "triplet ({i}, {j}) outside {n}x{n}");
            if last == Some((i, j)) {
                *values.last_mut().unwrap() += v;
            } else {
                indices.push(j);
                values.push(v);
                indptr[i + 1] += 1;
                last = Some((i, j));
            }
        }
        for i in 0..n {
            indptr[i + 1] += indptr[i];
        }
        Self { n, indptr, indices, values }
    }

    pub fn zeros(n: usize) -> Self {
        Self { n, indptr: vec![0; n + 1], indices: Vec::new(), values: Vec::new() }
    }

    pub fn from_diagonal(d: &[f64]) -> Self {
        Self::from_triplets(d.len(), d.iter().enumerate().map(|(i, v)| (i, i, *v)).collect())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    /// `(col, value)` pairs of row `i`, columns ascending.
    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        let r = self.indptr[i]..self.indptr[i + 1];
        self.indices[r.clone()].iter().copied().zip(self.values[r].iter().copied())
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        let r = self.indptr[i]..self.indptr[i + 1];
        match self.indices[r.clone()].binary_search(&j) {
            Ok(k) => self.values[r.start + k],
            Err(_) => 0.0,
        }
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        (0..self.n).flat_map(move |i| self.row(i).map(move |(j, v)| (i, j, v)))
    }

    /// `a·self + b·other`.
    pub fn combine(&self, a: f64, other: &CsrMatrix, b: f64) -> CsrMatrix {
        assert_eq!(self.n, other.n);
        let trips =
            self.triplets().map(|(i, j, v)| (i, j, a * v)).chain(other.triplets().map(|(i, j, v)| (i, j, b * v)));
        Self::from_triplets(self.n, trips.collect())
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n).map(|i| self.row(i).map(|(j, v)| v * x[j]).sum()).collect()
    }

    /// `xᵀ A x`.
    pub fn quad_form(&self, x: &[f64]) -> f64 {
        self.mul_vec(x).iter().zip(x).map(|(a, b)| a * b).sum()
    }

    /// Largest absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        (0..self.n).map(|i| self.row(i).map(|(_, v)| v.abs()).sum::<f64>()).fold(0.0, f64::max)
    }

    /// Largest `|aᵢⱼ − aⱼᵢ|`.
    pub fn asymmetry(&self) -> f64 {
        self.triplets().map(|(i, j, v)| (v - self.get(j, i)).abs()).fold(0.0, f64::max)
    }

    /// Submatrix on `keep` (in that order).
    pub fn principal(&self, keep: &[usize]) -> CsrMatrix {
        let mut map = vec![usize::MAX; self.n];
        for (k, &i) in keep.iter().enumerate() {
            map[i] = k;
        }
        let trips = self
            .triplets()
            .filter(|(i, j, _)| map[*i] != usize::MAX && map[*j] != usize::MAX)
            .map(|(i, j, v)| (map[i], map[j], v))
            .collect();
        Self::from_triplets(keep.len(), trips)
    }

    /// `P A Pᵀ` where row `i` of the result is row `perm[i]` of `A`.
    pub fn permuted(&self, perm: &[usize]) -> CsrMatrix {
        let mut inv = vec![0; self.n];
        for (k, &i) in perm.iter().enumerate() {
            inv[i] = k;
        }
        Self::from_triplets(self.n, self.triplets().map(|(i, j, v)| (inv[i], inv[j], v)).collect())
    }

    pub fn to_dense(&self) -> DMatrix<f64> {
        let mut m = DMatrix::zeros(self.n, self.n);
        for (i, j, v) in self.triplets() {
            m[(i, j)] += v;
        }
        m
    }

    /// Coordinate text: a `%% n nnz` header then 1-based `i j value` lines.
    pub fn write_coordinate(&self, mut out: impl Write) -> std::io::Result<()> {
        writeln!(out, "%% {} {}", self.n, self.nnz())?;
        for (i, j, v) in self.triplets() {
            writeln!(out, "{} {} {:e}", i + 1, j + 1, v)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triplets_merge_and_query() {
        let a = CsrMatrix::from_triplets(3, vec![(0, 0, 1.0), (0, 0, 2.0), (2, 1, 4.0), (1, 2, 4.0)]);
        assert_eq!(a.get(0, 0), 3.0);
        assert_eq!(a.get(1, 2), 4.0);
        assert_eq!(a.get(1, 1), 0.0);
        assert_eq!(a.nnz(), 3);
        assert_eq!(a.asymmetry(), 0.0);
        assert_eq!(a.quad_form(&[1.0, 1.0, 1.0]), 11.0);
        let b = a.combine(1.0, &CsrMatrix::from_diagonal(&[1.0, 1.0, 1.0]), -1.0);
        assert_eq!(b.get(0, 0), 2.0);
        assert_eq!(b.get(1, 1), -1.0);
        let p = a.permuted(&[2, 0, 1]);
        assert_eq!(p.get(1, 1), 3.0);
        assert_eq!(p.get(0, 2), 4.0);
        let s = a.principal(&[0, 2]);
        assert_eq!(s.dim(), 2);
        assert_eq!(s.get(0, 0), 3.0);
        let mut buf = Vec::new();
        a.write_coordinate(&mut buf).unwrap();
        assert!(String::from_utf8(buf).unwrap().starts_with("%% 3 3\n1 1 3e0"));
    }
}
