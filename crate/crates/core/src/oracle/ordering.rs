//! Reverse Cuthill–McKee ordering.

use super::sparse::CsrMatrix;
use std::collections::VecDeque;

/// Permutation (new → old) that narrows the profile of a symmetric pattern.
/// Each connected component starts from a minimum-degree vertex.
pub fn reverse_cuthill_mckee(a: &CsrMatrix) -> Vec<usize> {
    let n = a.dim();
    let adj: Vec<Vec<usize>> = (0..n).map(|i| a.row(i).map(|(j, _)| j).filter(|&j| j != i).collect()).collect();
    let degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&i| (degree[i], i));
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for &start in &by_degree {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            let mut next: Vec<usize> = adj[v].iter().copied().filter(|&u| !seen[u]).collect();
            next.sort_by_key(|&u| (degree[u], u));
            for u in next {
                seen[u] = true;
                queue.push_back(u);
            }
        }
    }
    order.reverse();
    order
}

/// `Σᵢ (i − first nonzero column of row i)` of the permuted matrix.
pub fn profile(a: &CsrMatrix, perm: &[usize]) -> usize {
    let mut inv = vec![0; perm.len()];
    for (k, &i) in perm.iter().enumerate() {
        inv[i] = k;
    }
    (0..a.dim())
        .map(|i| {
            let r = inv[i];
            let first = a.row(i).map(|(j, _)| inv[j]).min().unwrap_or(r).min(r);
            r - first
        })
        .sum()
}
