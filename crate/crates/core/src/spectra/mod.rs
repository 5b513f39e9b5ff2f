//! Numeric spectra: a deterministic cyclic Jacobi eigensolver, the index with
//! a sign-normalized principal eigenvector, Cauchy interlacing checks and the
//! index bounds for signed complete graphs.

mod jacobi;

use serde::Serialize;
use thiserror::Error;

use crate::graph::SignedCompleteGraph;

pub use jacobi::{jacobi_eigen, Eigen, SymMatrix, MAX_SWEEPS};

/// Off-diagonal stopping tolerance for Jacobi.
pub const DEFAULT_TOL: f64 = 1e-12;
/// Two indices closer than this are treated as a numeric tie.
pub const COMPARE_MARGIN: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectraError {
    #[error("matrix data of length {len} is not {n}×{n}")]
    NotSquare { len: usize, n: usize },
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("Jacobi did not converge after {sweeps} sweeps (off-diagonal {off_diagonal:e})")]
    NoConvergence { sweeps: usize, off_diagonal: f64 },
    #[error("subset index {index} out of range for order {n}")]
    SubsetOutOfRange { index: usize, n: usize },
    #[error("empty subset")]
    EmptySubset,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectralResult {
    /// Descending.
    pub eigenvalues: Vec<f64>,
    /// Unit eigenvector for `eigenvalues[0]`, sign-normalized.
    pub principal_vector: Vec<f64>,
    /// `‖A·x − λ₁·x‖∞`
    pub residual: f64,
}

impl SpectralResult {
    pub fn index(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(f64::NAN)
    }
}

/// Flips `x` so its entry of largest magnitude is positive; on ties the
/// lowest index decides.
pub fn normalize_sign(x: &mut [f64]) {
    let mut best = 0;
    for i in 1..x.len() {
        if x[i].abs() > x[best].abs() {
            best = i;
        }
    }
    if x.get(best).is_some_and(|&v| v < 0.0) {
        x.iter_mut().for_each(|v| *v = -*v);
    }
}

pub fn eig_symmetric(m: &SymMatrix, tol: f64) -> Result<SpectralResult, SpectraError> {
    let e = jacobi_eigen(m, tol)?;
    let mut x = e.vectors.first().cloned().unwrap_or_default();
    normalize_sign(&mut x);
    let residual = e.values.first().map_or(0.0, |&l| m.residual(l, &x));
    Ok(SpectralResult {
        eigenvalues: e.values,
        principal_vector: x,
        residual,
    })
}

pub fn adjacency_sym(g: &SignedCompleteGraph) -> SymMatrix {
    let n = g.order();
    let mut data = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            data[i * n + j] = f64::from(g.sign(i, j));
        }
    }
    SymMatrix::new(n, data).expect("adjacency matrix is symmetric")
}

/// Full spectrum of `A(g)`.
pub fn spectrum(g: &SignedCompleteGraph, tol: f64) -> Result<SpectralResult, SpectraError> {
    eig_symmetric(&adjacency_sym(g), tol)
}

/// Index `λ₁` and its normalized principal eigenvector.
pub fn index(g: &SignedCompleteGraph, tol: f64) -> Result<(f64, Vec<f64>), SpectraError> {
    let r = spectrum(g, tol)?;
    Ok((r.index(), r.principal_vector))
}

/// Index computed on the graph with its filler vertices merged.
///
/// Vertices untouched by negative edges form an all-positive clique joined
/// positively to everything, so they are one block of a special partition.
/// The symmetrized quotient has the vertex block of size `f` joined to the
/// rest with weight `√f` and diagonal `f − 1`; its spectrum is that of `A(g)`
/// minus `f − 1` copies of −1, and because `tr A = 0` forces `λ₁ ≥ 0` the
/// largest eigenvalue is unchanged. The returned vector is lifted back to all
/// `n` vertices.
pub fn index_reduced(
    g: &SignedCompleteGraph,
    tol: f64,
) -> Result<(f64, Vec<f64>), SpectraError> {
    let n = g.order();
    let support = g.negative_edges().non_isolated_vertices();
    let filler = n - support.len();
    if filler < 2 {
        return index(g, tol);
    }
    let m = support.len() + 1;
    let w = (filler as f64).sqrt();
    let mut data = vec![0.0; m * m];
    for (i, &u) in support.iter().enumerate() {
        for (j, &v) in support.iter().enumerate() {
            data[i * m + j] = f64::from(g.sign(u, v));
        }
        data[i * m + m - 1] = w;
        data[(m - 1) * m + i] = w;
    }
    data[m * m - 1] = (filler - 1) as f64;
    let q = SymMatrix::new(m, data).expect("symmetric by construction");
    let e = jacobi_eigen(&q, tol)?;
    let y = &e.vectors[0];
    let mut x = vec![y[m - 1] / w; n];
    for (i, &u) in support.iter().enumerate() {
        x[u] = y[i];
    }
    normalize_sign(&mut x);
    Ok((e.values[0], x))
}

/// `‖A(g)·x − λ·x‖∞`, computed on the full signed adjacency.
pub fn signed_residual(g: &SignedCompleteGraph, lambda: f64, x: &[f64]) -> f64 {
    let total: f64 = x.iter().sum();
    (0..g.order())
        .map(|i| {
            // A = J − I − 2N, with N the negative adjacency
            let neg: f64 = g.negative_edges().neighbors(i).iter().map(|&j| x[j]).sum();
            (total - x[i] - 2.0 * neg - lambda * x[i]).abs()
        })
        .fold(0.0, f64::max)
}

/// `n − k + 1`, the index lower bound for `k ≥ 2` negative edges.
pub fn index_lower_bound(n: usize, k: usize) -> i64 {
    n as i64 - k as i64 + 1
}

/// `n − 1`, the index of the all-positive `K_n`.
pub fn index_upper_bound(n: usize) -> i64 {
    n as i64 - 1
}

/// Checks `n − k + 1 − tol ≤ λ₁ ≤ n − 1 + tol`. Returns `None` when the bound
/// is vacuous (`k < 2`).
pub fn bounds_hold(n: usize, k: usize, lambda1: f64, tol: f64) -> Option<bool> {
    if k < 2 {
        return None;
    }
    let lower = index_lower_bound(n, k) as f64;
    let upper = index_upper_bound(n) as f64;
    Some(lambda1 >= lower - tol && lambda1 <= upper + tol)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InterlaceViolation {
    /// 1-based position `i` in `λ_i(A) ≥ μ_i(B) ≥ λ_{n−m+i}(A)`.
    pub i: usize,
    pub lambda_i: f64,
    pub mu_i: f64,
    pub lambda_lower: f64,
}

/// Cauchy interlacing for the principal submatrix on `subset`.
pub fn interlace_check(
    m: &SymMatrix,
    subset: &[usize],
    tol: f64,
) -> Result<Result<(), InterlaceViolation>, SpectraError> {
    let n = m.size();
    if subset.is_empty() {
        return Err(SpectraError::EmptySubset);
    }
    if let Some(&bad) = subset.iter().find(|&&i| i >= n) {
        return Err(SpectraError::SubsetOutOfRange { index: bad, n });
    }
    let big = jacobi_eigen(m, DEFAULT_TOL)?.values;
    let small = jacobi_eigen(&m.principal_submatrix(subset), DEFAULT_TOL)?.values;
    let k = small.len();
    for i in 0..k {
        let upper = big[i];
        let lower = big[n - k + i];
        if small[i] > upper + tol || small[i] < lower - tol {
            return Ok(Err(InterlaceViolation {
                i: i + 1,
                lambda_i: upper,
                mu_i: small[i],
                lambda_lower: lower,
            }));
        }
    }
    Ok(Ok(()))
}
