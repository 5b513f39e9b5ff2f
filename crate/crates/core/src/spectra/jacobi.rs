use super::SpectraError;

/// Dense real symmetric matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    /// Fails unless `data` is `n×n` and exactly symmetric.
    pub fn new(n: usize, data: Vec<f64>) -> Result<Self, SpectraError> {
        if data.len() != n * n {
            return Err(SpectraError::NotSquare {
                len: data.len(),
                n,
            });
        }
        for i in 0..n {
            for j in 0..i {
                if data[i * n + j] != data[j * n + i] {
                    return Err(SpectraError::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(SymMatrix { n, data })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, SpectraError> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(SpectraError::NotSquare { len: bad.len(), n });
        }
        Self::new(n, rows.concat())
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn principal_submatrix(&self, indices: &[usize]) -> SymMatrix {
        let m = indices.len();
        let mut data = Vec::with_capacity(m * m);
        for &i in indices {
            for &j in indices {
                data.push(self.get(i, j));
            }
        }
        SymMatrix { n: m, data }
    }

    /// Simultaneous row/column permutation: entry `(perm[i], perm[j])` of the
    /// result is entry `(i, j)` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> SymMatrix {
        let n = self.n;
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                data[perm[i] * n + perm[j]] = self.get(i, j);
            }
        }
        SymMatrix { n, data }
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    fn off_diagonal_max(&self) -> f64 {
        let n = self.n;
        let mut m: f64 = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                m = m.max(self.data[i * n + j].abs());
            }
        }
        m
    }

    /// `max_i |(A·x)_i − λ·x_i|`
    pub fn residual(&self, lambda: f64, x: &[f64]) -> f64 {
        let n = self.n;
        (0..n)
            .map(|i| {
                let ax: f64 = (0..n).map(|j| self.data[i * n + j] * x[j]).sum();
                (ax - lambda * x[i]).abs()
            })
            .fold(0.0, f64::max)
    }
}

/// Full eigendecomposition: eigenvalues in descending order, `vectors[i]` the
/// unit eigenvector for `values[i]`.
#[derive(Debug, Clone)]
pub struct Eigen {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
    pub sweeps: usize,
}

pub const MAX_SWEEPS: usize = 100;

/// Cyclic Jacobi: rotations over `(p, q)` in row order each sweep, until the
/// largest off-diagonal entry is at most `tol`.
pub fn jacobi_eigen(m: &SymMatrix, tol: f64) -> Result<Eigen, SpectraError> {
    let n = m.n;
    let mut a = m.data.clone();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let mut sweeps = 0;
    let mut off = m.off_diagonal_max();
    while off > tol {
        if sweeps == MAX_SWEEPS {
            return Err(SpectraError::NoConvergence {
                sweeps,
                off_diagonal: off,
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
        off = {
            let mut o: f64 = 0.0;
            for i in 0..n {
                for j in (i + 1)..n {
                    o = o.max(a[i * n + j].abs());
                }
            }
            o
        };
    }
    let mut order: Vec<usize> = (0..n).collect();
    // stable sort keeps the result deterministic on exact ties
    order.sort_by(|&i, &j| a[j * n + j].total_cmp(&a[i * n + i]));
    let values = order.iter().map(|&i| a[i * n + i]).collect();
    let vectors = order
        .iter()
        .map(|&col| (0..n).map(|k| v[k * n + col]).collect())
        .collect();
    Ok(Eigen {
        values,
        vectors,
        sweeps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_shapes() {
        assert!(matches!(
            SymMatrix::new(2, vec![0.0; 3]),
            Err(SpectraError::NotSquare { .. })
        ));
        assert!(matches!(
            SymMatrix::new(2, vec![0.0, 1.0, 2.0, 0.0]),
            Err(SpectraError::NotSymmetric { row: 1, col: 0 })
        ));
    }

    #[test]
    fn two_by_two() {
        let m = SymMatrix::new(2, vec![2.0, 1.0, 1.0, 2.0]).unwrap();
        let e = jacobi_eigen(&m, 1e-14).unwrap();
        assert!((e.values[0] - 3.0).abs() < 1e-14);
        assert!((e.values[1] - 1.0).abs() < 1e-14);
        let x = &e.vectors[0];
        assert!((x[0].abs() - x[1].abs()).abs() < 1e-14);
    }

    #[test]
    fn one_by_one_and_empty() {
        let m = SymMatrix::new(1, vec![-4.5]).unwrap();
        let e = jacobi_eigen(&m, 1e-12).unwrap();
        assert_eq!(e.values, vec![-4.5]);
        assert_eq!(e.sweeps, 0);
        let e = jacobi_eigen(&SymMatrix::new(0, vec![]).unwrap(), 1e-12).unwrap();
        assert!(e.values.is_empty());
    }

    #[test]
    fn zero_tolerance_on_dense_matrix_reports_no_convergence() {
        let rows: Vec<Vec<f64>> = (0..12)
            .map(|i| (0..12).map(|j| ((i * 7 + j * 7) % 5) as f64 - 2.0).collect())
            .collect();
        let m = SymMatrix::from_rows(&rows).unwrap();
        match jacobi_eigen(&m, -1.0) {
            Err(SpectraError::NoConvergence { sweeps, .. }) => assert_eq!(sweeps, MAX_SWEEPS),
            other => panic!("expected non-convergence, got {other:?}"),
        }
    }
}
