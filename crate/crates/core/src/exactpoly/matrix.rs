use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::{IntPoly, PolyError};

/// Square matrix of arbitrary-precision integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    size: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, PolyError> {
        let big: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Self::from_big_rows(big)
    }

    pub fn from_big_rows(rows: Vec<Vec<BigInt>>) -> Result<Self, PolyError> {
        let size = rows.len();
        let mut data = Vec::with_capacity(size * size);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != size {
                return Err(PolyError::NotSquare {
                    row: i,
                    len: row.len(),
                    expected: size,
                });
            }
            data.extend(row);
        }
        Ok(IntMatrix { size, data })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.size + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.size..(i + 1) * self.size]
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.size).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.size).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn principal_submatrix(&self, indices: &[usize]) -> IntMatrix {
        let rows = indices
            .iter()
            .map(|&i| indices.iter().map(|&j| self.get(i, j).clone()).collect())
            .collect();
        IntMatrix::from_big_rows(rows).expect("principal submatrix is square")
    }

    /// Entries as `f64`, row-major.
    pub fn to_f64(&self) -> Vec<f64> {
        self.data
            .iter()
            .map(|x| x.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    /// `det(λI − M)`, monic of degree `size`, by the Faddeev–LeVerrier
    /// recurrence:
    ///
    /// ```text
    /// M_0 = 0,  c_n = 1
    /// M_k = A·M_{k-1} + c_{n-k+1}·I
    /// c_{n-k} = −tr(A·M_k) / k
    /// ```
    ///
    /// Every division by `k` is exact over the integers.
    pub fn char_poly_exact(&self) -> IntPoly {
        let n = self.size;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::from(1);
        if n == 0 {
            return IntPoly::new(coeffs);
        }
        // the ±1 adjacency matrices fit in i64; multiply by small scalars then
        let small: Option<Vec<i64>> = self.data.iter().map(ToPrimitive::to_i64).collect();
        let mut m = vec![BigInt::zero(); n * n];
        let mut am = vec![BigInt::zero(); n * n];
        for k in 1..=n {
            // M_k = A·M_{k-1} + c_{n-k+1}·I
            if k == 1 {
                for i in 0..n {
                    m[i * n + i] = coeffs[n].clone();
                }
            } else {
                self.mul_into(small.as_deref(), &m, &mut am);
                std::mem::swap(&mut m, &mut am);
                for i in 0..n {
                    m[i * n + i] += &coeffs[n - k + 1];
                }
            }
            // tr(A·M_k) = Σ_ij A_ij · M_ji
            let mut trace = BigInt::zero();
            for i in 0..n {
                for j in 0..n {
                    match &small {
                        Some(a) => {
                            let aij = a[i * n + j];
                            if aij != 0 {
                                trace += &m[j * n + i] * aij;
                            }
                        }
                        None => trace += self.get(i, j) * &m[j * n + i],
                    }
                }
            }
            let (q, r) = trace.div_rem(&BigInt::from(k));
            debug_assert!(r.is_zero(), "Faddeev–LeVerrier division must be exact");
            coeffs[n - k] = -q;
        }
        IntPoly::new(coeffs)
    }

    fn mul_into(&self, small: Option<&[i64]>, rhs: &[BigInt], out: &mut [BigInt]) {
        let n = self.size;
        for x in out.iter_mut() {
            x.set_zero();
        }
        for i in 0..n {
            for l in 0..n {
                let row = &rhs[l * n..(l + 1) * n];
                let dst = &mut out[i * n..(i + 1) * n];
                match small {
                    Some(a) => match a[i * n + l] {
                        0 => {}
                        1 => dst.iter_mut().zip(row).for_each(|(d, r)| *d += r),
                        -1 => dst.iter_mut().zip(row).for_each(|(d, r)| *d -= r),
                        c => dst.iter_mut().zip(row).for_each(|(d, r)| *d += r * c),
                    },
                    None => {
                        let c = self.get(i, l);
                        if !c.is_zero() {
                            dst.iter_mut().zip(row).for_each(|(d, r)| *d += r * c);
                        }
                    }
                }
            }
        }
    }
}
