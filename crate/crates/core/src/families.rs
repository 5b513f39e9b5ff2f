//! The graph families and closed-form polynomials.
//!
//! Vertex layout of the negative parts (filler vertices follow):
//!
//! ```text
//! θ₁(s,t):  v₁=0 v₂=1 v₃=2 u₁=3 ω₁=4, s pendants at u₁, then t pendants at v₃
//!           hubs v₁, v₃; middle vertices v₂, u₁, ω₁
//! θ₂(0,k−5): v₁=0 v₂=1 u₁=2 ω₁=3, then k−5 pendants at v₂
//!           triangles v₁v₂u₁ and v₁v₂ω₁
//! ```
//!
//! Every polynomial here takes concrete integer parameters and is built in
//! `i128` before conversion, which is exact for any order a graph can have
//! in memory.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactpoly::{IntMatrix, IntPoly};
use crate::graph::{SignedCompleteGraph, SimpleGraph, Vertex};
use crate::quotient::{PartitionError, SpecialPartition};

pub const THETA1_BASE_ORDER: usize = 5;
pub const THETA2_BASE_ORDER: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("θ̂({a},{b},{c}) needs 1 ≤ a ≤ b ≤ c and b ≥ 2")]
    ThetaHat { a: usize, b: usize, c: usize },
    #[error("θ₁({s},{t}) in K_{n} needs n ≥ s + t + 6")]
    Theta1 { n: usize, s: usize, t: usize },
    #[error("θ₂(0,k−5) in K_{n} with k = {k} needs k ≥ 5 and n ≥ k")]
    Theta2 { n: usize, k: usize },
    #[error("θ₁(s,t) with k = {k} needs k ≥ 6 and s ≤ k − 6, got s = {s}")]
    SplitOutOfRange { k: usize, s: usize },
    #[error("difference polynomial is not divisible by {factor}")]
    NotDivisible { factor: i64 },
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// A member of one of the two extremal families, named by its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    Theta1 { n: usize, s: usize, t: usize },
    Theta2 { n: usize, k: usize },
}

impl Family {
    pub fn theta1(n: usize, s: usize, t: usize) -> Result<Self, FamilyError> {
        if n < s + t + 6 {
            return Err(FamilyError::Theta1 { n, s, t });
        }
        Ok(Family::Theta1 { n, s, t })
    }

    pub fn theta2(n: usize, k: usize) -> Result<Self, FamilyError> {
        if k < 5 || n < k {
            return Err(FamilyError::Theta2 { n, k });
        }
        Ok(Family::Theta2 { n, k })
    }

    pub fn n(&self) -> usize {
        match *self {
            Family::Theta1 { n, .. } | Family::Theta2 { n, .. } => n,
        }
    }

    /// Number of negative edges.
    pub fn k(&self) -> usize {
        match *self {
            Family::Theta1 { s, t, .. } => s + t + 6,
            Family::Theta2 { k, .. } => k,
        }
    }

    /// Size of the filler block, `n − k + 1`.
    pub fn u(&self) -> usize {
        self.n() + 1 - self.k()
    }

    pub fn negative_part(&self) -> SimpleGraph {
        match *self {
            Family::Theta1 { s, t, .. } => theta1_negative_part(s, t),
            Family::Theta2 { k, .. } => theta2_negative_part(k),
        }
    }

    pub fn graph(&self) -> SignedCompleteGraph {
        SignedCompleteGraph::embed(&self.negative_part(), self.n())
            .expect("parameters were validated")
    }

    /// The block-quotient polynomial: `F` for θ₁, `P` for θ₂.
    pub fn quotient_poly(&self) -> IntPoly {
        match *self {
            Family::Theta1 { n, s, t } => f_poly_raw(n as i128, (s + t + 6) as i128, s as i128),
            Family::Theta2 { n, k } => p_poly_raw(n as i128, k as i128),
        }
    }

    /// Multiplicity of −1 split off by the factorization: `n − 7` or `n − 5`.
    pub fn plus_one_power(&self) -> usize {
        match *self {
            Family::Theta1 { n, .. } => n - 7,
            Family::Theta2 { n, .. } => n - 5,
        }
    }

    pub fn label(&self) -> String {
        match *self {
            Family::Theta1 { n, s, t } => format!("theta1(n={n},s={s},t={t})"),
            Family::Theta2 { n, k } => format!("theta2(n={n},k={k})"),
        }
    }
}

/// Two hubs joined by internally disjoint paths of lengths `a ≤ b ≤ c`.
///
/// Hub 0; the `a`-path runs `0, 1, …, a` so the second hub is `a`; then the
/// interior vertices of the `b`-path, then those of the `c`-path.
pub fn theta_hat(a: usize, b: usize, c: usize) -> Result<SimpleGraph, FamilyError> {
    if a < 1 || a > b || b > c || b < 2 {
        return Err(FamilyError::ThetaHat { a, b, c });
    }
    let n = a + b + c - 1;
    let hub = a;
    let mut edges: Vec<(Vertex, Vertex)> = (0..a).map(|i| (i, i + 1)).collect();
    let mut next = a + 1;
    for len in [b, c] {
        let mut prev = 0;
        for _ in 1..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, hub));
    }
    Ok(SimpleGraph::from_edges(n, edges).expect("paths are internally disjoint"))
}

pub fn theta1_negative_part(s: usize, t: usize) -> SimpleGraph {
    let mut edges = vec![(0, 1), (1, 2), (0, 3), (2, 3), (0, 4), (2, 4)];
    let first = THETA1_BASE_ORDER;
    edges.extend((first..first + s).map(|p| (3, p)));
    edges.extend((first + s..first + s + t).map(|p| (2, p)));
    SimpleGraph::from_edges(first + s + t, edges).expect("valid by construction")
}

pub fn theta2_negative_part(k: usize) -> SimpleGraph {
    let mut edges = vec![(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)];
    edges.extend((THETA2_BASE_ORDER..k - 1).map(|p| (1, p)));
    SimpleGraph::from_edges(k - 1, edges).expect("valid by construction")
}

pub fn theta1(n: usize, s: usize, t: usize) -> Result<SignedCompleteGraph, FamilyError> {
    Ok(Family::theta1(n, s, t)?.graph())
}

pub fn theta2(n: usize, k: usize) -> Result<SignedCompleteGraph, FamilyError> {
    Ok(Family::theta2(n, k)?.graph())
}

/// `X₁={v₁} X₂={u₁} X₃={v₃} X₄={v₂,ω₁} X₅` = pendants at `v₃`,
/// `X₆` = pendants at `u₁`, `X₇` = filler. `X₅`/`X₆` are empty unless
/// `t ≥ 1`/`s ≥ 1`, which is rejected.
pub fn theta1_partition(n: usize, s: usize, t: usize) -> Result<SpecialPartition, FamilyError> {
    Family::theta1(n, s, t)?;
    let p0 = THETA1_BASE_ORDER;
    let blocks = vec![
        vec![0],
        vec![3],
        vec![2],
        vec![1, 4],
        (p0 + s..p0 + s + t).collect(),
        (p0..p0 + s).collect(),
        (p0 + s + t..n).collect(),
    ];
    Ok(SpecialPartition::new(blocks, 7)?)
}

/// `X₁={v₁} X₂={v₂} X₃={u₁,ω₁} X₄` = pendants at `v₂`, `X₅` = filler.
/// Needs `k ≥ 6` so that `X₄` is nonempty.
pub fn theta2_partition(n: usize, k: usize) -> Result<SpecialPartition, FamilyError> {
    Family::theta2(n, k)?;
    let blocks = vec![
        vec![0],
        vec![1],
        vec![2, 3],
        (THETA2_BASE_ORDER..k - 1).collect(),
        (k - 1..n).collect(),
    ];
    Ok(SpecialPartition::new(blocks, 5)?)
}

fn poly(coeffs_ascending: &[i128]) -> IntPoly {
    IntPoly::new(coeffs_ascending.iter().map(|&c| BigInt::from(c)).collect())
}

fn split(k: usize, s: usize) -> Result<usize, FamilyError> {
    if k < 6 || s > k - 6 {
        return Err(FamilyError::SplitOutOfRange { k, s });
    }
    Ok(k - 6 - s)
}

/// The degree-7 polynomial with `φ((K_n, θ₁(s,t))) = (λ+1)^(n−7)·F`, where
/// `t = k − 6 − s`.
pub fn f_poly(n: usize, k: usize, s: usize) -> Result<IntPoly, FamilyError> {
    let t = split(k, s)?;
    Family::theta1(n, s, t)?;
    Ok(f_poly_raw(n as i128, k as i128, s as i128))
}

fn f_poly_raw(n: i128, k: i128, s: i128) -> IntPoly {
    let t = k - 6 - s;
    let u = n - k + 1;
    let (st, stu, su, ku) = (s * t, s * t * u, s * u, k * u);
    poly(&[
        -44 * ku - 56 * st + 112 * stu - 16 * su + 287 * n - 272 * k + 8 * s + 193,
        -80 * ku - 96 * st - 32 * stu - 32 * su + 570 * n - 512 * k + 32 * s + 199,
        -24 * ku - 16 * st - 16 * stu - 16 * su + 273 * n - 192 * k + 48 * s - 267,
        16 * ku + 32 * st - 20 * n + 64 * k + 32 * s - 349,
        4 * ku + 8 * st - 15 * n + 16 * k + 8 * s - 61,
        21 - 6 * n,
        7 - n,
        1,
    ])
}

/// The degree-5 polynomial with `φ((K_n, θ₂(0,k−5))) = (λ+1)^(n−5)·P`.
pub fn p_poly(n: usize, k: usize) -> Result<IntPoly, FamilyError> {
    Family::theta2(n, k)?;
    Ok(p_poly_raw(n as i128, k as i128))
}

fn p_poly_raw(n: i128, k: i128) -> IntPoly {
    let ku = k * (n - k + 1);
    poly(&[
        -28 * ku + 127 * n - 120 * k + 97,
        8 * ku - 36 * n + 48 * k - 91,
        4 * ku - 6 * n + 8 * k - 22,
        10 - 4 * n,
        5 - n,
        1,
    ])
}

/// The 7×7 quotient of the θ₁ partition, rows as printed.
pub fn quotient_theta1_matrix(n: usize, s: usize, t: usize) -> Result<IntMatrix, FamilyError> {
    let fam = Family::theta1(n, s, t)?;
    let (s, t, u) = (s as i64, t as i64, fam.u() as i64);
    let rows = vec![
        vec![0, -1, 1, -2, t, s, u],
        vec![-1, 0, -1, 2, t, -s, u],
        vec![1, -1, 0, -2, -t, s, u],
        vec![-1, 1, -1, 1, t, s, u],
        vec![1, 1, -1, 2, t - 1, s, u],
        vec![1, -1, 1, 2, t, s - 1, u],
        vec![1, 1, 1, 2, t, s, u - 1],
    ];
    Ok(IntMatrix::from_rows(&rows).expect("square"))
}

/// The 5×5 quotient of the θ₂ partition, rows as printed.
pub fn quotient_theta2_matrix(n: usize, k: usize) -> Result<IntMatrix, FamilyError> {
    let fam = Family::theta2(n, k)?;
    let (k, u) = (k as i64, fam.u() as i64);
    let rows = vec![
        vec![0, -1, -2, k - 5, u],
        vec![-1, 0, -2, 5 - k, u],
        vec![-1, -1, 1, k - 5, u],
        vec![1, -1, 2, k - 6, u],
        vec![1, 1, 2, k - 5, u - 1],
    ];
    Ok(IntMatrix::from_rows(&rows).expect("square"))
}

/// The difference polynomial `p` for the move θ₁(s,t) → θ₁(s−1,t+1), and its
/// two splits `p₁ + p₂` and `P₁ + P₂`, transcribed as printed. Parameters
/// are signed so the identities can be probed off the admissible range.
pub mod appendix {
    use super::poly;
    use crate::exactpoly::IntPoly;

    pub fn p(s: i128, t: i128, u: i128) -> IntPoly {
        let d = s - t - 2;
        poly(&[
            14 * s * u - 7 * s - 14 * t * u + 7 * t - 12 * u + 6,
            -4 * ((u + 3) * d + 4),
            -2 * ((u + 1) * d + 4),
            4 * d,
            d,
        ])
    }

    pub fn p1(s: i128, t: i128, u: i128) -> IntPoly {
        let d = s - t - 2;
        poly(&[-7 * s - 14 * t * u - 12 * u, -16, -8, 4 * d, d])
    }

    pub fn p2(s: i128, t: i128, u: i128) -> IntPoly {
        let d = s - t - 2;
        poly(&[14 * s * u + 7 * t + 6, -4 * (u + 3) * d, -2 * (u + 1) * d])
    }

    pub fn p1_cap(s: i128, t: i128, u: i128) -> IntPoly {
        let d = s - t - 2;
        poly(&[
            -7 * s - 14 * t * u - 12 * u,
            -4 * ((u + 3) * d + 4),
            -2 * ((u + 1) * d + 4),
        ])
    }

    pub fn p2_cap(s: i128, t: i128, u: i128) -> IntPoly {
        let d = s - t - 2;
        poly(&[14 * s * u + 7 * t + 6, 0, 0, 4 * d, d])
    }

    /// `s(λ)` for the comparison θ₁(0,k−6) against θ₂(0,k−5).
    pub fn s(n: i128, k: i128) -> IntPoly {
        poly(&[
            -2 * k * n - 21 * k - 20 * n + 2 * k * k + 12,
            -4 * (-k * k + k * n + 11 * k - 11 * n - 3),
            -2 * (-k * k + k * n + 12 * k - 14 * n + 10),
            4 * (n - 7),
            k - 8,
        ])
    }

    pub fn s1(n: i128, k: i128) -> IntPoly {
        poly(&[2 * k * k + 12, 0, 0, 4 * (n - 7), k - 8])
    }

    pub fn s2(n: i128, k: i128) -> IntPoly {
        poly(&[
            -2 * k * n - 21 * k - 20 * n,
            -4 * (-k * k + k * n + 11 * k - 11 * n - 3),
            -2 * (-k * k + k * n + 12 * k - 14 * n + 10),
        ])
    }

    /// `S(λ)` for the comparison θ₁(k−6,0) against θ₂(0,k−5).
    pub fn s_cap(n: i128, k: i128) -> IntPoly {
        poly(&[
            -2 * k * n - 17 * k - 4 * n + 2 * k * k + 9,
            -2 * (-2 * k * k + 2 * k * n + 17 * k - 17 * n - 3),
            -(-k * k + k * n + 8 * k - 10 * n + 11),
            2 * (n + k - 13),
            k - 7,
        ])
    }

    pub fn s1_cap(n: i128, k: i128) -> IntPoly {
        poly(&[2 * k * k + 9, 0, 0, 2 * (n + k - 13), k - 7])
    }

    pub fn s2_cap(n: i128, k: i128) -> IntPoly {
        poly(&[
            -2 * k * n - 17 * k - 4 * n,
            -2 * (-2 * k * k + 2 * k * n + 17 * k - 17 * n - 3),
            -(-k * k + k * n + 8 * k - 10 * n + 11),
        ])
    }

    /// Expanded right-hand sides printed for the four sign conclusions,
    /// evaluated at concrete parameters.
    pub mod displayed {
        /// Printed value of `p₁(n−4) + p₂(n−1)`.
        pub fn p_case(n: i128, k: i128, s: i128, t: i128) -> i128 {
            let d = s - t - 2;
            d * (k - 15) * n.pow(3) + d * (2 * k.pow(3) + 40 * k * k - 158 * k + 119) - 8 * k * k
                + 64 * k
                - 128
        }

        /// Printed value of `P₁(n−1) + P₂(n−4)`.
        pub fn p_cap_case(n: i128, k: i128, s: i128, t: i128, u: i128) -> i128 {
            (k - 15) * (s - t - 2) * n.pow(3)
                + (2 * k * k + 34 * k - 108) * n
                + 16 * (s - t - 1) * u
                + 3 * s
                - 3 * t
                - 6
        }

        /// Printed value of `s₁(n−3) + s₂(n−1)`.
        pub fn s_case(n: i128, k: i128) -> i128 {
            (k * k - 19 * k + 64) * n.pow(3) + (2 * k.pow(3) + 28 * k * k - 238 * k + 120) * n
                + 80 * k
                + 88
        }

        /// Printed value of `S₁(n−4) + S₂(n−1)` (the equality, not the
        /// following lower bound).
        pub fn s_cap_case(n: i128, k: i128) -> i128 {
            (k - 5) * n.pow(4) + (82 - 16 * k) * n.pow(3) + (2 * k * k + 56 * k - 292) * n * n
                + (448 - 162 * k) * n
                + 129 * k
                - 147
        }
    }
}

/// `s` recomputed from `(λ+1)²·P − F(s=0) = −8·s`.
pub fn derived_s(n: usize, k: usize) -> Result<IntPoly, FamilyError> {
    derived_difference(n, k, 0, -8)
}

/// `S` recomputed from `(λ+1)²·P − F(s=k−6) = −16·S`.
pub fn derived_s_cap(n: usize, k: usize) -> Result<IntPoly, FamilyError> {
    derived_difference(n, k, k.saturating_sub(6), -16)
}

fn derived_difference(n: usize, k: usize, s: usize, factor: i64) -> Result<IntPoly, FamilyError> {
    let f = f_poly(n, k, s)?;
    let p = p_poly(n, k)?;
    let diff = &(&IntPoly::linear(1).pow(2).expect("small") * &p) - &f;
    diff.divide_exact(&IntPoly::from_i64s(&[factor]))
        .map_err(|_| FamilyError::NotDivisible { factor })
}
