//! Verification suites. Each returns a [`VerificationReport`] listing every
//! grid point with its status; a report passes when no point failed.
//! Points outside the region where a claim is made are reported as
//! informational and never fail.

mod exact;
mod numeric;
mod roots;

use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::exactpoly::IntPoly;

pub use exact::{
    verify_appendix_identities, verify_appendix_signs, verify_factorizations,
    verify_factorizations_with,
};
pub use numeric::{verify_bounds, verify_theorem, RankRow, TheoremRun, DEFAULT_MAX_ENUMERATED_K};
pub use roots::{verify_ordering_lemma, verify_theta2_dominates};

/// The parameters for which the extremal claims are made.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TheoremRegion {
    pub k_min: usize,
    pub n_offset: usize,
}

pub const THEOREM_REGION: TheoremRegion = TheoremRegion {
    k_min: 15,
    n_offset: 20,
};

impl TheoremRegion {
    pub fn contains(&self, n: usize, k: usize) -> bool {
        k >= self.k_min && n >= k + self.n_offset
    }
}

/// Tolerance for the numeric bound checks.
pub const BOUND_TOL: f64 = 1e-8;
/// The upper bound `n − 1` is strict for nonempty negative parts.
pub const STRICT_UPPER_TOL: f64 = 1e-9;
/// Residuals may not exceed this times `n`.
pub const RESIDUAL_PER_VERTEX: f64 = 1e-10;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u: Option<usize>,
}

impl Params {
    pub fn nk(n: usize, k: usize) -> Self {
        Params {
            n: Some(n),
            k: Some(k),
            ..Default::default()
        }
    }

    pub fn nks(n: usize, k: usize, s: usize) -> Self {
        Params {
            n: Some(n),
            k: Some(k),
            s: Some(s),
            t: Some(k - 6 - s),
            u: Some(n + 1 - k),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Status {
    ExactPass,
    NumericPass {
        #[serde(serialize_with = "crate::report::ser_sig15")]
        margin: f64,
    },
    Fail {
        witness: Value,
    },
    Informational {
        data: Value,
    },
}

impl Status {
    pub fn is_fail(&self) -> bool {
        matches!(self, Status::Fail { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Point {
    pub check: String,
    pub params: Params,
    #[serde(flatten)]
    pub status: Status,
}

impl Point {
    pub fn new(check: &str, params: Params, status: Status) -> Self {
        Point {
            check: check.to_owned(),
            params,
            status,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub points: usize,
    pub exact_pass: usize,
    pub numeric_pass: usize,
    pub fail: usize,
    pub informational: usize,
}

/// Parameter grid as the list of `(n, k)` pairs visited.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Grid {
    pub pairs: Vec<[usize; 2]>,
}

impl Grid {
    pub fn new(pairs: &[(usize, usize)]) -> Self {
        Grid {
            pairs: pairs.iter().map(|&(n, k)| [n, k]).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub grid: Grid,
    pub points: Vec<Point>,
    pub totals: Totals,
    pub notes: Vec<String>,
    /// The only field that varies between identical runs.
    #[serde(serialize_with = "crate::report::ser_sig15")]
    pub wall_time_seconds: f64,
}

impl VerificationReport {
    fn build(claim: &str, grid: Grid, points: Vec<Point>, notes: Vec<String>, start: Instant) -> Self {
        let mut totals = Totals {
            points: points.len(),
            ..Default::default()
        };
        for p in &points {
            match p.status {
                Status::ExactPass => totals.exact_pass += 1,
                Status::NumericPass { .. } => totals.numeric_pass += 1,
                Status::Fail { .. } => totals.fail += 1,
                Status::Informational { .. } => totals.informational += 1,
            }
        }
        VerificationReport {
            claim: claim.to_owned(),
            grid,
            points,
            totals,
            notes,
            wall_time_seconds: start.elapsed().as_secs_f64(),
        }
    }

    pub fn passed(&self) -> bool {
        self.totals.fail == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Point> {
        self.points.iter().filter(|p| p.status.is_fail())
    }

    /// Points of one check.
    pub fn check<'a>(&'a self, name: &'a str) -> impl Iterator<Item = &'a Point> + 'a {
        self.points.iter().filter(move |p| p.check == name)
    }

    /// The report with the wall time zeroed, for byte comparisons.
    pub fn without_timing(mut self) -> Self {
        self.wall_time_seconds = 0.0;
        self
    }
}

/// Runs `f` on every pair in parallel and concatenates the points in grid
/// order.
fn per_pair<F>(pairs: &[(usize, usize)], f: F) -> Vec<Point>
where
    F: Fn(usize, usize) -> Vec<Point> + Sync,
{
    pairs
        .par_iter()
        .map(|&(n, k)| f(n, k))
        .collect::<Vec<_>>()
        .concat()
}

/// First coefficient where `actual` and `expected` differ, as a witness.
fn coefficient_witness(actual: &IntPoly, expected: &IntPoly) -> Value {
    let len = actual.coeffs().len().max(expected.coeffs().len());
    let i = (0..len)
        .find(|&i| actual.coeff(i) != expected.coeff(i))
        .unwrap_or(0);
    serde_json::json!({
        "coefficient": i,
        "actual": actual.coeff(i).to_string(),
        "expected": expected.coeff(i).to_string(),
    })
}

fn exact_status(actual: &IntPoly, expected: &IntPoly) -> Status {
    if actual == expected {
        Status::ExactPass
    } else {
        Status::Fail {
            witness: coefficient_witness(actual, expected),
        }
    }
}

fn big(x: i128) -> BigInt {
    BigInt::from(x)
}
