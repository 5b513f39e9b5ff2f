//! Exact suites: factorizations, difference identities and sign conclusions.

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use super::{big, coefficient_witness, exact_status, per_pair, Grid, Params, Point, Status, VerificationReport};
use crate::exactpoly::{eps_pow10, max_real_root, IntPoly, RootInterval, SturmSequence};
use crate::families::{self, appendix, appendix::displayed};
use crate::quotient;

fn char_poly_theta1(n: usize, s: usize, t: usize) -> IntPoly {
    families::theta1(n, s, t)
        .expect("caller checked parameters")
        .adjacency_matrix()
        .char_poly_exact()
}

fn char_poly_theta2(n: usize, k: usize) -> IntPoly {
    families::theta2(n, k)
        .expect("caller checked parameters")
        .adjacency_matrix()
        .char_poly_exact()
}

fn plus_one_pow(e: usize) -> IntPoly {
    IntPoly::linear(1).pow(e as i64).expect("non-negative")
}

fn admissible(pairs: &[(usize, usize)], min_k: usize, notes: &mut Vec<String>) -> Vec<(usize, usize)> {
    let (keep, skip): (Vec<_>, Vec<_>) = pairs.iter().partition(|&&(n, k)| n >= k && k >= min_k);
    if !skip.is_empty() {
        notes.push(format!(
            "skipped {} pairs outside n ≥ k, k ≥ {min_k}: {:?}",
            skip.len(),
            skip
        ));
    }
    keep
}

/// Full characteristic polynomials against `(λ+1)^(n−7)·F` and
/// `(λ+1)^(n−5)·P`, plus the partition route and the printed quotient
/// matrices where the partitions have no empty block.
pub fn verify_factorizations(pairs: &[(usize, usize)]) -> VerificationReport {
    verify_factorizations_with(
        pairs,
        |n, k, s| families::f_poly(n, k, s).expect("admissible"),
        |n, k| families::p_poly(n, k).expect("admissible"),
    )
}

/// [`verify_factorizations`] with the closed forms supplied by the caller,
/// so that a corrupted transcription can be shown to fail.
pub fn verify_factorizations_with<F, P>(pairs: &[(usize, usize)], f_poly: F, p_poly: P) -> VerificationReport
where
    F: Fn(usize, usize, usize) -> IntPoly + Sync,
    P: Fn(usize, usize) -> IntPoly + Sync,
{
    let start = Instant::now();
    let mut notes = Vec::new();
    let pairs = admissible(pairs, 6, &mut notes);
    let points = per_pair(&pairs, |n, k| {
        let mut out = Vec::new();
        for s in 0..=k - 6 {
            let t = k - 6 - s;
            let params = Params::nks(n, k, s);
            let full = char_poly_theta1(n, s, t);
            let f = f_poly(n, k, s);
            out.push(Point::new(
                "theta1_factorization",
                params.clone(),
                exact_status(&full, &(&plus_one_pow(n - 7) * &f)),
            ));
            if s >= 1 && t >= 1 {
                let g = families::theta1(n, s, t).expect("admissible");
                let part = families::theta1_partition(n, s, t).expect("s, t ≥ 1");
                let routed = quotient::char_poly_from_quotient(&g, &part).expect("special partition");
                out.push(Point::new("theta1_partition", params.clone(), exact_status(&routed, &full)));
                let built = quotient::quotient_matrix(&g, &part).expect("special partition");
                let printed = families::quotient_theta1_matrix(n, s, t).expect("admissible");
                out.push(Point::new(
                    "theta1_printed_quotient",
                    params,
                    printed_status(&built, &printed, &f),
                ));
            }
        }
        let params = Params::nk(n, k);
        let full = char_poly_theta2(n, k);
        let p = p_poly(n, k);
        out.push(Point::new(
            "theta2_factorization",
            params.clone(),
            exact_status(&full, &(&plus_one_pow(n - 5) * &p)),
        ));
        let g = families::theta2(n, k).expect("admissible");
        let part = families::theta2_partition(n, k).expect("k ≥ 6");
        let routed = quotient::char_poly_from_quotient(&g, &part).expect("special partition");
        out.push(Point::new("theta2_partition", params.clone(), exact_status(&routed, &full)));
        let built = quotient::quotient_matrix(&g, &part).expect("special partition");
        let printed = families::quotient_theta2_matrix(n, k).expect("admissible");
        out.push(Point::new("theta2_printed_quotient", params, printed_status(&built, &printed, &p)));
        out
    });
    VerificationReport::build("factorizations", Grid::new(&pairs), points, notes, start)
}

fn printed_status(
    built: &crate::exactpoly::IntMatrix,
    printed: &crate::exactpoly::IntMatrix,
    closed_form: &IntPoly,
) -> Status {
    if built != printed {
        let (i, j) = (0..built.size())
            .flat_map(|i| (0..built.size()).map(move |j| (i, j)))
            .find(|&(i, j)| built.get(i, j) != printed.get(i, j))
            .expect("matrices differ somewhere");
        return Status::Fail {
            witness: json!({
                "entry": [i, j],
                "constructed": built.get(i, j).to_string(),
                "printed": printed.get(i, j).to_string(),
            }),
        };
    }
    exact_status(&printed.char_poly_exact(), closed_form)
}

/// Compares `lhs` with `factor·(λ+1)^e·poly`; on failure the witness carries
/// the reduced difference `lhs/(λ+1)^e − factor·poly`.
fn difference_status(lhs: &IntPoly, e: usize, factor: i64, poly: &IntPoly) -> Status {
    let expected = poly.scale_i64(factor);
    let rhs = &plus_one_pow(e) * &expected;
    if *lhs == rhs {
        return Status::ExactPass;
    }
    let mut witness = coefficient_witness(lhs, &rhs);
    match lhs.divide_exact(&plus_one_pow(e)) {
        Ok(reduced) => {
            let delta = &reduced - &expected;
            witness["reduced_lhs"] = Value::String(reduced.to_pretty());
            witness["expected"] = Value::String(expected.to_pretty());
            witness["delta"] = Value::String(delta.to_pretty());
        }
        Err(_) => witness["note"] = Value::String(format!("not divisible by (λ+1)^{e}")),
    }
    Status::Fail { witness }
}

/// The three difference identities and the splits of `p`, `s` and `S`.
pub fn verify_appendix_identities(pairs: &[(usize, usize)]) -> VerificationReport {
    let start = Instant::now();
    let mut notes = Vec::new();
    let pairs = admissible(pairs, 6, &mut notes);
    let points = per_pair(&pairs, |n, k| {
        let mut out = Vec::new();
        let theta1: Vec<IntPoly> = (0..=k - 6).map(|s| char_poly_theta1(n, s, k - 6 - s)).collect();
        let theta2 = char_poly_theta2(n, k);
        let (ni, ki) = (n as i128, k as i128);
        let u = (n + 1 - k) as i128;
        for s in 0..=k - 6 {
            let t = k - 6 - s;
            let (si, ti) = (s as i128, t as i128);
            let params = Params::nks(n, k, s);
            if s >= 1 {
                let lhs = &theta1[s - 1] - &theta1[s];
                out.push(Point::new(
                    "difference_p",
                    params.clone(),
                    difference_status(&lhs, n - 7, 8, &appendix::p(si, ti, u)),
                ));
            }
            let p = appendix::p(si, ti, u);
            let first = &appendix::p1(si, ti, u) + &appendix::p2(si, ti, u);
            let second = &appendix::p1_cap(si, ti, u) + &appendix::p2_cap(si, ti, u);
            let status = match (exact_status(&first, &p), exact_status(&second, &p)) {
                (Status::ExactPass, Status::ExactPass) => Status::ExactPass,
                (Status::Fail { witness }, _) => Status::Fail {
                    witness: json!({ "split": "p1+p2", "detail": witness }),
                },
                (_, Status::Fail { witness }) => Status::Fail {
                    witness: json!({ "split": "P1+P2", "detail": witness }),
                },
                _ => unreachable!("exact_status is pass or fail"),
            };
            out.push(Point::new("split_p", params, status));
        }
        let params = Params::nk(n, k);
        let lhs = &theta2 - &theta1[0];
        out.push(Point::new(
            "difference_s",
            params.clone(),
            difference_status(&lhs, n - 7, -8, &appendix::s(ni, ki)),
        ));
        let lhs = &theta2 - &theta1[k - 6];
        out.push(Point::new(
            "difference_S",
            params.clone(),
            difference_status(&lhs, n - 7, -16, &appendix::s_cap(ni, ki)),
        ));
        out.push(Point::new(
            "split_s",
            params.clone(),
            exact_status(&(&appendix::s1(ni, ki) + &appendix::s2(ni, ki)), &appendix::s(ni, ki)),
        ));
        out.push(Point::new(
            "split_S",
            params,
            exact_status(
                &(&appendix::s1_cap(ni, ki) + &appendix::s2_cap(ni, ki)),
                &appendix::s_cap(ni, ki),
            ),
        ));
        out
    });
    VerificationReport::build("appendix_identities", Grid::new(&pairs), points, notes, start)
}

/// Sign of `p` on the whole interval, when it is constant and nonzero.
fn sign_on(p: &IntPoly, iv: &RootInterval) -> Option<i8> {
    if iv.is_exact() {
        return Some(p.sign_at(&iv.lo)).filter(|&s| s != 0);
    }
    let (a, b) = (p.sign_at(&iv.lo), p.sign_at(&iv.hi));
    if a == 0 || a != b {
        return None;
    }
    let sf = p.square_free();
    (SturmSequence::new(&sf).count_in(&iv.lo, &iv.hi) == 0).then_some(a)
}

fn index_interval(n: usize, k: usize, s: usize) -> RootInterval {
    let f = families::f_poly(n, k, s).expect("admissible");
    max_real_root(&f, &eps_pow10(12)).expect("F has real roots")
}

fn integer_sign_status(value: &BigInt, want: i8) -> Status {
    let ok = if want > 0 { value.is_positive() } else { value.is_negative() };
    if ok {
        Status::ExactPass
    } else {
        Status::Fail {
            witness: json!({ "value": value.to_string(), "required_sign": want }),
        }
    }
}

fn interval_sign_status(p: &IntPoly, iv: &RootInterval, want: i8) -> Status {
    match sign_on(p, iv) {
        Some(s) if s == want => Status::ExactPass,
        found => Status::Fail {
            witness: json!({
                "interval": iv,
                "sign": found,
                "required_sign": want,
                "value_at_lo": p.evaluate_rational(&iv.lo).to_string(),
            }),
        },
    }
}

fn displayed_point(check: &str, params: Params, displayed: i128, evaluated: &BigInt) -> Point {
    let delta = evaluated - big(displayed);
    Point::new(
        check,
        params,
        Status::Informational {
            data: json!({
                "displayed": displayed.to_string(),
                "evaluated": evaluated.to_string(),
                "delta": delta.to_string(),
                "matches": delta.is_zero(),
            }),
        },
    )
}

/// Sign conclusions at the integer evaluation points and at the actual
/// indices, and the expanded closed forms as informational comparisons.
pub fn verify_appendix_signs(pairs: &[(usize, usize)]) -> VerificationReport {
    let start = Instant::now();
    let mut notes = vec![
        "sign checks at the index use the largest root of F, isolated to width 1e-12".to_owned(),
    ];
    let pairs = admissible(pairs, 6, &mut notes);
    let mut points = per_pair(&pairs, |n, k| {
        let mut out = Vec::new();
        let (ni, ki) = (n as i128, k as i128);
        let u = ni - ki + 1;
        for s in 0..=k - 6 {
            let t = k - 6 - s;
            let (si, ti) = (s as i128, t as i128);
            let params = Params::nks(n, k, s);
            let p = appendix::p(si, ti, u);
            if s <= t + 2 {
                let value = appendix::p1(si, ti, u).evaluate_i64(n as i64 - 4)
                    + appendix::p2(si, ti, u).evaluate_i64(n as i64 - 1);
                out.push(Point::new("p_case", params.clone(), integer_sign_status(&value, -1)));
                let iv = index_interval(n, k, s);
                out.push(Point::new("p_case_at_index", params.clone(), interval_sign_status(&p, &iv, -1)));
                let shown = displayed::p_case(ni, ki, si, ti);
                out.push(displayed_point("p_case_displayed", params, shown, &value));
            } else {
                let value = appendix::p1_cap(si, ti, u).evaluate_i64(n as i64 - 1)
                    + appendix::p2_cap(si, ti, u).evaluate_i64(n as i64 - 4);
                out.push(Point::new("P_case", params.clone(), integer_sign_status(&value, 1)));
                // the index of θ₁(s−1, t+1)
                let iv = index_interval(n, k, s - 1);
                out.push(Point::new("P_case_at_index", params.clone(), interval_sign_status(&p, &iv, 1)));
                let shown = displayed::p_cap_case(ni, ki, si, ti, u);
                out.push(displayed_point("P_case_displayed", params, shown, &value));
            }
        }
        let params = Params::nk(n, k);
        let value = s_case_value(ni, ki);
        out.push(Point::new("s_case", params.clone(), integer_sign_status(&value, 1)));
        let iv = index_interval(n, k, 0);
        out.push(Point::new(
            "s_case_at_index",
            params.clone(),
            interval_sign_status(&appendix::s(ni, ki), &iv, 1),
        ));
        out.push(displayed_point("s_case_displayed", params.clone(), displayed::s_case(ni, ki), &value));
        let value = s_cap_case_value(ni, ki);
        out.push(Point::new("S_case", params.clone(), integer_sign_status(&value, 1)));
        let iv = index_interval(n, k, k - 6);
        out.push(Point::new(
            "S_case_at_index",
            params.clone(),
            interval_sign_status(&appendix::s_cap(ni, ki), &iv, 1),
        ));
        let derived = families::derived_s_cap(n, k).expect("admissible");
        out.push(Point::new(
            "S_derived_at_index",
            params.clone(),
            interval_sign_status(&derived, &iv, 1),
        ));
        out.push(displayed_point("S_case_displayed", params, displayed::s_cap_case(ni, ki), &value));
        out
    });
    let ks: BTreeSet<usize> = pairs.iter().map(|&(_, k)| k).collect();
    for k in ks {
        let params = Params {
            k: Some(k),
            ..Default::default()
        };
        let data = json!({
            "s_case": displayed_delta_in_n(k, |n, k| s_case_value(n, k) - big(displayed::s_case(n, k))),
            "S_case": displayed_delta_in_n(k, |n, k| s_cap_case_value(n, k) - big(displayed::s_cap_case(n, k))),
        });
        points.push(Point::new("displayed_delta_in_n", params, Status::Informational { data }));
    }
    VerificationReport::build("appendix_signs", Grid::new(&pairs), points, notes, start)
}

fn s_case_value(n: i128, k: i128) -> BigInt {
    appendix::s1(n, k).evaluate_i64(n as i64 - 3) + appendix::s2(n, k).evaluate_i64(n as i64 - 1)
}

fn s_cap_case_value(n: i128, k: i128) -> BigInt {
    appendix::s1_cap(n, k).evaluate_i64(n as i64 - 4) + appendix::s2_cap(n, k).evaluate_i64(n as i64 - 1)
}

/// The difference `evaluated − displayed` as a polynomial in `n` for fixed
/// `k`, interpolated through `n = k+20, …, k+26` (the expressions have
/// degree at most 4 in `n`). Ascending coefficients, as exact rationals.
fn displayed_delta_in_n(k: usize, delta: impl Fn(i128, i128) -> BigInt) -> Vec<String> {
    let xs: Vec<i128> = (0..7).map(|i| (k + 20 + i) as i128).collect();
    let ys: Vec<BigInt> = xs.iter().map(|&n| delta(n, k as i128)).collect();
    interpolate(&xs, &ys).iter().map(|c| c.to_string()).collect()
}

/// Coefficients (ascending, trailing zeros dropped) of the polynomial of
/// least degree through the points, via Newton divided differences.
pub(crate) fn interpolate(xs: &[i128], ys: &[BigInt]) -> Vec<BigRational> {
    let m = xs.len();
    let x = |i: usize| BigRational::from_integer(big(xs[i]));
    let mut dd: Vec<BigRational> = ys.iter().map(|y| BigRational::from_integer(y.clone())).collect();
    for j in 1..m {
        for i in (j..m).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (x(i) - x(i - j));
        }
    }
    // Horner on the Newton form
    let mut coeffs = vec![BigRational::zero(); m];
    for i in (0..m).rev() {
        let mut next = vec![BigRational::zero(); m];
        next[1..].clone_from_slice(&coeffs[..m - 1]);
        for d in 0..m {
            next[d] = &next[d] - &coeffs[d] * x(i);
        }
        next[0] = &next[0] + &dd[i];
        coeffs = next;
    }
    while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    coeffs
}
