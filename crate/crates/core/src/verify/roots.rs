//! Index comparisons through isolated largest roots of `F` and `P`.

use std::cmp::Ordering;
use std::time::Instant;

use num_traits::ToPrimitive;
use serde_json::json;

use super::{per_pair, Grid, Params, Point, Status, VerificationReport, THEOREM_REGION};
use crate::exactpoly::{compare_max_roots, eps_pow10, max_real_root, RootInterval};
use crate::families;

/// Required separation between the extreme and every interior root.
pub const ORDERING_MARGIN: f64 = 1e-9;
const EPS_START: u32 = 12;
const EPS_MIN: u32 = 30;

fn region_note() -> String {
    format!(
        "claims are asserted for k ≥ {} and n ≥ k + {}; other points are informational",
        THEOREM_REGION.k_min, THEOREM_REGION.n_offset
    )
}

fn admissible(pairs: &[(usize, usize)], notes: &mut Vec<String>) -> Vec<(usize, usize)> {
    let (keep, skip): (Vec<_>, Vec<_>) = pairs.iter().partition(|&&(n, k)| n >= k && k >= 6);
    if !skip.is_empty() {
        notes.push(format!("skipped pairs outside n ≥ k ≥ 6: {skip:?}"));
    }
    keep
}

/// The largest root of `F` over `s ∈ [0, k−6]` is attained at an end.
pub fn verify_ordering_lemma(pairs: &[(usize, usize)]) -> VerificationReport {
    let start = Instant::now();
    let mut notes = vec![region_note()];
    let pairs = admissible(pairs, &mut notes);
    let points = per_pair(&pairs, |n, k| {
        let eps = eps_pow10(EPS_START);
        let roots: Vec<RootInterval> = (0..=k - 6)
            .map(|s| {
                let f = families::f_poly(n, k, s).expect("admissible");
                max_real_root(&f, &eps).expect("F has real roots")
            })
            .collect();
        let last = k - 6;
        let best_end = if roots[0].lo >= roots[last].lo { 0 } else { last };
        let interior_hi = roots[1..last.max(1)]
            .iter()
            .map(|r| r.hi.clone())
            .max();
        let margin = match &interior_hi {
            Some(hi) => (&roots[best_end].lo - hi).to_f64().unwrap_or(f64::NAN),
            None => f64::INFINITY,
        };
        let argmax = (0..=last)
            .max_by(|&a, &b| roots[a].lo.cmp(&roots[b].lo).then(b.cmp(&a)))
            .expect("nonempty");
        let sequence: Vec<_> = roots
            .iter()
            .enumerate()
            .map(|(s, r)| json!({ "s": s, "t": last - s, "root": r }))
            .collect();
        let params = Params::nk(n, k);
        let mut out = vec![Point::new(
            "ordering_sequence",
            params.clone(),
            Status::Informational {
                data: json!({
                    "argmax_s": argmax,
                    "extreme_s": best_end,
                    "margin": crate::report::sig15(margin),
                    "sequence": sequence,
                }),
            },
        )];
        if THEOREM_REGION.contains(n, k) {
            let status = if margin > ORDERING_MARGIN {
                Status::NumericPass { margin }
            } else {
                Status::Fail {
                    witness: json!({
                        "argmax_s": argmax,
                        "extreme_s": best_end,
                        "extreme": roots[best_end],
                        "argmax": roots[argmax],
                        "margin": crate::report::sig15(margin),
                    }),
                }
            };
            out.push(Point::new("ordering_extreme", params, status));
        }
        out
    });
    VerificationReport::build("ordering", Grid::new(&pairs), points, notes, start)
}

/// The largest root of `P` lies strictly above those of `F` at `s = 0` and
/// `s = k − 6`.
pub fn verify_theta2_dominates(pairs: &[(usize, usize)]) -> VerificationReport {
    let start = Instant::now();
    let mut notes = vec![region_note()];
    let pairs = admissible(pairs, &mut notes);
    let points = per_pair(&pairs, |n, k| {
        let p = families::p_poly(n, k).expect("admissible");
        let mut out = Vec::new();
        for (check, s) in [("dominance_s0", 0), ("dominance_s_max", k - 6)] {
            let f = families::f_poly(n, k, s).expect("admissible");
            let (ord, a, b) =
                compare_max_roots(&p, &f, &eps_pow10(EPS_START), &eps_pow10(EPS_MIN)).expect("real roots");
            let margin = (&a.lo - &b.hi).to_f64().unwrap_or(f64::NAN);
            let params = Params::nks(n, k, s);
            let data = json!({
                "theta2": a,
                "theta1": b,
                "ordering": format!("{ord:?}"),
                "width": a.width().to_f64(),
            });
            let status = if !THEOREM_REGION.contains(n, k) {
                Status::Informational { data }
            } else if ord == Some(Ordering::Greater) {
                Status::NumericPass { margin }
            } else {
                Status::Fail { witness: data }
            };
            out.push(Point::new(check, params, status));
        }
        out
    });
    VerificationReport::build("dominance", Grid::new(&pairs), points, notes, start)
}
