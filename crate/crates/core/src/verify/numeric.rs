//! Numeric suites: index bounds and the exhaustive extremal check.

use std::cmp::Ordering;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use super::{
    per_pair, Grid, Params, Point, Status, VerificationReport, BOUND_TOL, RESIDUAL_PER_VERTEX,
    STRICT_UPPER_TOL, THEOREM_REGION,
};
use crate::enumerate::{self, certificate};
use crate::exactpoly::{compare_max_roots, eps_pow10};
use crate::families;
use crate::graph::SignedCompleteGraph;
use crate::quotient::collapsed_char_poly;
use crate::report::sig15;
use crate::spectra::{self, COMPARE_MARGIN, DEFAULT_TOL};

/// Enumerated negative parts join the bounds suite up to this many edges.
pub const DEFAULT_MAX_ENUMERATED_K: usize = 11;
const TOP: usize = 10;

#[derive(Debug, Clone, Copy)]
struct InstanceCheck {
    lambda: f64,
    residual: f64,
    /// Smallest signed distance to a violated bound; negative on violation.
    slack: f64,
    residual_ok: bool,
}

impl InstanceCheck {
    fn ok(&self) -> bool {
        self.slack >= 0.0 && self.residual_ok
    }
}

/// `λ₁` against `[n−k+1, n−1)` and the residual budget, plus `extra_lower`.
fn check_instance(g: &SignedCompleteGraph, k: usize, extra_lower: Option<usize>) -> InstanceCheck {
    let n = g.order();
    let (lambda, x) = spectra::index_reduced(g, DEFAULT_TOL).expect("Jacobi converges");
    let residual = spectra::signed_residual(g, lambda, &x);
    let lower = spectra::index_lower_bound(n, k) as f64;
    let upper = spectra::index_upper_bound(n) as f64;
    let mut slack = (lambda - lower + BOUND_TOL).min(upper - STRICT_UPPER_TOL - lambda);
    if let Some(b) = extra_lower {
        slack = slack.min(lambda - b as f64 + BOUND_TOL);
    }
    InstanceCheck {
        lambda,
        residual,
        slack,
        residual_ok: residual <= RESIDUAL_PER_VERTEX * n as f64,
    }
}

fn instance_status(c: InstanceCheck, n: usize, k: usize) -> Status {
    if c.ok() {
        Status::NumericPass { margin: c.slack }
    } else {
        Status::Fail {
            witness: json!({
                "lambda1": sig15(c.lambda),
                "residual": c.residual,
                "lower": spectra::index_lower_bound(n, k),
                "upper": spectra::index_upper_bound(n),
            }),
        }
    }
}

/// Bounds on the family instances of each pair and, for `k` up to
/// `max_enumerated_k`, on every bicyclic negative part with `k` edges.
pub fn verify_bounds(pairs: &[(usize, usize)], max_enumerated_k: usize) -> VerificationReport {
    let start = Instant::now();
    let mut notes = vec![format!(
        "λ₁ ∈ [n−k+1 − {BOUND_TOL:e}, n−1 − {STRICT_UPPER_TOL:e}], residual ≤ {RESIDUAL_PER_VERTEX:e}·n; \
         θ₁ also ≥ n−4, θ₁(0,k−6) also ≥ n−3; enumeration included for k ≤ {max_enumerated_k}"
    )];
    let (pairs, skip): (Vec<_>, Vec<_>) = pairs.iter().partition(|&&(n, k)| n >= k && k >= 5);
    if !skip.is_empty() {
        notes.push(format!("skipped pairs outside n ≥ k ≥ 5: {skip:?}"));
    }
    let points = per_pair(&pairs, |n, k| {
        let mut out = Vec::new();
        if k >= 6 {
            for s in 0..=k - 6 {
                let g = families::theta1(n, s, k - 6 - s).expect("admissible");
                let extra = if s == 0 { n - 3 } else { n - 4 };
                let c = check_instance(&g, k, Some(extra));
                out.push(Point::new("theta1_bounds", Params::nks(n, k, s), instance_status(c, n, k)));
            }
        }
        let g = families::theta2(n, k).expect("admissible");
        let c = check_instance(&g, k, None);
        out.push(Point::new("theta2_bounds", Params::nk(n, k), instance_status(c, n, k)));
        if k <= max_enumerated_k {
            let certs = enumerate::bicyclic_certificates(k - 1).expect("k ≥ 5");
            let checks: Vec<(String, InstanceCheck)> = certs
                .into_par_iter()
                .map(|cert| {
                    let b = crate::graph::SimpleGraph::from_graph6(&cert).expect("valid graph6");
                    let g = enumerate::embed(&b, n).expect("n ≥ k − 1");
                    let c = check_instance(&g, k, None);
                    (cert, c)
                })
                .collect();
            out.extend(aggregate_point("enumerated_bounds", Params::nk(n, k), &checks, n, k));
        }
        out
    });
    VerificationReport::build("bounds", Grid::new(&pairs), points, notes, start)
}

fn aggregate_point(
    check: &str,
    params: Params,
    checks: &[(String, InstanceCheck)],
    n: usize,
    k: usize,
) -> Vec<Point> {
    let min = checks
        .iter()
        .map(|(_, c)| c.slack)
        .fold(f64::INFINITY, f64::min);
    let max_residual = checks.iter().map(|(_, c)| c.residual).fold(0.0, f64::max);
    let failing: Vec<_> = checks
        .iter()
        .filter(|(_, c)| !c.ok())
        .take(TOP)
        .map(|(cert, c)| json!({ "certificate": cert, "lambda1": sig15(c.lambda), "residual": c.residual }))
        .collect();
    let status = if failing.is_empty() {
        Status::NumericPass { margin: min }
    } else {
        Status::Fail {
            witness: json!({
                "instances": checks.len(),
                "violations": checks.iter().filter(|(_, c)| !c.ok()).count(),
                "first": failing,
                "lower": spectra::index_lower_bound(n, k),
                "upper": spectra::index_upper_bound(n),
                "max_residual": max_residual,
            }),
        }
    };
    let summary = Status::Informational {
        data: json!({
            "instances": checks.len(),
            "max_residual": max_residual,
            "residual_budget": RESIDUAL_PER_VERTEX * n as f64,
        }),
    };
    vec![
        Point::new(check, params.clone(), status),
        Point::new(&format!("{check}_residuals"), params, summary),
    ]
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankRow {
    pub rank: usize,
    pub certificate: String,
    #[serde(rename = "lambda1", serialize_with = "crate::report::ser_sig15")]
    pub lambda1: f64,
    #[serde(serialize_with = "crate::report::ser_sig15")]
    pub margin_to_winner: f64,
}

#[derive(Debug, Clone)]
pub struct TheoremRun {
    pub report: VerificationReport,
    /// Every class, best first.
    pub ranking: Vec<RankRow>,
}

impl TheoremRun {
    pub fn winner(&self) -> &RankRow {
        &self.ranking[0]
    }
}

/// Every connected bicyclic negative part with `k` edges, embedded in `K_n`
/// and ranked by index. Classes within [`COMPARE_MARGIN`] of the top are
/// ordered exactly by the largest roots of their collapsed quotient
/// polynomials. Inside the theorem region the unique winner must be
/// θ₂(0,k−5); elsewhere the ranking is reported without assertion.
pub fn verify_theorem(n: usize, k: usize) -> TheoremRun {
    let start = Instant::now();
    assert!(k >= 5 && n >= k, "verify_theorem needs n ≥ k ≥ 5");
    let asserting = THEOREM_REGION.contains(n, k);
    let mut notes = vec![if asserting {
        format!("assertion mode: (n, k) = ({n}, {k}) lies in k ≥ 15, n ≥ k + 20")
    } else {
        format!("informational mode: (n, k) = ({n}, {k}) lies outside k ≥ 15, n ≥ k + 20")
    }];
    let certs = enumerate::bicyclic_certificates(k - 1).expect("k ≥ 5");
    let mut checks: Vec<(String, InstanceCheck)> = certs
        .into_par_iter()
        .map(|cert| {
            let b = crate::graph::SimpleGraph::from_graph6(&cert).expect("valid graph6");
            let g = enumerate::embed(&b, n).expect("n ≥ k − 1");
            let c = check_instance(&g, k, None);
            (cert, c)
        })
        .collect();
    let mut points = aggregate_point("bounds", Params::nk(n, k), &checks, n, k);

    checks.par_sort_by(|a, b| b.1.lambda.total_cmp(&a.1.lambda).then_with(|| a.0.cmp(&b.0)));
    let top = checks[0].1.lambda;
    let near = checks
        .iter()
        .take_while(|(_, c)| top - c.lambda < COMPARE_MARGIN)
        .count();
    let mut exact_ties = false;
    if near > 1 {
        let polys: Vec<_> = checks[..near]
            .iter()
            .map(|(cert, _)| {
                let b = crate::graph::SimpleGraph::from_graph6(cert).expect("valid graph6");
                collapsed_char_poly(&enumerate::embed(&b, n).expect("n ≥ k − 1"))
            })
            .collect();
        let mut order: Vec<usize> = (0..near).collect();
        let cmp = |a: usize, b: usize| {
            let (ord, _, _) = compare_max_roots(&polys[a], &polys[b], &eps_pow10(12), &eps_pow10(30))
                .expect("real roots");
            ord
        };
        order.sort_by(|&a, &b| {
            cmp(b, a)
                .unwrap_or(Ordering::Equal)
                .then_with(|| checks[a].0.cmp(&checks[b].0))
        });
        exact_ties = cmp(order[0], order[1]) != Some(Ordering::Greater);
        let head: Vec<_> = order.iter().map(|&i| checks[i].clone()).collect();
        checks.splice(..near, head);
        notes.push(format!(
            "{near} classes within {COMPARE_MARGIN:e} of the top were ordered exactly"
        ));
    }
    let winner = checks[0].1.lambda;
    let ranking: Vec<RankRow> = checks
        .iter()
        .enumerate()
        .map(|(i, (cert, c))| RankRow {
            rank: i + 1,
            certificate: cert.clone(),
            lambda1: c.lambda,
            margin_to_winner: winner - c.lambda,
        })
        .collect();

    let theta2 = certificate(&families::theta2_negative_part(k));
    let theta2_rank = ranking
        .iter()
        .find(|r| r.certificate == theta2)
        .map(|r| r.rank);
    let runner_up_margin = ranking.get(1).map(|r| r.margin_to_winner);
    let summary = json!({
        "classes": ranking.len(),
        "winner": ranking[0].certificate,
        "winner_lambda1": sig15(winner),
        "theta2_certificate": theta2,
        "theta2_rank": theta2_rank,
        "theta2_wins": ranking[0].certificate == theta2 && !exact_ties,
        "runner_up_margin": runner_up_margin.map(sig15),
        "exact_tie_at_top": exact_ties,
        "top": &ranking[..ranking.len().min(TOP)],
    });
    let params = Params::nk(n, k);
    points.push(Point::new(
        "ranking",
        params.clone(),
        Status::Informational {
            data: summary.clone(),
        },
    ));
    if asserting {
        let status = if ranking[0].certificate == theta2 && !exact_ties {
            Status::NumericPass {
                margin: runner_up_margin.unwrap_or(f64::INFINITY),
            }
        } else {
            Status::Fail { witness: summary }
        };
        points.push(Point::new("argmax", params, status));
    }
    let report = VerificationReport::build("theorem", Grid::new(&[(n, k)]), points, notes, start);
    TheoremRun { report, ranking }
}
