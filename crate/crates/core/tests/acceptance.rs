//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! gating criterion fails.

mod common;

use std::collections::{BTreeMap, HashSet};
use std::process::ExitCode;
use std::time::Instant;

use common::{for_each_labeled, interlacing_trials, perturbation_trials};
use theta_spectra::enumerate::{bicyclic_certificates, certificate};
use theta_spectra::families::{theta1, theta2, theta2_negative_part};
use theta_spectra::graph::SignedCompleteGraph;
use theta_spectra::spectra::{index, spectrum, DEFAULT_TOL};
use theta_spectra::verify::{
    verify_appendix_identities, verify_appendix_signs, verify_bounds, verify_factorizations, verify_ordering_lemma,
    verify_theorem, verify_theta2_dominates, Point, Status, TheoremRun, VerificationReport,
};

const RESIDUAL_PER_VERTEX: f64 = 1e-10;
const INTERLACE_TRIALS: usize = 500;
const PERTURB_TRIALS: usize = 1000;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn exact_grid() -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for n in (12..=36).step_by(4) {
        for k in 8..=14 {
            if n >= k {
                out.push((n, k));
            }
        }
    }
    out
}

fn prefixed<'a>(r: &'a VerificationReport, prefix: &'a str) -> impl Iterator<Item = &'a Point> + 'a {
    r.points.iter().filter(move |p| p.check.starts_with(prefix))
}

fn tally<'a>(points: impl Iterator<Item = &'a Point>) -> (usize, usize, usize) {
    let (mut exact, mut numeric, mut fail) = (0, 0, 0);
    for p in points {
        match p.status {
            Status::ExactPass => exact += 1,
            Status::NumericPass { .. } => numeric += 1,
            Status::Fail { .. } => fail += 1,
            Status::Informational { .. } => {}
        }
    }
    (exact, numeric, fail)
}

fn failing_checks(r: &VerificationReport) -> BTreeMap<&str, usize> {
    let mut out = BTreeMap::new();
    for p in r.failures() {
        *out.entry(p.check.as_str()).or_insert(0) += 1;
    }
    out
}

fn min_margin<'a>(points: impl Iterator<Item = &'a Point>) -> f64 {
    points
        .filter_map(|p| match p.status {
            Status::NumericPass { margin } => Some(margin),
            _ => None,
        })
        .fold(f64::INFINITY, f64::min)
}

fn exact_family(r: &VerificationReport, family: &str, expected: usize) -> Outcome {
    let (exact, numeric, fail) = tally(prefixed(r, family));
    let count = r.check(&format!("{family}_factorization")).count();
    outcome(
        fail == 0 && numeric == 0 && count == expected,
        format!("{count} factorizations over {} (n,k) pairs, {exact} exact checks, {fail} failed", r.grid.pairs.len()),
    )
}

fn c3_identities(grid: &[(usize, usize)]) -> Outcome {
    let r = verify_appendix_identities(grid);
    let (exact, _, fail) = tally(r.points.iter());
    let mut detail = format!("{exact} exact, {fail} failed");
    if fail > 0 {
        detail.push_str(&format!(" {:?}", failing_checks(&r)));
        if let Some(p) = r.check("difference_s").find(|p| p.status.is_fail()) {
            if let Status::Fail { witness } = &p.status {
                detail.push_str(&format!("; first witness {} delta {}", json(&p.params), witness["delta"]));
            }
        }
    }
    outcome(fail == 0, detail)
}

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).unwrap()
}

fn region_pairs(offsets: &[usize]) -> Vec<(usize, usize)> {
    (15..=18)
        .flat_map(|k| offsets.iter().map(move |&o| (k + o, k)))
        .collect()
}

fn c4_signs() -> Outcome {
    let r = verify_appendix_signs(&region_pairs(&[20, 25]));
    let (exact, _, fail) = tally(r.points.iter());
    let mut detail = format!("{exact} exact sign checks over {} pairs, {fail} failed", r.grid.pairs.len());
    if fail > 0 {
        detail.push_str(&format!(" {:?}", failing_checks(&r)));
    }
    outcome(fail == 0 && exact > 0, detail)
}

fn c5_dominance() -> Outcome {
    let r = verify_theta2_dominates(&region_pairs(&[20]));
    let gating: Vec<&Point> = r.points.iter().filter(|p| !matches!(p.status, Status::Informational { .. })).collect();
    let (_, _, fail) = tally(gating.iter().copied());
    outcome(
        fail == 0 && gating.len() == 8,
        format!("{} gating points, {fail} failed, min gap {:.3e}", gating.len(), min_margin(gating.into_iter())),
    )
}

fn c6_ordering() -> Outcome {
    let r = verify_ordering_lemma(&[(35, 15), (36, 16)]);
    let pts: Vec<&Point> = r.check("ordering_extreme").collect();
    let (_, _, fail) = tally(pts.iter().copied());
    let margin = min_margin(pts.iter().copied());
    outcome(
        fail == 0 && pts.len() == 2 && margin > 1e-9,
        format!("{} pairs, {fail} failed, min margin {margin:.3e}", pts.len()),
    )
}

fn winner_summary(run: &TheoremRun, n: usize, k: usize) -> String {
    let want = certificate(&theta2_negative_part(k));
    let rank = run.ranking.iter().find(|r| r.certificate == want).map(|r| r.rank);
    let gap = run.ranking.get(1).map_or(f64::NAN, |r| r.margin_to_winner);
    format!(
        "({n},{k}): {} classes, winner {} λ₁={:.13}, θ₂ rank {:?}, runner-up gap {gap:.3e}",
        run.ranking.len(),
        run.winner().certificate,
        run.winner().lambda1,
        rank
    )
}

fn c7_theorem() -> (Outcome, TheoremRun) {
    let run = verify_theorem(35, 15);
    let want = certificate(&theta2_negative_part(15));
    let argmax_ok = run.report.check("argmax").any(|p| matches!(p.status, Status::NumericPass { .. }));
    let pass = run.report.passed() && argmax_ok && run.winner().certificate == want;
    let mut detail = winner_summary(&run, 35, 15);
    for (n, k) in [(28, 8), (29, 9), (30, 10)] {
        let companion = verify_theorem(n, k);
        detail.push_str(&format!("\n          informational {}", winner_summary(&companion, n, k)));
    }
    (outcome(pass, detail), run)
}

fn c8_enumeration() -> Outcome {
    let mut sizes = Vec::new();
    let mut pass = true;
    for v in 4..=7 {
        let mut brute = HashSet::new();
        for_each_labeled(v, v + 1, |g| {
            brute.insert(certificate(&g));
        });
        let ours: Vec<String> = bicyclic_certificates(v).unwrap();
        let set: HashSet<String> = ours.iter().cloned().collect();
        pass &= set.len() == ours.len() && set == brute;
        sizes.push(format!("v={v}: {}/{}", ours.len(), brute.len()));
    }
    outcome(pass, sizes.join(", "))
}

fn c9_perturbation() -> Outcome {
    let st = perturbation_trials(2024, PERTURB_TRIALS, 1e-9);
    outcome(
        st.violations == 0 && st.trials == PERTURB_TRIALS,
        format!(
            "{} weak-hypothesis trials, {} violations, worst change {:.3e}; strict {} of {} increased ({} degenerate excluded)",
            st.trials, st.violations, st.worst_margin, st.strict_increased, st.strict, st.degenerate
        ),
    )
}

fn family_instances(grid: &[(usize, usize)]) -> Vec<SignedCompleteGraph> {
    let mut out = Vec::new();
    for &(n, k) in grid {
        for s in 0..=k - 6 {
            out.push(theta1(n, s, k - 6 - s).unwrap());
        }
        out.push(theta2(n, k).unwrap());
    }
    out
}

fn c10_solver(grid: &[(usize, usize)], theorem: &TheoremRun) -> Outcome {
    let mut worst = 0.0f64;
    let instances = family_instances(grid);
    for g in &instances {
        let r = spectrum(g, DEFAULT_TOL).unwrap();
        worst = worst.max(r.residual / g.order() as f64);
    }
    let enumerated = theorem
        .report
        .check("bounds_residuals")
        .filter_map(|p| match &p.status {
            Status::Informational { data } => data["max_residual"].as_f64(),
            _ => None,
        })
        .fold(0.0, f64::max)
        / 35.0;
    worst = worst.max(enumerated);
    let bad_interlace = interlacing_trials(99, INTERLACE_TRIALS);
    let complete_ok = (2..=40).all(|n| {
        let (l, _) = index(&SignedCompleteGraph::all_positive(n).unwrap(), DEFAULT_TOL).unwrap();
        (l - (n as f64 - 1.0)).abs() <= 1e-10
    });
    outcome(
        worst <= RESIDUAL_PER_VERTEX && bad_interlace.is_empty() && complete_ok,
        format!(
            "max residual/n {worst:.3e} over {} family and {} enumerated instances; {} interlacing violations in {INTERLACE_TRIALS}; K_n index {}",
            instances.len(),
            theorem.ranking.len(),
            bad_interlace.len(),
            if complete_ok { "exact for n=2..40" } else { "off" }
        ),
    )
}

fn c11_bounds(grid: &[(usize, usize)], theorem: &TheoremRun) -> Outcome {
    let r = verify_bounds(grid, 0);
    let theorem_bounds: Vec<&Point> = theorem.report.check("bounds").collect();
    let (_, numeric, fail) = tally(r.points.iter().chain(theorem_bounds.iter().copied()));
    let margin = min_margin(r.points.iter().chain(theorem_bounds.iter().copied()));
    outcome(
        fail == 0 && theorem_bounds.len() == 1,
        format!(
            "{numeric} bound checks ({} enumerated classes at (35,15) in one), {fail} failed, min slack {margin:.3e}",
            theorem.ranking.len()
        ),
    )
}

fn main() -> ExitCode {
    let grid = exact_grid();
    let mut all = true;
    let mut report = |id: usize, name: &str, f: &mut dyn FnMut() -> Outcome| {
        let t = Instant::now();
        let o = f();
        all &= o.pass;
        println!(
            "{} {id:>2} {name}: {} [{:.1}s]",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail,
            t.elapsed().as_secs_f64()
        );
    };

    let t = Instant::now();
    let fact = verify_factorizations(&grid);
    let secs = t.elapsed().as_secs_f64();
    let theta1_count: usize = grid.iter().map(|&(_, k)| k - 5).sum();
    report(1, "theta1 factorization", &mut || {
        let mut o = exact_family(&fact, "theta1", theta1_count);
        o.detail.push_str(&format!(" (suite {secs:.1}s)"));
        o
    });
    report(2, "theta2 factorization", &mut || exact_family(&fact, "theta2", grid.len()));
    report(3, "appendix identities", &mut || c3_identities(&grid));
    report(4, "appendix signs", &mut c4_signs);
    report(5, "theta2 dominance", &mut c5_dominance);
    report(6, "ordering lemma", &mut c6_ordering);
    let mut theorem = None;
    report(7, "theorem (35,15)", &mut || {
        let (o, run) = c7_theorem();
        theorem = Some(run);
        o
    });
    let theorem = theorem.expect("criterion 7 ran");
    report(8, "enumeration oracle", &mut c8_enumeration);
    report(9, "perturbation", &mut c9_perturbation);
    report(10, "eigensolver", &mut || c10_solver(&grid, &theorem));
    report(11, "bounds", &mut || c11_bounds(&grid, &theorem));

    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
