use theta_spectra::exactpoly::IntPoly;
use theta_spectra::families::{f_poly, p_poly};
use theta_spectra::verify::{
    verify_appendix_identities, verify_appendix_signs, verify_bounds, verify_factorizations,
    verify_factorizations_with, verify_ordering_lemma, verify_theorem, verify_theta2_dominates, Status,
};

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).unwrap()
}

#[test]
fn factorizations_small_grid() {
    let r = verify_factorizations(&[(12, 8), (16, 9), (20, 10)]);
    assert!(r.passed());
    assert_eq!(r.totals.fail, 0);
    assert!(r.points.iter().all(|p| matches!(p.status, Status::ExactPass)));
    // s = 0..k−6 per pair
    assert_eq!(r.check("theta1_factorization").count(), 3 + 4 + 5);
    assert_eq!(r.check("theta2_factorization").count(), 3);
}

#[test]
fn corrupted_closed_form_is_caught() {
    let r = verify_factorizations_with(
        &[(16, 9)],
        |n, k, s| &f_poly(n, k, s).unwrap() + &IntPoly::from_i64s(&[0, 0, 1]),
        |n, k| p_poly(n, k).unwrap(),
    );
    assert!(!r.passed());
    let bad: Vec<_> = r.failures().map(|p| p.check.as_str()).collect();
    assert!(bad.contains(&"theta1_factorization"));
    assert!(!bad.contains(&"theta2_factorization"));
}

#[test]
fn inadmissible_pairs_are_skipped_with_a_note() {
    let r = verify_factorizations(&[(7, 8), (12, 8)]);
    assert_eq!(r.grid.pairs, vec![[12, 8]]);
    assert!(!r.notes.is_empty());
}

#[test]
fn identities_pass_except_the_s_pair() {
    let r = verify_appendix_identities(&[(12, 8), (20, 10)]);
    let failing: std::collections::BTreeSet<_> = r.failures().map(|p| p.check.as_str()).collect();
    assert_eq!(failing.into_iter().collect::<Vec<_>>(), vec!["difference_S", "difference_s"]);
    for name in ["difference_p", "split_p", "split_s", "split_S"] {
        assert!(r.check(name).all(|p| p.status == Status::ExactPass), "{name}");
    }
    let w = r.check("difference_s").find(|p| p.params.n == Some(12)).unwrap();
    let Status::Fail { witness } = &w.status else { panic!() };
    assert_eq!(witness["delta"], "-3840");
}

#[test]
fn signs_at_one_pair() {
    let r = verify_appendix_signs(&[(35, 15)]);
    assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
    assert!(r.check("S_derived_at_index").count() > 0);
}

#[test]
fn dominance_and_ordering() {
    let d = verify_theta2_dominates(&[(35, 15), (20, 10)]);
    assert!(d.passed());
    assert!(d
        .check("dominance_s0")
        .any(|p| p.params.n == Some(35) && matches!(p.status, Status::ExactPass | Status::NumericPass { .. })));
    assert!(d
        .check("dominance_s0")
        .any(|p| p.params.n == Some(20) && matches!(p.status, Status::Informational { .. })));
    let o = verify_ordering_lemma(&[(35, 15)]);
    assert!(o.passed());
    assert!(o.check("ordering_extreme").count() > 0);
}

#[test]
fn bounds_including_enumerated() {
    let r = verify_bounds(&[(20, 8)], 8);
    assert!(r.passed());
    assert!(r.check("enumerated_bounds").count() > 0);
    assert!(r.check("enumerated_bounds_residuals").count() > 0);
}

#[test]
fn theorem_outside_region_is_informational() {
    let run = verify_theorem(28, 8);
    assert_eq!(run.ranking.len(), 67);
    assert!(run.report.passed());
    assert_eq!(run.winner().certificate, run.ranking[0].certificate);
    for w in run.ranking.windows(2) {
        assert!(w[0].lambda1 >= w[1].lambda1 - 1e-8);
    }
    assert_eq!(run.report.check("argmax").count(), 0);
    let ranking = run.report.check("ranking").next().unwrap();
    let Status::Informational { data } = &ranking.status else { panic!() };
    assert_eq!(data["classes"], 67);
    assert_eq!(data["theta2_wins"], true);
}

#[test]
fn reports_are_deterministic() {
    let a = verify_appendix_identities(&[(12, 8), (16, 9)]).without_timing();
    let b = verify_appendix_identities(&[(12, 8), (16, 9)]).without_timing();
    assert_eq!(json(&a), json(&b));
    let a = verify_theorem(26, 7).report.without_timing();
    let b = verify_theorem(26, 7).report.without_timing();
    assert_eq!(json(&a), json(&b));
}
