use num_bigint::BigInt;
use theta_spectra::enumerate::certificate;
use theta_spectra::exactpoly::IntPoly;
use theta_spectra::families::{
    appendix, derived_s, derived_s_cap, f_poly, p_poly, quotient_theta1_matrix, quotient_theta2_matrix, theta1,
    theta1_negative_part, theta2, theta2_negative_part, theta_hat, Family, FamilyError,
};

fn plus_one(e: usize) -> IntPoly {
    IntPoly::linear(1).pow(e as i64).unwrap()
}

fn row(m: &theta_spectra::exactpoly::IntMatrix, i: usize) -> Vec<i64> {
    m.row(i).iter().map(|v| i64::try_from(v).unwrap()).collect()
}

#[test]
fn theta_hat_shapes() {
    let t = theta_hat(1, 2, 2).unwrap();
    assert_eq!((t.vertex_count(), t.edge_count()), (4, 5));
    let t = theta_hat(2, 2, 2).unwrap();
    assert_eq!((t.vertex_count(), t.edge_count()), (5, 6));
    let hubs: Vec<usize> = (0..5).filter(|&v| t.degree(v).unwrap() == 3).collect();
    assert_eq!(hubs.len(), 2);
    assert!(matches!(theta_hat(1, 1, 3), Err(FamilyError::ThetaHat { .. })));
    assert!(matches!(theta_hat(2, 1, 3), Err(FamilyError::ThetaHat { .. })));
}

#[test]
fn theta1_structure() {
    let g = theta1(12, 0, 0).unwrap();
    assert_eq!(g.negative_edge_count(), 6);
    assert_eq!(certificate(&g.negative_part()), certificate(&theta_hat(2, 2, 2).unwrap()));
    let b = theta1(30, 4, 0).unwrap().negative_part();
    assert_eq!(b.edge_count(), 10);
    assert_eq!(certificate(&b.base().unwrap().without_isolated()), certificate(&theta_hat(2, 2, 2).unwrap()));
    // u₁ = 3 carries all four pendants
    let pendants = b.pendant_vertices();
    assert_eq!(pendants.len(), 4);
    assert!(pendants.iter().all(|&p| b.neighbors(p) == [3]));
    assert_eq!(b.degree(3).unwrap(), 6);
    assert!(theta1(10, 3, 2).is_err());
}

#[test]
fn theta2_structure() {
    assert_eq!(theta2_negative_part(5), theta_hat(1, 2, 2).unwrap());
    let b = theta2(35, 15).unwrap().negative_part();
    assert_eq!(b.vertex_count(), 14);
    assert_eq!(b.vertex_count(), 4 + (15 - 5));
    assert!(b.pendant_vertices().iter().all(|&p| b.neighbors(p) == [1]));
    assert_eq!(
        certificate(&b.base().unwrap().without_isolated()),
        certificate(&theta_hat(1, 2, 2).unwrap())
    );
    assert!(matches!(theta2(10, 4), Err(FamilyError::Theta2 { .. })));
    assert!(matches!(theta2(7, 8), Err(FamilyError::Theta2 { .. })));
}

#[test]
fn f_and_p_shapes() {
    let f = f_poly(12, 8, 1).unwrap();
    assert_eq!(f.degree(), Some(7));
    assert!(f.is_monic());
    assert_eq!(f.coeff(6), BigInt::from(7 - 12));
    let p = p_poly(12, 8).unwrap();
    assert_eq!(p.degree(), Some(5));
    assert_eq!(p.coeff(4), BigInt::from(5 - 12));
    assert!(matches!(f_poly(12, 8, 3), Err(FamilyError::SplitOutOfRange { .. })));
}

#[test]
fn f_and_p_against_full_char_polys() {
    let full = theta1(12, 1, 1).unwrap().adjacency_matrix().char_poly_exact();
    let f = f_poly(12, 8, 1).unwrap();
    assert_eq!(full.divide_exact(&plus_one(5)).unwrap(), f);
    assert_eq!(quotient_theta1_matrix(12, 1, 1).unwrap().char_poly_exact(), f);
    let full = theta2(12, 8).unwrap().adjacency_matrix().char_poly_exact();
    let p = p_poly(12, 8).unwrap();
    assert_eq!(full.divide_exact(&plus_one(7)).unwrap(), p);
    assert_eq!(quotient_theta2_matrix(12, 8).unwrap().char_poly_exact(), p);
}

#[test]
fn boundary_factorizations() {
    for (n, s, t) in [(12, 0, 2), (12, 2, 0), (9, 0, 0), (20, 0, 5), (20, 5, 0)] {
        let full = theta1(n, s, t).unwrap().adjacency_matrix().char_poly_exact();
        assert_eq!(full, &plus_one(n - 7) * &f_poly(n, s + t + 6, s).unwrap(), "({n},{s},{t})");
    }
}

#[test]
fn printed_rows() {
    let (n, s, t) = (20, 3, 2);
    let u = n - (s + t + 6) + 1;
    let m = quotient_theta1_matrix(n, s, t).unwrap();
    assert_eq!(row(&m, 0), vec![0, -1, 1, -2, t as i64, s as i64, u as i64]);
    let m = quotient_theta2_matrix(20, 11).unwrap();
    assert_eq!(row(&m, 3), vec![1, -1, 2, 11 - 6, 20 - 11 + 1]);
}

#[test]
fn appendix_splits() {
    for s in 0..6 {
        for t in 0..6 {
            for u in 1..30 {
                let p = appendix::p(s, t, u);
                assert_eq!(&appendix::p1(s, t, u) + &appendix::p2(s, t, u), p);
                assert_eq!(&appendix::p1_cap(s, t, u) + &appendix::p2_cap(s, t, u), p);
            }
        }
    }
    for k in 6..20 {
        for n in k..k + 30 {
            assert_eq!(&appendix::s1(n, k) + &appendix::s2(n, k), appendix::s(n, k));
            assert_eq!(&appendix::s1_cap(n, k) + &appendix::s2_cap(n, k), appendix::s_cap(n, k));
        }
    }
    assert_eq!(appendix::p(2, 0, 7).coeff(4), BigInt::from(0));
}

#[test]
fn first_difference_identity() {
    // (n, k) = (20, 9): θ₁(1, 2) − θ₁(2, 1)
    let a = theta1(20, 1, 2).unwrap().adjacency_matrix().char_poly_exact();
    let b = theta1(20, 2, 1).unwrap().adjacency_matrix().char_poly_exact();
    let rhs = &plus_one(13) * &appendix::p(2, 1, 12).scale_i64(8);
    assert_eq!(&a - &b, rhs);
}

#[test]
fn recomputed_s_and_s_cap_differ_from_the_printed_ones() {
    for (n, k) in [(12, 8), (20, 10), (35, 15)] {
        let (ni, ki) = (n as i128, k as i128);
        let ds = &derived_s(n, k).unwrap() - &appendix::s(ni, ki);
        assert_eq!(ds, IntPoly::from_i64s(&[40 * n as i64]));
        let c = -ki * ki + ki * ni + 8 * ki - 10 * ni + 11;
        let dcap = &derived_s_cap(n, k).unwrap() - &appendix::s_cap(ni, ki);
        assert_eq!(dcap, IntPoly::from_i64s(&[20 * n as i64, 0, -(c as i64)]));
    }
}

#[test]
fn family_labels_and_json() {
    let f = Family::theta1(12, 1, 1).unwrap();
    assert_eq!((f.k(), f.u(), f.plus_one_power()), (8, 5, 5));
    assert_eq!(serde_json::to_string(&f).unwrap(), r#"{"family":"theta1","n":12,"s":1,"t":1}"#);
    assert_eq!(Family::theta2(12, 8).unwrap().negative_part(), theta2_negative_part(8));
    assert_eq!(Family::theta1(12, 1, 1).unwrap().negative_part(), theta1_negative_part(1, 1));
}
