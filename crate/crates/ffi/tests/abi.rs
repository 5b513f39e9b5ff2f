use std::ffi::{CStr, CString};
use std::ptr;

use theta_spectra_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(ts_last_error()) }.to_string_lossy().into_owned()
}

fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned();
    unsafe { ts_string_free(p) };
    s
}

#[test]
fn theta2_index_and_size() {
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { ts_theta2_new(12, 8, &mut g) }, TsStatus::Ok);
    let (mut n, mut k) = (0usize, 0usize);
    assert_eq!(unsafe { ts_graph_size(g, &mut n, &mut k) }, TsStatus::Ok);
    assert_eq!((n, k), (12, 8));
    let mut lambda = 0.0;
    let mut x = vec![0.0; n];
    assert_eq!(unsafe { ts_graph_index(g, &mut lambda, x.as_mut_ptr()) }, TsStatus::Ok);
    // largest root of λ⁵ − 7λ⁴ − 38λ³ + 130λ² + 181λ − 459
    let p = |l: f64| ((((l - 7.0) * l - 38.0) * l + 130.0) * l + 181.0) * l - 459.0;
    assert!(p(lambda).abs() < 1e-6, "{lambda}");
    let norm: f64 = x.iter().map(|v| v * v).sum();
    assert!((norm - 1.0).abs() < 1e-12);
    unsafe { ts_graph_free(g) };
}

#[test]
fn graph6_round_trip_and_char_poly() {
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { ts_theta1_new(12, 1, 1, &mut g) }, TsStatus::Ok);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { ts_graph_negative_graph6(g, &mut s) }, TsStatus::Ok);
    let code = take_string(s);
    let c = CString::new(code.clone()).unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { ts_graph_from_graph6(c.as_ptr(), 0, &mut h) }, TsStatus::Ok);
    let mut a = ptr::null_mut();
    let mut b = ptr::null_mut();
    assert_eq!(unsafe { ts_graph_char_poly_json(g, &mut a) }, TsStatus::Ok);
    assert_eq!(unsafe { ts_graph_char_poly_json(h, &mut b) }, TsStatus::Ok);
    let (a, b) = (take_string(a), take_string(b));
    assert_eq!(a, b);
    let coeffs: Vec<String> = serde_json::from_str(&a).unwrap();
    assert_eq!(coeffs.len(), 13);
    assert_eq!(coeffs[12], "1");
    unsafe {
        ts_graph_free(g);
        ts_graph_free(h);
    }
}

#[test]
fn errors_are_reported() {
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { ts_theta2_new(6, 8, &mut g) }, TsStatus::InvalidArgument);
    assert!(g.is_null());
    assert!(last_error().contains("k = 8"));
    assert_eq!(unsafe { ts_theta2_new(12, 8, ptr::null_mut()) }, TsStatus::NullPointer);
    let bad = CString::new("!!").unwrap();
    assert_eq!(
        unsafe { ts_graph_from_graph6(bad.as_ptr(), 0, &mut g) },
        TsStatus::InvalidArgument
    );
    assert_eq!(
        unsafe { ts_graph_from_graph6(ptr::null(), 0, &mut g) },
        TsStatus::NullPointer
    );
    let mut l = 0.0;
    assert_eq!(unsafe { ts_graph_index(ptr::null(), &mut l, ptr::null_mut()) }, TsStatus::NullPointer);
    assert_eq!(unsafe { ts_theta2_new(12, 8, &mut g) }, TsStatus::Ok);
    assert_eq!(last_error(), "");
    unsafe {
        ts_graph_free(g);
        ts_graph_free(ptr::null_mut());
        ts_string_free(ptr::null_mut());
    }
}

#[test]
fn version_matches_crate() {
    let v = unsafe { CStr::from_ptr(ts_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_every_export() {
    let header = include_str!("../include/theta_spectra.h");
    for name in [
        "ts_theta1_new",
        "ts_theta2_new",
        "ts_graph_from_graph6",
        "ts_graph_free",
        "ts_graph_size",
        "ts_graph_index",
        "ts_graph_negative_graph6",
        "ts_graph_char_poly_json",
        "ts_last_error",
        "ts_string_free",
        "ts_version",
        "typedef struct TsSignedGraph TsSignedGraph",
        "TS_STATUS_INVALID_ARGUMENT = 2",
    ] {
        assert!(header.contains(name), "{name}");
    }
}
