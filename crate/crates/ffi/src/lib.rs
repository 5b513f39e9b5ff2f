//! C ABI over the signed-graph core.
//!
//! Graphs are opaque `TsSignedGraph` handles created by the constructors and
//! released with `ts_graph_free`. Every fallible call returns a `TsStatus`;
//! on failure `ts_last_error` describes the error for the calling thread.
//! Strings returned through out-parameters belong to the caller and are
//! released with `ts_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use theta_spectra::families::Family;
use theta_spectra::graph::{SignedCompleteGraph, SimpleGraph};
use theta_spectra::spectra::{self, DEFAULT_TOL};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidUtf8 = 3,
    NumericFailure = 4,
    Panic = 5,
}

/// Opaque signed complete graph.
pub struct TsSignedGraph {
    inner: SignedCompleteGraph,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn guard(f: impl FnOnce() -> Result<(), (TsStatus, String)>) -> TsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            TsStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            TsStatus::Panic
        }
    }
}

fn null() -> (TsStatus, String) {
    (TsStatus::NullPointer, "null pointer argument".to_owned())
}

fn invalid(e: impl ToString) -> (TsStatus, String) {
    (TsStatus::InvalidArgument, e.to_string())
}

unsafe fn graph_ref<'a>(g: *const TsSignedGraph) -> Result<&'a SignedCompleteGraph, (TsStatus, String)> {
    // SAFETY: the caller passes a live handle or null
    unsafe { g.as_ref() }.map(|h| &h.inner).ok_or_else(null)
}

unsafe fn put_graph(out: *mut *mut TsSignedGraph, g: SignedCompleteGraph) -> Result<(), (TsStatus, String)> {
    if out.is_null() {
        return Err(null());
    }
    let handle = Box::into_raw(Box::new(TsSignedGraph { inner: g }));
    // SAFETY: checked non-null; the caller provides writable storage
    unsafe { *out = handle };
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), (TsStatus, String)> {
    if out.is_null() {
        return Err(null());
    }
    let c = CString::new(s).map_err(invalid)?;
    // SAFETY: checked non-null
    unsafe { *out = c.into_raw() };
    Ok(())
}

/// (K_n, θ₁(s,t)).
///
/// # Safety
/// `out` must be valid for writing a pointer.
#[no_mangle]
pub unsafe extern "C" fn ts_theta1_new(n: usize, s: usize, t: usize, out: *mut *mut TsSignedGraph) -> TsStatus {
    guard(|| {
        let fam = Family::theta1(n, s, t).map_err(invalid)?;
        unsafe { put_graph(out, fam.graph()) }
    })
}

/// (K_n, θ₂(0,k−5)).
///
/// # Safety
/// `out` must be valid for writing a pointer.
#[no_mangle]
pub unsafe extern "C" fn ts_theta2_new(n: usize, k: usize, out: *mut *mut TsSignedGraph) -> TsStatus {
    guard(|| {
        let fam = Family::theta2(n, k).map_err(invalid)?;
        unsafe { put_graph(out, fam.graph()) }
    })
}

/// Signed K_n whose negative edges are the graph6 graph; `n` of 0 means the
/// graph's own order.
///
/// # Safety
/// `graph6` must be a nul-terminated string and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn ts_graph_from_graph6(
    graph6: *const c_char,
    n: usize,
    out: *mut *mut TsSignedGraph,
) -> TsStatus {
    guard(|| {
        if graph6.is_null() {
            return Err(null());
        }
        // SAFETY: non-null and nul-terminated by contract
        let code = unsafe { CStr::from_ptr(graph6) }
            .to_str()
            .map_err(|e| (TsStatus::InvalidUtf8, e.to_string()))?;
        let b = SimpleGraph::from_graph6(code).map_err(invalid)?;
        let order = if n == 0 { b.vertex_count() } else { n };
        let g = SignedCompleteGraph::embed(&b, order).map_err(invalid)?;
        unsafe { put_graph(out, g) }
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `g` must come from a constructor here and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ts_graph_free(g: *mut TsSignedGraph) {
    if !g.is_null() {
        // SAFETY: created by Box::into_raw in put_graph
        drop(unsafe { Box::from_raw(g) });
    }
}

/// # Safety
/// `g` must be a live handle, `order` and `negative_edges` writable.
#[no_mangle]
pub unsafe extern "C" fn ts_graph_size(
    g: *const TsSignedGraph,
    order: *mut usize,
    negative_edges: *mut usize,
) -> TsStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        if order.is_null() || negative_edges.is_null() {
            return Err(null());
        }
        unsafe {
            *order = g.order();
            *negative_edges = g.negative_edge_count();
        }
        Ok(())
    })
}

/// Largest adjacency eigenvalue. When `vector` is non-null it receives the
/// sign-normalized unit eigenvector and must hold `order` doubles.
///
/// # Safety
/// `g` must be a live handle, `lambda1` writable, `vector` null or writable
/// for `order` doubles.
#[no_mangle]
pub unsafe extern "C" fn ts_graph_index(g: *const TsSignedGraph, lambda1: *mut f64, vector: *mut f64) -> TsStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        if lambda1.is_null() {
            return Err(null());
        }
        let (l, x) = spectra::index(g, DEFAULT_TOL).map_err(|e| (TsStatus::NumericFailure, e.to_string()))?;
        unsafe {
            *lambda1 = l;
            if !vector.is_null() {
                ptr::copy_nonoverlapping(x.as_ptr(), vector, x.len());
            }
        }
        Ok(())
    })
}

/// graph6 of the negative edges on all `order` vertices.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ts_graph_negative_graph6(g: *const TsSignedGraph, out: *mut *mut c_char) -> TsStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        unsafe { put_string(out, g.negative_edges().to_graph6()) }
    })
}

/// Exact characteristic polynomial as a JSON array of decimal strings,
/// ascending degree.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ts_graph_char_poly_json(g: *const TsSignedGraph, out: *mut *mut c_char) -> TsStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        let p = g.adjacency_matrix().char_poly_exact();
        let json = serde_json::to_string(&p).map_err(invalid)?;
        unsafe { put_string(out, json) }
    })
}

/// Message for the last failed call on this thread; empty after success.
/// Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn ts_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ts_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: created by CString::into_raw in put_string
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Library version, static storage.
#[no_mangle]
pub extern "C" fn ts_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr().cast()
}
