//! Exercise the C entry points exactly as a foreign caller would: through
//! raw pointers and status codes.

use std::ffi::{c_char, c_int, CStr, CString};
use std::ptr;

use poisson_poincare_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).expect("no interior NUL")
}

/// Take ownership of a library string and free it.
unsafe fn take_string(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = CStr::from_ptr(p).to_str().expect("utf8").to_owned();
    pp_string_free(p);
    s
}

unsafe fn last_error() -> String {
    take_string(pp_last_error_message())
}

#[test]
fn hypertoric_round_trip() {
    unsafe {
        let mut poly: *mut PpPolynomial = ptr::null_mut();
        let status = pp_hypertoric_poincare(c("[[1,0,1],[0,1,1]]").as_ptr(), &mut poly);
        assert_eq!(status, PpStatus::Ok);
        assert!(!poly.is_null());

        let mut text: *mut c_char = ptr::null_mut();
        assert_eq!(pp_polynomial_text(poly, &mut text), PpStatus::Ok);
        assert_eq!(take_string(text), "x^4*y^-4 + x^2*y^-4 + 1");

        let mut json: *mut c_char = ptr::null_mut();
        assert_eq!(pp_polynomial_json(poly, &mut json), PpStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(json)).expect("valid json");
        assert_eq!(v["vars"], serde_json::json!(["x", "y"]));

        let mut n: usize = 0;
        assert_eq!(pp_polynomial_num_terms(poly, &mut n), PpStatus::Ok);
        assert_eq!(n, 3);

        assert!(pp_last_error_message().is_null(), "success clears the error");
        pp_polynomial_free(poly);
    }
}

#[test]
fn kostka_and_equality() {
    unsafe {
        let mut a: *mut PpPolynomial = ptr::null_mut();
        let mut b: *mut PpPolynomial = ptr::null_mut();
        assert_eq!(pp_kostka(c("2,1").as_ptr(), c("1,1,1").as_ptr(), &mut a), PpStatus::Ok);
        assert_eq!(pp_kostka(c("(2,1)").as_ptr(), c("1^3").as_ptr(), &mut b), PpStatus::Ok);

        let mut eq: c_int = 0;
        assert_eq!(pp_polynomial_equal(a, b, &mut eq), PpStatus::Ok);
        assert_eq!(eq, 1, "partition spellings are equivalent");

        let mut text: *mut c_char = ptr::null_mut();
        assert_eq!(pp_polynomial_text(a, &mut text), PpStatus::Ok);
        assert_eq!(take_string(text), "t^2 + t");

        pp_polynomial_free(a);
        pp_polynomial_free(b);
    }
}

#[test]
fn cone_matches_s3_full_pair() {
    unsafe {
        let mut cone: *mut PpPolynomial = ptr::null_mut();
        let mut pair: *mut PpPolynomial = ptr::null_mut();
        assert_eq!(pp_cone_poincare(c("A2").as_ptr(), &mut cone), PpStatus::Ok);
        assert_eq!(pp_s3_poincare(c("3").as_ptr(), c("1,1,1").as_ptr(), &mut pair), PpStatus::Ok);
        let mut eq: c_int = 0;
        assert_eq!(pp_polynomial_equal(cone, pair, &mut eq), PpStatus::Ok);
        assert_eq!(eq, 1);
        pp_polynomial_free(cone);
        pp_polynomial_free(pair);
    }
}

#[test]
fn tutte_via_corpus_spec() {
    unsafe {
        let mut poly: *mut PpPolynomial = ptr::null_mut();
        assert_eq!(pp_tutte(c("graphic:cycle_3").as_ptr(), &mut poly), PpStatus::Ok);
        let mut text: *mut c_char = ptr::null_mut();
        assert_eq!(pp_polynomial_text(poly, &mut text), PpStatus::Ok);
        assert_eq!(take_string(text), "x^2 + x + y");
        pp_polynomial_free(poly);
    }
}

#[test]
fn error_paths_set_messages() {
    unsafe {
        let mut poly: *mut PpPolynomial = ptr::null_mut();

        let status = pp_hypertoric_poincare(ptr::null(), &mut poly);
        assert_eq!(status, PpStatus::NullArgument);
        assert!(last_error().contains("null"));

        let status = pp_hypertoric_poincare(c("graphic:K99").as_ptr(), &mut poly);
        assert_eq!(status, PpStatus::InvalidArgument);
        assert!(last_error().contains("K99"));

        let status = pp_kostka(c("2").as_ptr(), c("1,1,1").as_ptr(), &mut poly);
        assert_eq!(status, PpStatus::ComputationError);
        assert!(!last_error().is_empty());

        let status = pp_cone_poincare(c("E8").as_ptr(), &mut poly);
        assert_eq!(status, PpStatus::InvalidArgument);

        assert!(poly.is_null(), "failed calls never write the out pointer");

        let mut n: usize = 0;
        assert_eq!(pp_polynomial_num_terms(ptr::null(), &mut n), PpStatus::NullArgument);
    }
}

#[test]
fn verify_suite_over_builtin_corpus() {
    unsafe {
        let mut passed: c_int = 0;
        assert_eq!(pp_verify_suite(c("gale").as_ptr(), &mut passed), PpStatus::Ok);
        assert_eq!(passed, 1);

        assert_eq!(pp_verify_suite(c("nonesuch").as_ptr(), &mut passed), PpStatus::InvalidArgument);
        assert!(last_error().contains("nonesuch"));

        assert_eq!(pp_verify_suite(c("rank-two").as_ptr(), ptr::null_mut()), PpStatus::Ok);
    }
}

#[test]
fn frees_tolerate_null_and_version_is_static() {
    unsafe {
        pp_string_free(ptr::null_mut());
        pp_polynomial_free(ptr::null_mut());
        let v = pp_version();
        assert!(!v.is_null());
        assert!(!CStr::from_ptr(v).to_str().expect("utf8").is_empty());
    }
}
