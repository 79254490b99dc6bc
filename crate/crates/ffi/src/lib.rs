//! C ABI over the `poisson-poincare` library.
//!
//! Conventions:
//! * Every fallible entry point returns a [`PpStatus`]; results come back
//!   through out-pointers.
//! * Polynomials are opaque [`PpPolynomial`] handles freed with
//!   [`pp_polynomial_free`]; strings returned to the caller are freed with
//!   [`pp_string_free`].
//! * On any non-`Ok` status, [`pp_last_error_message`] returns a
//!   thread-local description of what went wrong.
//! * Panics never cross the boundary; they are caught and reported as
//!   [`PpStatus::InternalPanic`].

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use poisson_poincare::corpus;
use poisson_poincare::coxeter::{build_weyl, character_table, CartanType};
use poisson_poincare::laurent::LaurentPolynomial;
use poisson_poincare::partitions::{self, Partition};
use poisson_poincare::{hypertoric, nilcone, s3, suites};

/// Status code returned by every fallible entry point.
#[repr(C)]
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum PpStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// An argument failed to parse or named an unknown object.
    InvalidArgument = 2,
    /// The inputs were well formed but the computation rejected them.
    ComputationError = 3,
    /// A verification run completed and found a failing identity.
    VerificationFailed = 4,
    /// A panic was caught at the boundary; this is a bug in the library.
    InternalPanic = 5,
}

/// Opaque handle to an exact multivariate Laurent polynomial.
pub struct PpPolynomial(LaurentPolynomial);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = RefCell::new(None);
}

fn set_error(message: &str) {
    let c = CString::new(message.replace('\0', "?"))
        .unwrap_or_else(|_| CString::new("invalid error text").expect("static text"));
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

/// Last error on this thread as a fresh heap string, or null if the most
/// recent call succeeded. Free with [`pp_string_free`].
#[no_mangle]
pub extern "C" fn pp_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| match &*slot.borrow() {
        Some(c) => c.clone().into_raw(),
        None => std::ptr::null_mut(),
    })
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn pp_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Free a string allocated by this library. Null is a no-op.
///
/// # Safety
/// `s` must be a pointer previously returned by this library and not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn pp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Free a polynomial handle. Null is a no-op.
///
/// # Safety
/// `p` must be a handle previously returned by this library and not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn pp_polynomial_free(p: *mut PpPolynomial) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Run `f` with panics confined to the boundary.
fn guarded(f: impl FnOnce() -> PpStatus) -> PpStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic; this is a library bug");
            PpStatus::InternalPanic
        }
    }
}

/// Read a UTF-8 argument string; records an error on failure.
unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, PpStatus> {
    if p.is_null() {
        set_error(&format!("{what} is null"));
        return Err(PpStatus::NullArgument);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error(&format!("{what} is not valid UTF-8"));
        PpStatus::InvalidArgument
    })
}

fn write_poly(out: *mut *mut PpPolynomial, poly: LaurentPolynomial) -> PpStatus {
    if out.is_null() {
        set_error("out pointer is null");
        return PpStatus::NullArgument;
    }
    unsafe { *out = Box::into_raw(Box::new(PpPolynomial(poly))) };
    clear_error();
    PpStatus::Ok
}

fn parse_partition(text: &str, what: &str) -> Result<Partition, PpStatus> {
    text.parse::<Partition>().map_err(|e| {
        set_error(&format!("{what}: {e}"));
        PpStatus::InvalidArgument
    })
}

fn computation<E: std::fmt::Display>(e: E) -> PpStatus {
    set_error(&e.to_string());
    PpStatus::ComputationError
}

/// Two-variable Poincaré polynomial of the hypertoric cone of a matrix.
///
/// `matrix` accepts inline JSON (`[[1,0,1],[0,1,1]]`), semicolon-separated
/// rows, or a corpus spec (`graphic:K4`, `dual:graphic:cycle_5`,
/// `file:path`).
///
/// # Safety
/// `matrix` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pp_hypertoric_poincare(
    matrix: *const c_char,
    out: *mut *mut PpPolynomial,
) -> PpStatus {
    guarded(|| {
        let text = match read_str(matrix, "matrix") {
            Ok(t) => t,
            Err(s) => return s,
        };
        match corpus::matroid_from_text(text) {
            Ok(m) => write_poly(out, hypertoric::hypertoric_poincare(&m)),
            Err(e) => {
                set_error(&e.to_string());
                PpStatus::InvalidArgument
            }
        }
    })
}

/// Tutte polynomial of the column matroid of a matrix (same input grammar as
/// [`pp_hypertoric_poincare`]).
///
/// # Safety
/// `matrix` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pp_tutte(
    matrix: *const c_char,
    out: *mut *mut PpPolynomial,
) -> PpStatus {
    guarded(|| {
        let text = match read_str(matrix, "matrix") {
            Ok(t) => t,
            Err(s) => return s,
        };
        match corpus::matroid_from_text(text) {
            Ok(m) => write_poly(out, m.tutte()),
            Err(e) => {
                set_error(&e.to_string());
                PpStatus::InvalidArgument
            }
        }
    })
}

/// Kostka polynomial K_{λμ}(t). Partitions parse as `"3,2,1"`, `"(3,2,1)"`,
/// or exponent form `"2^3,1"`.
///
/// # Safety
/// `lambda` and `mu` must be valid NUL-terminated strings and `out` a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn pp_kostka(
    lambda: *const c_char,
    mu: *const c_char,
    out: *mut *mut PpPolynomial,
) -> PpStatus {
    guarded(|| {
        let (lambda, mu) = match (read_str(lambda, "lambda"), read_str(mu, "mu")) {
            (Ok(l), Ok(m)) => (l, m),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        let lambda = match parse_partition(lambda, "lambda") {
            Ok(p) => p,
            Err(s) => return s,
        };
        let mu = match parse_partition(mu, "mu") {
            Ok(p) => p,
            Err(s) => return s,
        };
        match partitions::kostka(&lambda, &mu) {
            Ok(k) => write_poly(out, k),
            Err(e) => computation(e),
        }
    })
}

/// Two-variable polynomial of the slice attached to a dominance pair λ ⊵ μ.
///
/// # Safety
/// `lambda` and `mu` must be valid NUL-terminated strings and `out` a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn pp_s3_poincare(
    lambda: *const c_char,
    mu: *const c_char,
    out: *mut *mut PpPolynomial,
) -> PpStatus {
    guarded(|| {
        let (lambda, mu) = match (read_str(lambda, "lambda"), read_str(mu, "mu")) {
            (Ok(l), Ok(m)) => (l, m),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        let lambda = match parse_partition(lambda, "lambda") {
            Ok(p) => p,
            Err(s) => return s,
        };
        let mu = match parse_partition(mu, "mu") {
            Ok(p) => p,
            Err(s) => return s,
        };
        let pair = match s3::S3Pair::new(lambda, mu) {
            Ok(p) => p,
            Err(e) => return computation(e),
        };
        match s3::s3_poincare(&pair) {
            Ok(p) => write_poly(out, p),
            Err(e) => computation(e),
        }
    })
}

/// Two-variable polynomial of the nilpotent cone of a Cartan type
/// (`"A1"`..`"A5"`, `"B2"`, `"G2"`).
///
/// # Safety
/// `cartan_type` must be a valid NUL-terminated string and `out` a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn pp_cone_poincare(
    cartan_type: *const c_char,
    out: *mut *mut PpPolynomial,
) -> PpStatus {
    guarded(|| {
        let text = match read_str(cartan_type, "cartan_type") {
            Ok(t) => t,
            Err(s) => return s,
        };
        let ct = match text.parse::<CartanType>() {
            Ok(ct) => ct,
            Err(e) => {
                set_error(&e.to_string());
                return PpStatus::InvalidArgument;
            }
        };
        let w = build_weyl(ct);
        let table = character_table(&w);
        match nilcone::conjecture_poincare(&w, &table) {
            Ok(p) => write_poly(out, p),
            Err(e) => computation(e),
        }
    })
}

/// Render a polynomial in the library's canonical text form.
///
/// # Safety
/// `p` must be a live handle from this library and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pp_polynomial_text(
    p: *const PpPolynomial,
    out: *mut *mut c_char,
) -> PpStatus {
    polynomial_string(p, out, |poly| poly.to_string())
}

/// Render a polynomial as JSON (`{"vars": [...], "terms": [...]}` with
/// decimal-string coefficients).
///
/// # Safety
/// `p` must be a live handle from this library and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pp_polynomial_json(
    p: *const PpPolynomial,
    out: *mut *mut c_char,
) -> PpStatus {
    polynomial_string(p, out, |poly| poly.to_json().to_string())
}

unsafe fn polynomial_string(
    p: *const PpPolynomial,
    out: *mut *mut c_char,
    render: impl FnOnce(&LaurentPolynomial) -> String,
) -> PpStatus {
    guarded(|| {
        if p.is_null() || out.is_null() {
            set_error("polynomial or out pointer is null");
            return PpStatus::NullArgument;
        }
        let text = render(&(*p).0);
        match CString::new(text) {
            Ok(c) => {
                *out = c.into_raw();
                clear_error();
                PpStatus::Ok
            }
            Err(_) => {
                set_error("rendered text contained an interior NUL");
                PpStatus::InternalPanic
            }
        }
    })
}

/// Number of monomials in a polynomial.
///
/// # Safety
/// `p` must be a live handle from this library and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pp_polynomial_num_terms(
    p: *const PpPolynomial,
    out: *mut usize,
) -> PpStatus {
    guarded(|| {
        if p.is_null() || out.is_null() {
            set_error("polynomial or out pointer is null");
            return PpStatus::NullArgument;
        }
        *out = (*p).0.iter_terms().count();
        clear_error();
        PpStatus::Ok
    })
}

/// Exact equality of two polynomials; writes 1 or 0.
///
/// # Safety
/// `a` and `b` must be live handles from this library and `out` a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn pp_polynomial_equal(
    a: *const PpPolynomial,
    b: *const PpPolynomial,
    out: *mut c_int,
) -> PpStatus {
    guarded(|| {
        if a.is_null() || b.is_null() || out.is_null() {
            set_error("polynomial or out pointer is null");
            return PpStatus::NullArgument;
        }
        *out = c_int::from((*a).0 == (*b).0);
        clear_error();
        PpStatus::Ok
    })
}

/// Run one verification suite (or `"all"`) over the built-in corpus.
///
/// Writes 1 to `out_passed` and returns `Ok` when every identity holds;
/// writes 0 and returns `VerificationFailed` otherwise, with the failing
/// suite names in [`pp_last_error_message`]. `out_passed` may be null.
///
/// # Safety
/// `name` must be a valid NUL-terminated string; `out_passed` must be null
/// or a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pp_verify_suite(
    name: *const c_char,
    out_passed: *mut c_int,
) -> PpStatus {
    guarded(|| {
        let name = match read_str(name, "suite name") {
            Ok(t) => t,
            Err(s) => return s,
        };
        let corpus = suites::default_corpus();
        let outcomes = if name == "all" {
            suites::run_all(&corpus)
        } else {
            match suites::run_suite(name, &corpus) {
                Some(o) => vec![o],
                None => {
                    set_error(&format!(
                        "unknown suite `{name}`; expected `all` or one of: {}",
                        suites::SUITE_NAMES.join(", ")
                    ));
                    return PpStatus::InvalidArgument;
                }
            }
        };
        let failed: Vec<&str> = outcomes.iter().filter(|o| !o.passed).map(|o| o.name).collect();
        let passed = failed.is_empty();
        if !out_passed.is_null() {
            *out_passed = c_int::from(passed);
        }
        if passed {
            clear_error();
            PpStatus::Ok
        } else {
            set_error(&format!("failing suites: {}", failed.join(", ")));
            PpStatus::VerificationFailed
        }
    })
}
