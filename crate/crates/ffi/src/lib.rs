//! C ABI for the GKM-sheaf cohomology engine.
//!
//! Handles are opaque and owned by the caller, who releases them with the
//! matching `*_free` function. Every function returns a [`GkmStatus`]; on
//! failure a message is available from [`gkm_last_error_message`] on the same
//! thread. Strings returned through out-parameters are released with
//! [`gkm_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use gkm_core::builders::example;
use gkm_core::cli::{build_report, check_doc};
use gkm_core::document::{Ingested, ReportDocument, SheafDocument};
use gkm_core::sheaf::validate_axioms;
use gkm_core::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GkmStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidSheaf = 4,
    UnknownExample = 5,
    OutOfRange = 6,
    Panic = 7,
}

/// A validated sheaf document.
pub struct GkmSheaf {
    inner: Ingested,
}

/// A computed cohomology report.
pub struct GkmReport {
    inner: ReportDocument,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

type Fallible<T> = Result<T, (GkmStatus, String)>;

fn guard<F: FnOnce() -> Fallible<()>>(f: F) -> GkmStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => GkmStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal error: {msg}"));
            GkmStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Fallible<&'a str> {
    if p.is_null() {
        return Err((GkmStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| (GkmStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Fallible<&'a T> {
    p.as_ref()
        .ok_or_else(|| (GkmStatus::NullPointer, format!("{what} is null")))
}

fn non_null<T>(p: *mut T, what: &str) -> Fallible<()> {
    if p.is_null() {
        Err((GkmStatus::NullPointer, format!("{what} is null")))
    } else {
        Ok(())
    }
}

fn classify(e: Error) -> (GkmStatus, String) {
    match e {
        Error::Parse(_) => (GkmStatus::ParseError, e.to_string()),
        _ => (GkmStatus::InvalidSheaf, e.to_string()),
    }
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s)
        .expect("JSON has no interior nul")
        .into_raw()
}

/// Parses a sheaf document. On success `*out` receives a new handle.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gkm_sheaf_from_json(
    json: *const c_char,
    out: *mut *mut GkmSheaf,
) -> GkmStatus {
    guard(|| {
        non_null(out, "out")?;
        let text = read_str(json, "json")?;
        let inner = SheafDocument::from_json(text)
            .and_then(|d| d.ingest())
            .map_err(classify)?;
        *out = Box::into_raw(Box::new(GkmSheaf { inner }));
        Ok(())
    })
}

/// Builds a named example: point, sphere, theta, cp1, cp2, cp3 or identity.
///
/// # Safety
/// `name` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gkm_sheaf_example(
    name: *const c_char,
    out: *mut *mut GkmSheaf,
) -> GkmStatus {
    guard(|| {
        non_null(out, "out")?;
        let name = read_str(name, "name")?;
        let sheaf = example(name).ok_or_else(|| {
            (
                GkmStatus::UnknownExample,
                format!("unknown example {name:?}"),
            )
        })?;
        let inner = Ingested {
            name: Some(name.to_string()),
            description: None,
            sheaf,
            warnings: Vec::new(),
        };
        *out = Box::into_raw(Box::new(GkmSheaf { inner }));
        Ok(())
    })
}

/// Releases a sheaf handle. Null is ignored.
///
/// # Safety
/// `sheaf` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn gkm_sheaf_free(sheaf: *mut GkmSheaf) {
    if !sheaf.is_null() {
        drop(Box::from_raw(sheaf));
    }
}

/// Checks the sheaf axioms. `*passed` tells whether all hold and
/// `*nondegenerate` receives the number of non-degenerate edges.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn gkm_sheaf_validate(
    sheaf: *const GkmSheaf,
    passed: *mut bool,
    nondegenerate: *mut usize,
) -> GkmStatus {
    guard(|| {
        let sheaf = deref(sheaf, "sheaf")?;
        non_null(passed, "passed")?;
        non_null(nondegenerate, "nondegenerate")?;
        let report = validate_axioms(&sheaf.inner.sheaf);
        *passed = report.all_pass();
        *nondegenerate = report.nondegenerate.len();
        Ok(())
    })
}

/// Canonical JSON document for the sheaf.
///
/// # Safety
/// All pointers must be valid; release `*out` with `gkm_string_free`.
#[no_mangle]
pub unsafe extern "C" fn gkm_sheaf_to_json(
    sheaf: *const GkmSheaf,
    out: *mut *mut c_char,
) -> GkmStatus {
    guard(|| {
        let sheaf = deref(sheaf, "sheaf")?;
        non_null(out, "out")?;
        let ing = &sheaf.inner;
        let doc = SheafDocument::from_sheaf(&ing.sheaf, ing.name.clone(), ing.description.clone());
        *out = into_c_string(doc.to_json());
        Ok(())
    })
}

/// Computes Hilbert tables up to `max_degree` (a nonnegative even integer),
/// optionally with minimal generators of `H^0` and the full set of checks.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn gkm_report_compute(
    sheaf: *const GkmSheaf,
    max_degree: i64,
    generators: bool,
    checks: bool,
    out: *mut *mut GkmReport,
) -> GkmStatus {
    guard(|| {
        let sheaf = deref(sheaf, "sheaf")?;
        non_null(out, "out")?;
        if max_degree < 0 || max_degree % 2 != 0 {
            return Err((
                GkmStatus::OutOfRange,
                format!("max_degree must be a nonnegative even integer, got {max_degree}"),
            ));
        }
        let mut inner = build_report(&sheaf.inner, max_degree, generators);
        if !inner.axioms.passed {
            return Err((GkmStatus::InvalidSheaf, "the sheaf fails the axioms".into()));
        }
        if checks {
            inner.check = Some(check_doc(&sheaf.inner.sheaf, max_degree));
        }
        *out = Box::into_raw(Box::new(GkmReport { inner }));
        Ok(())
    })
}

fn table_dim(report: &ReportDocument, column: &[usize], degree: i64) -> Fallible<usize> {
    if degree > report.cutoff {
        return Err((
            GkmStatus::OutOfRange,
            format!("degree {degree} is above the cutoff {}", report.cutoff),
        ));
    }
    // Untabulated degrees (below the lowest stalk degree, or odd when every
    // generator is even) have dimension zero.
    Ok(report
        .degrees
        .iter()
        .position(|&d| d == degree)
        .map_or(0, |i| column[i]))
}

/// `dim H^0` in one degree up to the report's cutoff.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn gkm_report_h0_dim(
    report: *const GkmReport,
    degree: i64,
    out: *mut usize,
) -> GkmStatus {
    guard(|| {
        let report = &deref(report, "report")?.inner;
        non_null(out, "out")?;
        *out = table_dim(report, &report.h0, degree)?;
        Ok(())
    })
}

/// `dim H^1` in one degree up to the report's cutoff.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn gkm_report_h1_dim(
    report: *const GkmReport,
    degree: i64,
    out: *mut usize,
) -> GkmStatus {
    guard(|| {
        let report = &deref(report, "report")?.inner;
        non_null(out, "out")?;
        *out = table_dim(report, &report.h1, degree)?;
        Ok(())
    })
}

/// Whether every check passed; `*out` is false when checks were not run.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn gkm_report_checks_passed(
    report: *const GkmReport,
    out: *mut bool,
) -> GkmStatus {
    guard(|| {
        let report = &deref(report, "report")?.inner;
        non_null(out, "out")?;
        *out = report.check.as_ref().is_some_and(|c| c.passed);
        Ok(())
    })
}

/// The report as JSON.
///
/// # Safety
/// All pointers must be valid; release `*out` with `gkm_string_free`.
#[no_mangle]
pub unsafe extern "C" fn gkm_report_to_json(
    report: *const GkmReport,
    out: *mut *mut c_char,
) -> GkmStatus {
    guard(|| {
        let report = deref(report, "report")?;
        non_null(out, "out")?;
        *out = into_c_string(report.inner.to_json());
        Ok(())
    })
}

/// Releases a report handle. Null is ignored.
///
/// # Safety
/// `report` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn gkm_report_free(report: *mut GkmReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn gkm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn gkm_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn gkm_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
