//! C ABI for `hivecomb`.
//!
//! Honeycombs and lift reports cross the boundary as opaque handles that the
//! caller frees with the matching `*_free` function. Strings returned to the
//! caller are freed with [`hc_string_free`]. Every function returns an
//! [`HcStatus`]; on failure [`hc_last_error`] describes what went wrong.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hivecomb::cli::{parse_honeycomb, render_svg};
use hivecomb::hive::{count_gt_patterns, count_lattice_hives, weight, BoundaryTriple};
use hivecomb::honeycomb::{diagram, overlay, prv_witness, Honeycomb};
use hivecomb::lift::{largest_lift_seeded, LiftReport};
use hivecomb::Error;

/// Result codes. The nonzero values follow the command-line exit codes
/// where one applies.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HcStatus {
    Ok = 0,
    Internal = 1,
    InvalidInput = 2,
    Infeasible = 4,
    MalformedDiagram = 5,
    NullPointer = 6,
    Panic = 7,
}

/// Opaque honeycomb.
pub struct HcHoneycomb(Honeycomb);

/// Opaque largest-lift report.
pub struct HcLiftReport(LiftReport);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> HcStatus {
    match e {
        Error::Infeasible => HcStatus::Infeasible,
        Error::NotADiagram(_) => HcStatus::MalformedDiagram,
        Error::ZeroSumViolation(_)
        | Error::NotDominant(_)
        | Error::LengthMismatch
        | Error::NonIntegralBoundary
        | Error::TypeDoesNotClose(_)
        | Error::DirectionViolation(_)
        | Error::TensionViolation
        | Error::Invalid(_) => HcStatus::InvalidInput,
        _ => HcStatus::Internal,
    }
}

/// Runs `f`, turning errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), (HcStatus, String)>) -> HcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            HcStatus::Ok
        }
        Ok(Err((s, msg))) => {
            set_error(&msg);
            s
        }
        Err(_) => {
            set_error("panic inside hivecomb");
            HcStatus::Panic
        }
    }
}

fn lib(e: Error) -> (HcStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(name: &str) -> (HcStatus, String) {
    (HcStatus::NullPointer, format!("{name} is null"))
}

unsafe fn slice<'a, T>(p: *const T, n: usize, name: &str) -> Result<&'a [T], (HcStatus, String)> {
    if n == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(name));
    }
    Ok(std::slice::from_raw_parts(p, n))
}

unsafe fn triple(
    n: usize,
    lambda: *const i64,
    mu: *const i64,
    nu: *const i64,
) -> Result<BoundaryTriple, (HcStatus, String)> {
    let (l, m, v) = (slice(lambda, n, "lambda")?, slice(mu, n, "mu")?, slice(nu, n, "nu")?);
    BoundaryTriple::from_ints(l, m, v).map_err(lib)
}

fn give_string(s: String, out: *mut *mut c_char) -> Result<(), (HcStatus, String)> {
    let c = CString::new(s).map_err(|e| (HcStatus::Internal, e.to_string()))?;
    unsafe { *out = c.into_raw() };
    Ok(())
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call on the same thread.
#[no_mangle]
pub extern "C" fn hc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Frees a string returned by this library.
///
/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Number of lattice hives with boundary `(λ, μ, ν)`, each of length `n`.
///
/// # Safety
/// The weight pointers must each point to `n` readable values.
#[no_mangle]
pub unsafe extern "C" fn hc_lr_count(
    n: usize,
    lambda: *const i64,
    mu: *const i64,
    nu: *const i64,
    out: *mut u64,
) -> HcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let t = triple(n, lambda, mu, nu)?;
        *out = count_lattice_hives(&t).map_err(lib)?;
        Ok(())
    })
}

/// Number of Gelfand-Cetlin patterns with top row `λ`.
///
/// # Safety
/// `lambda` must point to `n` readable values.
#[no_mangle]
pub unsafe extern "C" fn hc_gt_count(n: usize, lambda: *const i64, out: *mut u64) -> HcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = count_gt_patterns(slice(lambda, n, "lambda")?).map_err(lib)?;
        Ok(())
    })
}

/// Parses a honeycomb from JSON.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_honeycomb_from_json(json: *const c_char, out: *mut *mut HcHoneycomb) -> HcStatus {
    guard(|| {
        if json.is_null() || out.is_null() {
            return Err(null("argument"));
        }
        let text = CStr::from_ptr(json).to_str().map_err(|e| (HcStatus::InvalidInput, e.to_string()))?;
        let h = parse_honeycomb(text).map_err(lib)?;
        *out = Box::into_raw(Box::new(HcHoneycomb(h)));
        Ok(())
    })
}

/// The honeycomb as JSON; free the result with [`hc_string_free`].
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_honeycomb_to_json(h: *const HcHoneycomb, out: *mut *mut c_char) -> HcStatus {
    guard(|| {
        if h.is_null() || out.is_null() {
            return Err(null("argument"));
        }
        let s = serde_json::to_string(&(*h).0.to_json()).map_err(|e| (HcStatus::Internal, e.to_string()))?;
        give_string(s, out)
    })
}

/// An SVG drawing of the honeycomb's diagram; rays stop `margin` units past
/// the furthest vertex.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_honeycomb_render_svg(h: *const HcHoneycomb, margin: f64, out: *mut *mut c_char) -> HcStatus {
    guard(|| {
        if h.is_null() || out.is_null() {
            return Err(null("argument"));
        }
        give_string(render_svg(&diagram(&(*h).0), margin), out)
    })
}

/// Overlay of two honeycombs.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_overlay(a: *const HcHoneycomb, b: *const HcHoneycomb, out: *mut *mut HcHoneycomb) -> HcStatus {
    guard(|| {
        if a.is_null() || b.is_null() || out.is_null() {
            return Err(null("argument"));
        }
        let h = overlay(&(*a).0, &(*b).0).map_err(lib)?;
        *out = Box::into_raw(Box::new(HcHoneycomb(h)));
        Ok(())
    })
}

/// Overlaid tripods `(λ_{w(i)}, μ_{v(i)})`; `w` and `v` are 0-based
/// permutations of length `n`.
///
/// # Safety
/// All arrays must hold `n` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_prv_witness(
    n: usize,
    lambda: *const i64,
    mu: *const i64,
    w: *const usize,
    v: *const usize,
    out: *mut *mut HcHoneycomb,
) -> HcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let (l, m) = (slice(lambda, n, "lambda")?, slice(mu, n, "mu")?);
        let (w, v) = (slice(w, n, "w")?, slice(v, n, "v")?);
        let h = prv_witness(&weight(l), &weight(m), w, v).map_err(lib)?;
        *out = Box::into_raw(Box::new(HcHoneycomb(h)));
        Ok(())
    })
}

/// Frees a honeycomb handle.
///
/// # Safety
/// `h` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn hc_honeycomb_free(h: *mut HcHoneycomb) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Largest lift of `(λ, μ, ν)` with the weight function of `seed`.
///
/// # Safety
/// The weight pointers must each point to `n` readable values; `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn hc_largest_lift(
    n: usize,
    lambda: *const i64,
    mu: *const i64,
    nu: *const i64,
    seed: u64,
    out: *mut *mut HcLiftReport,
) -> HcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let t = triple(n, lambda, mu, nu)?;
        let r = largest_lift_seeded(&t, seed).map_err(lib)?;
        *out = Box::into_raw(Box::new(HcLiftReport(r)));
        Ok(())
    })
}

/// Whether the lifted hive is integral; false for a null handle.
///
/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hc_lift_report_is_integral(r: *const HcLiftReport) -> bool {
    !r.is_null() && (*r).0.integral
}

/// The report as JSON; free the result with [`hc_string_free`].
///
/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_lift_report_to_json(r: *const HcLiftReport, out: *mut *mut c_char) -> HcStatus {
    guard(|| {
        if r.is_null() || out.is_null() {
            return Err(null("argument"));
        }
        let s = serde_json::to_string(&(*r).0.to_json()).map_err(|e| (HcStatus::Internal, e.to_string()))?;
        give_string(s, out)
    })
}

/// Frees a lift report handle.
///
/// # Safety
/// `r` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn hc_lift_report_free(r: *mut HcLiftReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}
