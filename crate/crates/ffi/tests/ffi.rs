use std::ffi::{CStr, CString};
use std::ptr;

use hivecomb_ffi::*;

fn take(s: *mut std::ffi::c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { hc_string_free(s) };
    out
}

#[test]
fn lr_count_adjoint_square() {
    let (l, m, nu) = ([2i64, 1, 0], [2i64, 1, 0], [-1i64, -2, -3]);
    let mut c = 0u64;
    let s = unsafe { hc_lr_count(3, l.as_ptr(), m.as_ptr(), nu.as_ptr(), &mut c) };
    assert_eq!(s, HcStatus::Ok);
    assert_eq!(c, 2);
    assert!(hc_last_error().is_null());
}

#[test]
fn errors_are_reported() {
    let (l, m, nu) = ([3i64, 0], [1i64, 0], [0i64, -1]);
    let mut c = 0u64;
    let s = unsafe { hc_lr_count(2, l.as_ptr(), m.as_ptr(), nu.as_ptr(), &mut c) };
    assert_eq!(s, HcStatus::InvalidInput);
    let msg = unsafe { CStr::from_ptr(hc_last_error()) }.to_str().unwrap();
    assert!(msg.contains("zero"), "{msg}");

    let s = unsafe { hc_lr_count(2, l.as_ptr(), m.as_ptr(), nu.as_ptr(), ptr::null_mut()) };
    assert_eq!(s, HcStatus::NullPointer);
    let s = unsafe { hc_lr_count(2, ptr::null(), m.as_ptr(), nu.as_ptr(), &mut c) };
    assert_eq!(s, HcStatus::NullPointer);

    let bad = CString::new("{").unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { hc_honeycomb_from_json(bad.as_ptr(), &mut h) }, HcStatus::InvalidInput);
    assert!(h.is_null());
}

#[test]
fn gt_count_matches_dimension() {
    let l = [2i64, 1, 0];
    let mut c = 0u64;
    assert_eq!(unsafe { hc_gt_count(3, l.as_ptr(), &mut c) }, HcStatus::Ok);
    assert_eq!(c, 8);
}

#[test]
fn honeycomb_handles_roundtrip() {
    let (l, m) = ([2i64, 1, 0], [2i64, 1, 0]);
    let (w, v) = ([0usize, 1, 2], [2usize, 1, 0]);
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { hc_prv_witness(3, l.as_ptr(), m.as_ptr(), w.as_ptr(), v.as_ptr(), &mut h) }, HcStatus::Ok);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { hc_honeycomb_to_json(h, &mut s) }, HcStatus::Ok);
    let json = take(s);
    let c = CString::new(json.clone()).unwrap();
    let mut h2 = ptr::null_mut();
    assert_eq!(unsafe { hc_honeycomb_from_json(c.as_ptr(), &mut h2) }, HcStatus::Ok);
    let mut s2 = ptr::null_mut();
    assert_eq!(unsafe { hc_honeycomb_to_json(h2, &mut s2) }, HcStatus::Ok);
    assert_eq!(take(s2), json);

    let mut sum = ptr::null_mut();
    assert_eq!(unsafe { hc_overlay(h, h2, &mut sum) }, HcStatus::Ok);
    let mut svg = ptr::null_mut();
    assert_eq!(unsafe { hc_honeycomb_render_svg(sum, 2.0, &mut svg) }, HcStatus::Ok);
    assert!(take(svg).starts_with("<svg"));
    unsafe {
        hc_honeycomb_free(h);
        hc_honeycomb_free(h2);
        hc_honeycomb_free(sum);
        hc_honeycomb_free(ptr::null_mut());
    }
}

#[test]
fn lift_report_handle() {
    let (l, m, nu) = ([4i64, 2, 0], [3i64, 1, 0], [-1i64, -3, -6]);
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { hc_largest_lift(3, l.as_ptr(), m.as_ptr(), nu.as_ptr(), 7, &mut r) }, HcStatus::Ok);
    assert!(unsafe { hc_lift_report_is_integral(r) });
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { hc_lift_report_to_json(r, &mut s) }, HcStatus::Ok);
    assert!(take(s).contains("\"integral\":true"));
    unsafe { hc_lift_report_free(r) };

    let (l, m, nu) = ([2i64, 0, 0], [0i64, 0, 0], [0i64, -1, -1]);
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { hc_largest_lift(3, l.as_ptr(), m.as_ptr(), nu.as_ptr(), 7, &mut r) }, HcStatus::Infeasible);
    assert!(r.is_null());
    assert!(!unsafe { hc_lift_report_is_integral(r) });
}

#[test]
fn header_declares_the_api() {
    let h = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/hivecomb.h")).unwrap();
    for name in [
        "hc_lr_count",
        "hc_gt_count",
        "hc_honeycomb_from_json",
        "hc_honeycomb_to_json",
        "hc_honeycomb_render_svg",
        "hc_overlay",
        "hc_prv_witness",
        "hc_honeycomb_free",
        "hc_largest_lift",
        "hc_lift_report_free",
        "hc_last_error",
        "hc_string_free",
        "HC_STATUS_INFEASIBLE = 4",
        "typedef struct HcHoneycomb HcHoneycomb",
    ] {
        assert!(h.contains(name), "{name}");
    }
}
