//! Drives the C entry points from Rust, as a C caller would.

use std::ffi::{c_char, CStr, CString};
use std::process::Command;
use std::ptr;

use chebknot_ffi::*;

fn last_error() -> Option<String> {
    let p = chk_last_error_message();
    (!p.is_null()).then(|| unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned())
}

fn take_string(p: *mut c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { chk_string_free(p) };
    s
}

#[test]
fn expansion_with_sizing_call() {
    let mut len = 0usize;
    let st = unsafe { chk_regular_expansion(9, 7, ptr::null_mut(), 0, &mut len) };
    assert_eq!(st, ChkStatus::BufferTooSmall);
    assert_eq!(len, 7);
    assert!(last_error().unwrap().contains("7 terms"));
    let mut buf = vec![0i8; len];
    let st = unsafe { chk_regular_expansion(9, 7, buf.as_mut_ptr(), buf.len(), &mut len) };
    assert_eq!(st, ChkStatus::Ok);
    assert_eq!(buf, [1, 1, 1, -1, -1, -1, -1]);
    assert_eq!(last_error(), None);
}

#[test]
fn invalid_arguments_and_null_pointers() {
    let mut len = 0usize;
    assert_eq!(unsafe { chk_regular_expansion(9, 0, ptr::null_mut(), 0, &mut len) }, ChkStatus::InvalidArgument);
    assert_eq!(unsafe { chk_regular_expansion(9, 7, ptr::null_mut(), 0, ptr::null_mut()) }, ChkStatus::NullPointer);
    let mut k: *mut ChkKnot = ptr::null_mut();
    assert_eq!(unsafe { chk_knot_new(9, 6, &mut k) }, ChkStatus::InvalidArgument);
    assert!(k.is_null());
    assert_eq!(unsafe { chk_knot_new(-3, 1, &mut k) }, ChkStatus::Domain);
    let mut n = 0i64;
    assert_eq!(unsafe { chk_knot_crossing_number(ptr::null(), &mut n) }, ChkStatus::NullPointer);
    unsafe {
        chk_knot_free(ptr::null_mut());
        chk_parametrization_free(ptr::null_mut());
        chk_string_free(ptr::null_mut());
    }
}

#[test]
fn knot_handle_lifecycle() {
    let mut k: *mut ChkKnot = ptr::null_mut();
    assert_eq!(unsafe { chk_knot_new(9, -2, &mut k) }, ChkStatus::Ok);
    let (mut a, mut b, mut mirror) = (0i64, 0i64, false);
    assert_eq!(unsafe { chk_knot_fraction(k, &mut a, &mut b, &mut mirror) }, ChkStatus::Ok);
    // 9/−2 is the mirror of 9/2
    assert_eq!((a, b, mirror), (9, 2, true));
    let mut n = 0i64;
    assert_eq!(unsafe { chk_knot_crossing_number(k, &mut n) }, ChkStatus::Ok);
    assert_eq!(n, 6);
    let mut amphi = true;
    assert_eq!(unsafe { chk_knot_is_amphicheiral(k, &mut amphi) }, ChkStatus::Ok);
    assert!(!amphi);
    let mut json: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { chk_knot_json(k, &mut json) }, ChkStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
    assert_eq!(v["alpha"], 9);
    assert_eq!(v["mirror"], true);
    unsafe { chk_knot_free(k) };
}

#[test]
fn parametrization_handle() {
    let mut p: *mut ChkParametrization = ptr::null_mut();
    assert_eq!(unsafe { chk_parametrization_new(9, 7, &mut p) }, ChkStatus::Ok);
    let (mut b, mut n) = (0i64, 0i64);
    assert_eq!(unsafe { chk_parametrization_degrees(p, &mut b, &mut n) }, ChkStatus::Ok);
    assert_eq!((b, n), (8, 6));
    let (mut len, mut sign) = (0usize, 0i8);
    let st = unsafe { chk_parametrization_height_roots(p, ptr::null_mut(), 0, &mut len, &mut sign) };
    assert_eq!(st, ChkStatus::BufferTooSmall);
    let mut roots = vec![0.0; len];
    let st = unsafe { chk_parametrization_height_roots(p, roots.as_mut_ptr(), len, &mut len, &mut sign) };
    assert_eq!(st, ChkStatus::Ok);
    assert!(roots.windows(2).all(|w| w[0] < w[1]));
    assert!(sign == 1 || sign == -1);
    let mut xyz = [0.0f64; 3];
    assert_eq!(unsafe { chk_parametrization_eval(p, 0.3, xyz.as_mut_ptr()) }, ChkStatus::Ok);
    let x = 4.0 * 0.3f64.powi(3) - 3.0 * 0.3;
    assert!((xyz[0] - x).abs() < 1e-12);
    let z: f64 = sign as f64 * roots.iter().map(|r| 0.3 - r).product::<f64>();
    assert!((xyz[2] - z).abs() < 1e-9);
    let mut json: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { chk_parametrization_json(p, &mut json) }, ChkStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
    assert_eq!(v["N"], 6);
    unsafe { chk_parametrization_free(p) };

    assert_eq!(unsafe { chk_parametrization_new(8, 3, &mut p) }, ChkStatus::Domain);
    assert!(last_error().unwrap().contains("link"));
}

#[test]
fn verify_and_floor() {
    let mut verdict = false;
    for (a, b) in [(3, 1), (5, 2), (9, 7), (13, 5), (89, 55)] {
        assert_eq!(unsafe { chk_verify(a, b, 1e-9, &mut verdict) }, ChkStatus::Ok, "{a}/{b}");
        assert!(verdict);
    }
    assert_eq!(unsafe { chk_verify(9, 7, 100.0, &mut verdict) }, ChkStatus::Domain);
    assert_eq!(unsafe { chk_verify(9, 7, f64::NAN, &mut verdict) }, ChkStatus::InvalidArgument);
}

#[test]
fn harmonic_classification() {
    let mut h = ChkHarmonic::default();
    assert_eq!(unsafe { chk_harmonic_classify(3, 31, 43, &mut h) }, ChkStatus::Ok);
    assert_eq!((h.b_canon, h.c_canon, h.crossing_number), (5, 7, 4));
    assert_eq!((h.alpha, h.beta), (5, 3));
    assert_eq!(unsafe { chk_harmonic_classify(3, 6, 7, &mut h) }, ChkStatus::InvalidArgument);
    assert_eq!(unsafe { chk_harmonic_classify(3, 2, 7, &mut h) }, ChkStatus::Domain);
}

#[test]
fn parse_and_overflow() {
    let (mut a, mut b) = (0i64, 0i64);
    let s = CString::new("-9/7").unwrap();
    assert_eq!(unsafe { chk_parse_fraction(s.as_ptr(), &mut a, &mut b) }, ChkStatus::Ok);
    assert_eq!((a, b), (9, -7));
    let s = CString::new("100000000000000000000/3").unwrap();
    assert_eq!(unsafe { chk_parse_fraction(s.as_ptr(), &mut a, &mut b) }, ChkStatus::Overflow);
    let s = CString::new("x").unwrap();
    assert_eq!(unsafe { chk_parse_fraction(s.as_ptr(), &mut a, &mut b) }, ChkStatus::InvalidArgument);
    assert!(!unsafe { CStr::from_ptr(chk_version()) }.to_bytes().is_empty());
}

#[test]
fn errors_are_per_thread() {
    let mut len = 0usize;
    unsafe { chk_regular_expansion(9, 0, ptr::null_mut(), 0, &mut len) };
    assert!(last_error().is_some());
    std::thread::spawn(|| assert_eq!(last_error(), None)).join().unwrap();
}

/// The generated header compiles as C and as C++.
#[test]
fn header_compiles() {
    let dir = env!("CARGO_MANIFEST_DIR");
    let header = format!("{dir}/include/chebknot.h");
    assert!(std::path::Path::new(&header).exists());
    for (compiler, lang) in [("cc", "c"), ("c++", "c++")] {
        let Ok(o) = Command::new(compiler)
            .args(["-fsyntax-only", "-Wall", "-Werror", "-x", lang, &header])
            .output()
        else {
            eprintln!("{compiler} not available, skipping");
            continue;
        };
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    }
}
