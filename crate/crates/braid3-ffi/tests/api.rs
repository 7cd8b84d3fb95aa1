use std::ffi::{CStr, CString};
use std::ptr;

use braid3_ffi::*;

fn word(s: &str) -> *mut Braid3Word {
    let c = CString::new(s).unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { braid3_word_parse(c.as_ptr(), &mut h) }, Braid3Status::Ok);
    assert!(!h.is_null());
    h
}

fn last_error() -> String {
    let p = braid3_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

#[test]
fn word_round_trip() {
    let w = word("a1 a1 a2^-1 a2^-2");
    let mut s = ptr::null_mut();
    unsafe {
        assert_eq!(braid3_word_render(w, &mut s), Braid3Status::Ok);
        assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "a1^2 a2^-3");
        braid3_string_free(s);
        braid3_word_free(w);
    }
}

#[test]
fn syllables_and_l() {
    let w = word("a2^-1 a1^2 a2^-3 a1^-1 a2^-1 a1^-1 a2 a1^-1");
    let mut l = 0.0;
    let mut buf = [0u64; 8];
    let mut len = 0;
    unsafe {
        assert_eq!(braid3_word_script_l(w, &mut l), Braid3Status::Ok);
        assert_eq!(braid3_word_syllable_degrees(w, buf.as_mut_ptr(), 2, &mut len), Braid3Status::BufferTooSmall);
        assert_eq!(len, 6);
        assert_eq!(braid3_word_syllable_degrees(w, buf.as_mut_ptr(), buf.len(), &mut len), Braid3Status::Ok);
        braid3_word_free(w);
    }
    assert!((l - (3.0 * 3f64.ln() + 7f64.ln() + 2.0 * 11f64.ln())).abs() < 1e-12);
    assert_eq!(&buf[..len], [1, 2, 3, 3, 1, 1]);
}

#[test]
fn bounds_and_entropy() {
    let w = word("a1^-1 a2");
    let bc = CString::new("conjugacy").unwrap();
    let mut b = std::mem::MaybeUninit::<Braid3Bounds>::uninit();
    let mut h = 0.0;
    let b = unsafe {
        assert_eq!(braid3_word_bounds(w, bc.as_ptr(), b.as_mut_ptr()), Braid3Status::Ok);
        assert_eq!(braid3_word_entropy(w, &mut h), Braid3Status::Ok);
        braid3_word_free(w);
        b.assume_init()
    };
    assert!((h - (3.0 + 2.0 * 2f64.sqrt()).ln()).abs() < 1e-12);
    assert_eq!(b.entropy_exact, h);
    assert!(b.entropy_lower <= h && h <= b.entropy_upper);
    assert_eq!(b.nt_class, Braid3NtClass::PseudoAnosov);
    assert!(!b.exceptional);

    let bad = CString::new("sideways").unwrap();
    let w = word("a1");
    let mut out = std::mem::MaybeUninit::<Braid3Bounds>::uninit();
    unsafe {
        assert_eq!(braid3_word_bounds(w, bad.as_ptr(), out.as_mut_ptr()), Braid3Status::InvalidBoundary);
        braid3_word_free(w);
    }
    assert!(last_error().contains("sideways"));
}

#[test]
fn braid_bounds_with_theta() {
    let c = CString::new("s1^3 s2^-2").unwrap();
    let mut b = ptr::null_mut();
    let mut out = std::mem::MaybeUninit::<Braid3Bounds>::uninit();
    let mut theta = ptr::null_mut();
    let mut h = 0.0;
    let mut s = ptr::null_mut();
    unsafe {
        assert_eq!(braid3_braid_parse(c.as_ptr(), &mut b), Braid3Status::Ok);
        assert_eq!(braid3_braid_bounds(b, out.as_mut_ptr(), &mut theta), Braid3Status::Ok);
        assert_eq!(braid3_braid_entropy(b, &mut h), Braid3Status::Ok);
        assert_eq!(braid3_word_render(theta, &mut s), Braid3Status::Ok);
        assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "a1 a2^-1");
        braid3_string_free(s);
        braid3_word_free(theta);
        braid3_braid_free(b);
        let r = out.assume_init();
        assert!((r.l - 2.0 * 3f64.ln()).abs() < 1e-12);
        assert!((r.lambda_lower - r.l / (2.0 * std::f64::consts::PI)).abs() < 1e-12);
        assert!(r.entropy_exact.is_nan());
    }
    assert!(h > 0.0);

    let c = CString::new("d^4").unwrap();
    let mut b = ptr::null_mut();
    let mut theta = ptr::null_mut();
    let mut out = std::mem::MaybeUninit::<Braid3Bounds>::uninit();
    unsafe {
        assert_eq!(braid3_braid_parse(c.as_ptr(), &mut b), Braid3Status::Ok);
        assert_eq!(braid3_braid_bounds(b, out.as_mut_ptr(), &mut theta), Braid3Status::Ok);
        assert!(theta.is_null());
        assert!(out.assume_init().exceptional);
        braid3_braid_free(b);
    }
}

#[test]
fn glue() {
    let w = word("a1^2 a2^-2");
    let (mut mu, mut qc, mut passed) = (0.0, 0.0, false);
    unsafe {
        assert_eq!(braid3_word_glue(w, 1.0 / 180.0, &mut mu, &mut qc, &mut passed), Braid3Status::Ok);
        assert_eq!(braid3_word_glue(w, 0.5, &mut mu, &mut qc, &mut passed), Braid3Status::GridDegenerate);
        braid3_word_free(w);
    }
    assert!(passed);
    assert!((qc - (1.0 + mu) / (1.0 - mu)).abs() < 1e-12);

    let w = word("a1 a2^-1");
    unsafe {
        assert_eq!(braid3_word_glue(w, 1.0 / 180.0, &mut mu, &mut qc, &mut passed), Braid3Status::BlockUnavailable);
        braid3_word_free(w);
    }
}

#[test]
fn errors() {
    let mut h = ptr::null_mut();
    let bad = CString::new("a1^^2").unwrap();
    unsafe {
        assert_eq!(braid3_word_parse(bad.as_ptr(), &mut h), Braid3Status::Syntax);
        assert!(h.is_null());
        assert!(last_error().contains("byte"));
        assert_eq!(braid3_word_parse(ptr::null(), &mut h), Braid3Status::NullPointer);
        let invalid = [0xffu8, 0];
        assert_eq!(braid3_word_parse(invalid.as_ptr().cast(), &mut h), Braid3Status::InvalidUtf8);
        let mut l = 0.0;
        assert_eq!(braid3_word_script_l(ptr::null(), &mut l), Braid3Status::NullPointer);
        let ok = CString::new("a1").unwrap();
        assert_eq!(braid3_word_parse(ok.as_ptr(), ptr::null_mut()), Braid3Status::NullPointer);
        braid3_word_free(ptr::null_mut());
        braid3_braid_free(ptr::null_mut());
        braid3_string_free(ptr::null_mut());
    }
    // success clears the message
    let w = word("a1");
    assert!(braid3_last_error().is_null());
    unsafe { braid3_word_free(w) };
    let v = unsafe { CStr::from_ptr(braid3_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}
