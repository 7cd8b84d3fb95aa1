//! C interface to `braid3`.
//!
//! Words and braids are passed around as opaque handles created by the
//! `*_parse` functions and released with the matching `*_free`. Every
//! fallible call returns a [`Braid3Status`]; the message of the last failure
//! on the calling thread is available from [`braid3_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use braid3::analytic_blocks::glue_word;
use braid3::braid_words::{cyclic_reduce, parse_braid, parse_pure_word, script_l, syllable_decompose, BraidWord, FreeWord};
use braid3::invariant_bounds::{bounds_for_word, braid_bounds_thm3, BoundaryCondition, BoundsReport};
use braid3::matrix_oracles::{entropy_exact, NtClass};
use braid3::Error;

/// Status codes. `BRAID3_STATUS_OK` is zero; the rest mirror the library errors.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Braid3Status {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Syntax = 3,
    EmptyWord = 4,
    ZeroInput = 5,
    NotApplicable = 6,
    UnsupportedCombination = 7,
    Domain = 8,
    QuadratureFailure = 9,
    NewtonDivergence = 10,
    BlockUnavailable = 11,
    GridDegenerate = 12,
    Pole = 13,
    NonFinite = 14,
    InvalidBoundary = 15,
    BufferTooSmall = 16,
    Panic = 99,
}

impl From<&Error> for Braid3Status {
    fn from(e: &Error) -> Self {
        match e {
            Error::Syntax { .. } => Braid3Status::Syntax,
            Error::EmptyWord => Braid3Status::EmptyWord,
            Error::ZeroInput => Braid3Status::ZeroInput,
            Error::NotApplicable(_) => Braid3Status::NotApplicable,
            Error::UnsupportedCombination(_) => Braid3Status::UnsupportedCombination,
            Error::Domain(_) => Braid3Status::Domain,
            Error::QuadratureFailure(_) => Braid3Status::QuadratureFailure,
            Error::NewtonDivergence(_) => Braid3Status::NewtonDivergence,
            Error::BlockUnavailable(_) => Braid3Status::BlockUnavailable,
            Error::GridDegenerate(_) => Braid3Status::GridDegenerate,
            Error::Pole(_) => Braid3Status::Pole,
            Error::NonFinite(_) => Braid3Status::NonFinite,
        }
    }
}

/// Nielsen-Thurston type, as in the library.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Braid3NtClass {
    CentralPower = 0,
    Periodic = 1,
    Reducible = 2,
    PseudoAnosov = 3,
}

impl From<NtClass> for Braid3NtClass {
    fn from(c: NtClass) -> Self {
        match c {
            NtClass::CentralPower => Braid3NtClass::CentralPower,
            NtClass::Periodic => Braid3NtClass::Periodic,
            NtClass::Reducible => Braid3NtClass::Reducible,
            NtClass::PseudoAnosov => Braid3NtClass::PseudoAnosov,
        }
    }
}

/// Flattened bounds report. Absent values are NaN.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct Braid3Bounds {
    pub l: f64,
    pub lambda_lower: f64,
    pub lambda_upper: f64,
    pub entropy_lower: f64,
    pub entropy_upper: f64,
    pub entropy_exact: f64,
    pub exceptional: bool,
    pub nt_class: Braid3NtClass,
}

impl From<&BoundsReport> for Braid3Bounds {
    fn from(r: &BoundsReport) -> Self {
        Braid3Bounds {
            l: r.l,
            lambda_lower: r.lambda_lower,
            lambda_upper: r.lambda_upper,
            entropy_lower: r.entropy_lower.unwrap_or(f64::NAN),
            entropy_upper: r.entropy_upper.unwrap_or(f64::NAN),
            entropy_exact: r.entropy_exact.unwrap_or(f64::NAN),
            exceptional: r.is_exceptional(),
            nt_class: r.nt_class.into(),
        }
    }
}

/// Opaque handle to a reduced word in the free group on `a1`, `a2`.
pub struct Braid3Word(FreeWord);

/// Opaque handle to a 3-braid word.
pub struct Braid3Braid(BraidWord);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Fail(Braid3Status, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail((&e).into(), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> Braid3Status {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            Braid3Status::Ok
        }
        Ok(Err(Fail(s, m))) => {
            set_error(m);
            s
        }
        Err(_) => {
            set_error("internal panic".into());
            Braid3Status::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(Braid3Status::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(p).to_str().map_err(|e| Fail(Braid3Status::InvalidUtf8, e.to_string()))
}

unsafe fn get<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail(Braid3Status::NullPointer, "null handle".into()))
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(Braid3Status::NullPointer, "null output pointer".into()));
    }
    out.write(v);
    Ok(())
}

/// Message of the last failed call on this thread, or null. The pointer is
/// valid until the next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn braid3_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn braid3_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses a pure word such as `"a1^2 a2^-1"`.
///
/// # Safety
/// `word` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn braid3_word_parse(word: *const c_char, out: *mut *mut Braid3Word) -> Braid3Status {
    guard(|| {
        let w = parse_pure_word(text(word)?)?;
        put(out, Box::into_raw(Box::new(Braid3Word(w))))
    })
}

/// # Safety
/// `w` must be null or a handle from [`braid3_word_parse`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn braid3_word_free(w: *mut Braid3Word) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}

/// Canonical rendering of the word; release with [`braid3_string_free`].
///
/// # Safety
/// `w` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn braid3_word_render(w: *const Braid3Word, out: *mut *mut c_char) -> Braid3Status {
    guard(|| {
        let s = CString::new(get(w)?.0.render()).expect("rendered words have no NUL");
        put(out, s.into_raw())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn braid3_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// `L(w)` of the linear syllable decomposition.
///
/// # Safety
/// `w` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn braid3_word_script_l(w: *const Braid3Word, out: *mut f64) -> Braid3Status {
    guard(|| {
        let dec = syllable_decompose(&get(w)?.0)?;
        put(out, script_l(&dec))
    })
}

/// Writes the syllable degrees into `buf[0..cap]` and their count to `len`.
/// If `cap` is too small, only `len` is written and `BufferTooSmall` returned.
///
/// # Safety
/// `buf` must point to `cap` writable `u64` (or be null with `cap == 0`).
#[no_mangle]
pub unsafe extern "C" fn braid3_word_syllable_degrees(
    w: *const Braid3Word,
    buf: *mut u64,
    cap: usize,
    len: *mut usize,
) -> Braid3Status {
    guard(|| {
        let degrees = syllable_decompose(&get(w)?.0)?.degrees();
        put(len, degrees.len())?;
        if degrees.len() > cap {
            return Err(Fail(Braid3Status::BufferTooSmall, format!("need room for {} degrees", degrees.len())));
        }
        if !degrees.is_empty() {
            if buf.is_null() {
                return Err(Fail(Braid3Status::NullPointer, "null degree buffer".into()));
            }
            ptr::copy_nonoverlapping(degrees.as_ptr(), buf, degrees.len());
        }
        Ok(())
    })
}

/// Bounds for `w` under `boundary` (`tr`, `pb`, `tr_pb`, `pb_tr`, `conjugacy`).
///
/// # Safety
/// `w` must be a live handle, `boundary` a NUL-terminated string, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn braid3_word_bounds(
    w: *const Braid3Word,
    boundary: *const c_char,
    out: *mut Braid3Bounds,
) -> Braid3Status {
    guard(|| {
        let name = text(boundary)?;
        let bc = BoundaryCondition::parse(name)
            .ok_or_else(|| Fail(Braid3Status::InvalidBoundary, format!("unknown boundary condition {name:?}")))?;
        let rep = bounds_for_word(&get(w)?.0, bc)?;
        put(out, (&rep).into())
    })
}

/// Exact entropy of the conjugacy class of `w`.
///
/// # Safety
/// `w` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn braid3_word_entropy(w: *const Braid3Word, out: *mut f64) -> Braid3Status {
    guard(|| put(out, entropy_exact(&cyclic_reduce(&get(w)?.0))))
}

/// Gluing audit of `w` on a grid of spacing `grid_step`.
///
/// # Safety
/// `w` must be a live handle; `sup_mu` and `qc` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn braid3_word_glue(
    w: *const Braid3Word,
    grid_step: f64,
    sup_mu: *mut f64,
    qc: *mut f64,
    passed: *mut bool,
) -> Braid3Status {
    guard(|| {
        let a = glue_word(&get(w)?.0, grid_step)?;
        put(sup_mu, a.sup_mu)?;
        put(qc, a.qc_dilatation)?;
        put(passed, a.passed)
    })
}

/// Parses a braid word such as `"s1^3 s2^-2 d"`.
///
/// # Safety
/// `word` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn braid3_braid_parse(word: *const c_char, out: *mut *mut Braid3Braid) -> Braid3Status {
    guard(|| {
        let b = parse_braid(text(word)?)?;
        put(out, Box::into_raw(Box::new(Braid3Braid(b))))
    })
}

/// # Safety
/// `b` must be null or a handle from [`braid3_braid_parse`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn braid3_braid_free(b: *mut Braid3Braid) {
    if !b.is_null() {
        drop(Box::from_raw(b));
    }
}

/// Totally real bounds of a braid through its normal form. Writes a new
/// word handle for the ϑ-image to `theta` (null for Δ-powers); pass null to skip it.
///
/// # Safety
/// `b` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn braid3_braid_bounds(
    b: *const Braid3Braid,
    out: *mut Braid3Bounds,
    theta: *mut *mut Braid3Word,
) -> Braid3Status {
    guard(|| {
        let r = braid_bounds_thm3(&get(b)?.0);
        put(out, (&r.report).into())?;
        if !theta.is_null() {
            let h = r.theta_word.map_or(ptr::null_mut(), |w| Box::into_raw(Box::new(Braid3Word(w))));
            theta.write(h);
        }
        Ok(())
    })
}

/// Entropy of the braid.
///
/// # Safety
/// `b` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn braid3_braid_entropy(b: *const Braid3Braid, out: *mut f64) -> Braid3Status {
    guard(|| put(out, entropy_exact(&get(b)?.0)))
}
