//! C interface to the gsq engine.
//!
//! Every fallible call returns a [`GsqStatus`] and writes results through
//! out-pointers. On failure the message is kept per thread and read back
//! with [`gsq_last_error`]. Strings handed out by the library are released
//! with [`gsq_string_free`], systems with [`gsq_system_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use gsq::basis::hilbert;
use gsq::presentation::{parse_poly, parse_presentation, PresentationBundle};
use gsq::rewrite::{is_gs_basis, normal_form, RewriteSystem};
use gsq::uq::{jimbo_bundle, Sign};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GsqStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    BufferTooSmall = 5,
    Panic = 6,
}

/// A parsed presentation together with its rewriting system.
pub struct GsqSystem {
    bundle: PresentationBundle,
    system: RewriteSystem,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = s);
}

struct Failure(GsqStatus, String);

fn guarded(f: impl FnOnce() -> Result<(), Failure>) -> GsqStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            GsqStatus::Ok
        }
        Ok(Err(Failure(code, msg))) => {
            set_error(msg);
            code
        }
        Err(_) => {
            set_error("internal panic");
            GsqStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(GsqStatus::NullPointer, "null string".into()));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure(GsqStatus::InvalidUtf8, e.to_string()))
}

unsafe fn handle<'a>(p: *const GsqSystem) -> Result<&'a GsqSystem, Failure> {
    p.as_ref().ok_or_else(|| Failure(GsqStatus::NullPointer, "null system".into()))
}

fn null_out() -> Failure {
    Failure(GsqStatus::NullPointer, "null output pointer".into())
}

fn boxed(bundle: PresentationBundle) -> Result<*mut GsqSystem, Failure> {
    let system = bundle
        .system()
        .map_err(|e| Failure(GsqStatus::InvalidArgument, e.to_string()))?;
    Ok(Box::into_raw(Box::new(GsqSystem { bundle, system })))
}

/// Parses a presentation in the gsq text format.
///
/// # Safety
/// `text_ptr` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gsq_system_from_text(text_ptr: *const c_char, out: *mut *mut GsqSystem) -> GsqStatus {
    guarded(|| {
        if out.is_null() {
            return Err(null_out());
        }
        let bundle = parse_presentation(text(text_ptr)?).map_err(|e| Failure(GsqStatus::ParseError, e.to_string()))?;
        *out = boxed(bundle)?;
        Ok(())
    })
}

/// The Jimbo relations of `U_q⁺(A_n)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gsq_system_builtin_uq_plus(n: usize, out: *mut *mut GsqSystem) -> GsqStatus {
    guarded(|| {
        if out.is_null() {
            return Err(null_out());
        }
        let bundle = jimbo_bundle(n, Sign::Plus).map_err(|e| Failure(GsqStatus::InvalidArgument, e.to_string()))?;
        *out = boxed(bundle)?;
        Ok(())
    })
}

/// # Safety
/// `sys` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn gsq_system_free(sys: *mut GsqSystem) {
    if !sys.is_null() {
        drop(Box::from_raw(sys));
    }
}

/// Number of generators.
///
/// # Safety
/// `sys` must be a live handle or null (which yields 0).
#[no_mangle]
pub unsafe extern "C" fn gsq_system_generator_count(sys: *const GsqSystem) -> usize {
    sys.as_ref().map_or(0, |s| s.bundle.alphabet.len())
}

/// Number of relations after normalization.
///
/// # Safety
/// `sys` must be a live handle or null (which yields 0).
#[no_mangle]
pub unsafe extern "C" fn gsq_system_relation_count(sys: *const GsqSystem) -> usize {
    sys.as_ref().map_or(0, |s| s.system.len())
}

/// Writes whether every composition reduces to zero.
///
/// # Safety
/// `sys` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gsq_is_gs_basis(sys: *const GsqSystem, out: *mut bool) -> GsqStatus {
    guarded(|| {
        let s = handle(sys)?;
        if out.is_null() {
            return Err(null_out());
        }
        *out = is_gs_basis(&s.system).verdict;
        Ok(())
    })
}

/// Reduces `poly` and returns the normal form as a new string.
///
/// # Safety
/// `sys` must be a live handle, `poly` NUL-terminated, `out` writable.
/// Release the result with [`gsq_string_free`].
#[no_mangle]
pub unsafe extern "C" fn gsq_normal_form(sys: *const GsqSystem, poly: *const c_char, out: *mut *mut c_char) -> GsqStatus {
    guarded(|| {
        let s = handle(sys)?;
        if out.is_null() {
            return Err(null_out());
        }
        let p = parse_poly(text(poly)?, &s.bundle.alphabet).map_err(|e| Failure(GsqStatus::ParseError, e.to_string()))?;
        let nf = normal_form(&p, &s.system).render(&s.bundle.alphabet);
        *out = CString::new(nf).expect("rendered text has no NUL").into_raw();
        Ok(())
    })
}

/// Normal-word counts for weighted degrees `0..=cap` under the declared
/// weights, written to `counts`, which must hold `cap + 1` entries.
///
/// # Safety
/// `sys` must be a live handle; `counts` must point to `len` writable slots.
#[no_mangle]
pub unsafe extern "C" fn gsq_hilbert(sys: *const GsqSystem, cap: u64, counts: *mut u64, len: usize) -> GsqStatus {
    guarded(|| {
        let s = handle(sys)?;
        if counts.is_null() {
            return Err(null_out());
        }
        let need = cap as usize + 1;
        if len < need {
            return Err(Failure(GsqStatus::BufferTooSmall, format!("need {need} slots, got {len}")));
        }
        let h = hilbert(&s.system, s.bundle.alphabet.weights(), cap)
            .map_err(|e| Failure(GsqStatus::InvalidArgument, e.to_string()))?;
        for (i, c) in h.counts().into_iter().enumerate() {
            *counts.add(i) = c;
        }
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library, or be null.
#[no_mangle]
pub unsafe extern "C" fn gsq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn gsq_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
