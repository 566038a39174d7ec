//! C interface to `uqplus`.
//!
//! Objects are opaque handles created by calls such as `uq_algebra_builtin`
//! or `uq_element_parse` and released with the matching `uq_*_free`. Every fallible call returns a
//! `UqStatus`; on failure `uq_last_error` describes what went wrong on the
//! calling thread. Strings handed out are owned by the caller and released
//! with `uq_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use uqplus::braided::{braiding_from_cartan, BraidingMatrix, CartanData};
use uqplus::nichols::{minimal_relations, nichols_hilbert_series};
use uqplus::pbw::{self, AlgebraElement, Presentation};
use uqplus::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UqStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidInput = 4,
    Mismatch = 5,
    Resource = 6,
    BufferTooSmall = 7,
    Panic = 8,
}

/// A presented algebra (one of the built-ins).
pub struct UqAlgebra(Arc<Presentation>);

/// An element of a presented algebra, always in normal form.
pub struct UqElement(AlgebraElement);

/// A diagonal braiding built from Cartan data.
pub struct UqBraiding(BraidingMatrix);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> UqStatus {
    match e {
        Error::Parse { .. } => UqStatus::Parse,
        Error::PresentationMismatch => UqStatus::Mismatch,
        Error::Resource(_) => UqStatus::Resource,
        _ => UqStatus::InvalidInput,
    }
}

/// Runs `f`, turning errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), UqStatus>) -> UqStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => UqStatus::Ok,
        Ok(Err(s)) => s,
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("internal error: {msg}"));
            UqStatus::Panic
        }
    }
}

fn fail(e: Error) -> UqStatus {
    let s = status_of(&e);
    set_error(e.to_string());
    s
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, UqStatus> {
    if p.is_null() {
        set_error(format!("{what} is NULL"));
        return Err(UqStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error(format!("{what} is not valid UTF-8"));
        UqStatus::InvalidUtf8
    })
}

unsafe fn ref_arg<'a, T>(p: *const T, what: &str) -> Result<&'a T, UqStatus> {
    p.as_ref().ok_or_else(|| {
        set_error(format!("{what} is NULL"));
        UqStatus::NullPointer
    })
}

unsafe fn write_out<T>(out: *mut *mut T, value: T) -> Result<(), UqStatus> {
    if out.is_null() {
        set_error("output pointer is NULL".into());
        return Err(UqStatus::NullPointer);
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), UqStatus> {
    if out.is_null() {
        set_error("output pointer is NULL".into());
        return Err(UqStatus::NullPointer);
    }
    *out = CString::new(s).expect("no interior nul").into_raw();
    Ok(())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn uq_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Copy of the last error message on this thread, or NULL if there is none.
/// Release with `uq_string_free`.
#[no_mangle]
pub extern "C" fn uq_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null_mut(), |c| c.clone().into_raw()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn uq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Looks up a built-in algebra by name (`b2`, `heisenberg`, `qtorus`, ...).
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn uq_algebra_builtin(name: *const c_char, out: *mut *mut UqAlgebra) -> UqStatus {
    guard(|| {
        let name = str_arg(name, "name")?;
        let p = pbw::builtin_presentation(name).map_err(fail)?;
        write_out(out, UqAlgebra(p))
    })
}

/// Number of generators.
///
/// # Safety
/// `alg` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn uq_algebra_generator_count(alg: *const UqAlgebra) -> usize {
    alg.as_ref().map_or(0, |a| a.0.n())
}

/// # Safety
/// `alg` must be NULL or a handle from `uq_algebra_builtin` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn uq_algebra_free(alg: *mut UqAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// Parses an expression and brings it to normal form.
///
/// # Safety
/// `alg` must be a live handle, `text` NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn uq_element_parse(
    alg: *const UqAlgebra,
    text: *const c_char,
    out: *mut *mut UqElement,
) -> UqStatus {
    guard(|| {
        let alg = ref_arg(alg, "algebra")?;
        let text = str_arg(text, "text")?;
        let e = AlgebraElement::parse(&alg.0, text).map_err(fail)?;
        write_out(out, UqElement(e))
    })
}

/// Product `a * b` in normal form.
///
/// # Safety
/// `a`, `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn uq_element_mul(a: *const UqElement, b: *const UqElement, out: *mut *mut UqElement) -> UqStatus {
    guard(|| {
        let (a, b) = (ref_arg(a, "a")?, ref_arg(b, "b")?);
        let e = a.0.mul(&b.0).map_err(fail)?;
        write_out(out, UqElement(e))
    })
}

/// Sum `a + b`.
///
/// # Safety
/// `a`, `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn uq_element_add(a: *const UqElement, b: *const UqElement, out: *mut *mut UqElement) -> UqStatus {
    guard(|| {
        let (a, b) = (ref_arg(a, "a")?, ref_arg(b, "b")?);
        let e = a.0.add(&b.0).map_err(fail)?;
        write_out(out, UqElement(e))
    })
}

/// Canonical text of an element, e.g. `q^-2*e1*e2 - q^-2*e3`.
///
/// # Safety
/// `e` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn uq_element_to_string(e: *const UqElement, out: *mut *mut c_char) -> UqStatus {
    guard(|| {
        let e = ref_arg(e, "element")?;
        write_string(out, e.0.to_string())
    })
}

/// Exact equality of normal forms.
///
/// # Safety
/// `a`, `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn uq_element_equal(a: *const UqElement, b: *const UqElement, out: *mut bool) -> UqStatus {
    guard(|| {
        let (a, b) = (ref_arg(a, "a")?, ref_arg(b, "b")?);
        if a.0.presentation().name != b.0.presentation().name {
            return Err(fail(Error::PresentationMismatch));
        }
        if out.is_null() {
            return Err(UqStatus::NullPointer);
        }
        *out = a.0 == b.0;
        Ok(())
    })
}

/// Whether the element commutes with every generator.
///
/// # Safety
/// `e` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn uq_element_is_central(e: *const UqElement, out: *mut bool) -> UqStatus {
    guard(|| {
        let e = ref_arg(e, "element")?;
        let c = pbw::is_central(&e.0).map_err(fail)?;
        if out.is_null() {
            return Err(UqStatus::NullPointer);
        }
        *out = c;
        Ok(())
    })
}

/// # Safety
/// `e` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn uq_element_free(e: *mut UqElement) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// Braiding `q_ij = q^{d_i a_ij}` from Cartan data in JSON, `{"C": [[..]], "d": [..]}`.
///
/// # Safety
/// `json` must be NUL-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn uq_braiding_from_cartan_json(json: *const c_char, out: *mut *mut UqBraiding) -> UqStatus {
    guard(|| {
        let json = str_arg(json, "json")?;
        let cd = CartanData::from_json(json).map_err(fail)?;
        let b = braiding_from_cartan(&cd).map_err(fail)?;
        write_out(out, UqBraiding(b))
    })
}

/// Minimal relations up to `max_degree` (at most 8) as a JSON array.
///
/// # Safety
/// `b` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn uq_relations_json(b: *const UqBraiding, max_degree: usize, out: *mut *mut c_char) -> UqStatus {
    guard(|| {
        let b = ref_arg(b, "braiding")?;
        let rels = minimal_relations(&b.0, max_degree).map_err(fail)?;
        write_string(out, rels.to_json().to_string())
    })
}

/// Writes the dimensions of degrees `0..=max_degree` into `dims`, which
/// must have room for `max_degree + 1` entries.
///
/// # Safety
/// `b` must be a live handle and `dims` must point to `len` writable entries.
#[no_mangle]
pub unsafe extern "C" fn uq_hilbert_series(
    b: *const UqBraiding,
    max_degree: usize,
    dims: *mut usize,
    len: usize,
) -> UqStatus {
    guard(|| {
        let b = ref_arg(b, "braiding")?;
        if dims.is_null() {
            set_error("dims is NULL".into());
            return Err(UqStatus::NullPointer);
        }
        if len <= max_degree {
            set_error(format!("need {} entries, got {len}", max_degree + 1));
            return Err(UqStatus::BufferTooSmall);
        }
        let series = nichols_hilbert_series(&b.0, max_degree).map_err(fail)?;
        std::slice::from_raw_parts_mut(dims, series.len()).copy_from_slice(&series);
        Ok(())
    })
}

/// # Safety
/// `b` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn uq_braiding_free(b: *mut UqBraiding) {
    if !b.is_null() {
        drop(Box::from_raw(b));
    }
}

/// Runs the full identity battery; writes the JSON report and whether every check passed.
///
/// # Safety
/// `report` and `passed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn uq_verify_json(report: *mut *mut c_char, passed: *mut bool) -> UqStatus {
    guard(|| {
        if passed.is_null() {
            set_error("passed is NULL".into());
            return Err(UqStatus::NullPointer);
        }
        let (mut v, ok) = uqplus::cli::verify_report().map_err(fail)?;
        v.as_object_mut().map(|o| o.remove("seconds"));
        write_string(report, v.to_string())?;
        *passed = ok;
        Ok(())
    })
}
