//! C ABI over qsymkit.
//!
//! Elements and posets are opaque handles created by `qsymkit_*_from_*` or
//! returned through out-pointers, and released with the matching `_free`.
//! Every fallible call returns a [`QsymkitStatus`]; on failure the message is
//! available from [`qsymkit_last_error`] on the same thread. Strings handed
//! out by the library are released with [`qsymkit_string_free`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use libc::c_char;
use qsymkit::cli::Elem;
use qsymkit::json::poset_from_json;
use qsymkit::posets::LabeledPoset;
use qsymkit::ppartitions::{kp_psi, Route};
use qsymkit::verify::{run_suite, Suite};
use qsymkit::QsymError;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QsymkitStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidInput = 3,
    Domain = 4,
    NotSymmetric = 5,
    /// A cross-validation check failed; the message names it.
    CheckFailed = 6,
    Panic = 7,
}

/// A quasisymmetric or symmetric function with rational polynomial
/// coefficients.
pub struct QsymkitElement {
    inner: Elem,
}

/// A labeled poset.
pub struct QsymkitPoset {
    inner: LabeledPoset,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let c = CString::new(msg.into().replace('\0', " ")).unwrap();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Fail(QsymkitStatus, String);

impl From<QsymError> for Fail {
    fn from(e: QsymError) -> Fail {
        let status = match e {
            QsymError::Input(_) => QsymkitStatus::InvalidInput,
            QsymError::Domain(_) => QsymkitStatus::Domain,
            QsymError::NotSymmetric(..) => QsymkitStatus::NotSymmetric,
        };
        Fail(status, e.to_string())
    }
}

/// Runs `f`, converting errors and panics into a status plus last error.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> QsymkitStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => QsymkitStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            QsymkitStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(QsymkitStatus::NullPointer, format!("{} is null", what)));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail(QsymkitStatus::InvalidUtf8, format!("{} is not UTF-8", what)))
}

unsafe fn ref_arg<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail(QsymkitStatus::NullPointer, format!("{} is null", what)))
}

fn out_arg<T>(p: *mut T) -> Result<(), Fail> {
    if p.is_null() {
        return Err(Fail(QsymkitStatus::NullPointer, "output pointer is null".into()));
    }
    Ok(())
}

fn give_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).unwrap().into_raw()
}

fn give_element(e: Elem) -> *mut QsymkitElement {
    Box::into_raw(Box::new(QsymkitElement { inner: e }))
}

/// Message of the last failed call on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn qsymkit_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn qsymkit_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn qsymkit_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses canonical text such as `Psi[2,1] - 1/2*F[3]` or `3*s[2,1]`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qsymkit_element_parse(text: *const c_char, out: *mut *mut QsymkitElement) -> QsymkitStatus {
    guard(|| {
        out_arg(out)?;
        let e = Elem::from_text(str_arg(text, "text")?)?;
        *out = give_element(e);
        Ok(())
    })
}

/// Reads an element from its JSON form.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qsymkit_element_from_json(
    json: *const c_char,
    out: *mut *mut QsymkitElement,
) -> QsymkitStatus {
    guard(|| {
        out_arg(out)?;
        let v: serde_json::Value = serde_json::from_str(str_arg(json, "json")?)
            .map_err(|e| Fail(QsymkitStatus::InvalidInput, e.to_string()))?;
        *out = give_element(Elem::from_json(&v)?);
        Ok(())
    })
}

/// Converts to `basis`: M, F, Psi, p, h, e, s or m. Quasisymmetric to
/// symmetric fails with `NOT_SYMMETRIC` when the input is not symmetric.
///
/// # Safety
/// `e` must be a live element, `basis` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qsymkit_element_convert(
    e: *const QsymkitElement,
    basis: *const c_char,
    out: *mut *mut QsymkitElement,
) -> QsymkitStatus {
    guard(|| {
        out_arg(out)?;
        let c = ref_arg(e, "element")?.inner.in_basis(str_arg(basis, "basis")?)?;
        *out = give_element(c);
        Ok(())
    })
}

/// Canonical text. With `normalized`, Psi and p coefficients are shown
/// multiplied by `z` and followed by `/z`.
///
/// # Safety
/// `e` must be a live element; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qsymkit_element_to_text(
    e: *const QsymkitElement,
    normalized: bool,
    out: *mut *mut c_char,
) -> QsymkitStatus {
    guard(|| {
        out_arg(out)?;
        *out = give_string(ref_arg(e, "element")?.inner.to_text(normalized));
        Ok(())
    })
}

/// JSON form, compact.
///
/// # Safety
/// `e` must be a live element; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qsymkit_element_to_json(e: *const QsymkitElement, out: *mut *mut c_char) -> QsymkitStatus {
    guard(|| {
        out_arg(out)?;
        *out = give_string(ref_arg(e, "element")?.inner.to_json().to_string());
        Ok(())
    })
}

/// Equality as functions, regardless of basis.
///
/// # Safety
/// `a` and `b` must be live elements; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qsymkit_element_equal(
    a: *const QsymkitElement,
    b: *const QsymkitElement,
    out: *mut bool,
) -> QsymkitStatus {
    guard(|| {
        out_arg(out)?;
        let qa = as_qsym(&ref_arg(a, "a")?.inner);
        let qb = as_qsym(&ref_arg(b, "b")?.inner);
        *out = qa.degree() == qb.degree() && qa == qb;
        Ok(())
    })
}

fn as_qsym(e: &Elem) -> qsymkit::QSymElement {
    match e {
        Elem::Q(q) => q.clone(),
        Elem::S(s) => s.to_qsym(),
    }
}

/// # Safety
/// `e` must come from this library and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn qsymkit_element_free(e: *mut QsymkitElement) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// Reads `{"n":N,"covers":[[i,j],...],"labels":[...]}`; labels default to a
/// natural labeling.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qsymkit_poset_from_json(json: *const c_char, out: *mut *mut QsymkitPoset) -> QsymkitStatus {
    guard(|| {
        out_arg(out)?;
        let v: serde_json::Value = serde_json::from_str(str_arg(json, "json")?)
            .map_err(|e| Fail(QsymkitStatus::InvalidInput, e.to_string()))?;
        *out = Box::into_raw(Box::new(QsymkitPoset { inner: poset_from_json(&v)? }));
        Ok(())
    })
}

/// # Safety
/// `p` must be a live poset; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qsymkit_poset_linear_extensions(p: *const QsymkitPoset, out: *mut u64) -> QsymkitStatus {
    guard(|| {
        out_arg(out)?;
        *out = ref_arg(p, "poset")?.inner.poset.count_linear_extensions() as u64;
        Ok(())
    })
}

/// # Safety
/// `p` must come from this library and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn qsymkit_poset_free(p: *mut QsymkitPoset) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Psi expansion of `K_P` for a naturally labeled poset. `route` is `all`,
/// `F`, `Lstar` or `Ostar`; with `all` the routes are compared and a
/// disagreement returns `CHECK_FAILED` without an element.
///
/// # Safety
/// `p` must be a live poset, `route` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qsymkit_kp_psi(
    p: *const QsymkitPoset,
    route: *const c_char,
    out: *mut *mut QsymkitElement,
) -> QsymkitStatus {
    guard(|| {
        out_arg(out)?;
        let route = Route::parse(str_arg(route, "route")?)?;
        let r = kp_psi(&ref_arg(p, "poset")?.inner, route)?;
        if let Some(c) = r.checks.iter().find(|c| !c.passed) {
            return Err(Fail(QsymkitStatus::CheckFailed, format!("check failed: {}", c.name)));
        }
        *out = give_element(Elem::Q(r.element));
        Ok(())
    })
}

/// Runs a verification suite; `n` of zero means the suite default. Writes
/// the number of failed checks to `failed` and returns `CHECK_FAILED` if it
/// is nonzero, with the first failure as the last error.
///
/// # Safety
/// `suite` must be a NUL-terminated string; `failed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qsymkit_verify(suite: *const c_char, n: usize, failed: *mut usize) -> QsymkitStatus {
    guard(|| {
        out_arg(failed)?;
        let suite = Suite::parse(str_arg(suite, "suite")?)?;
        let checks = run_suite(suite, (n > 0).then_some(n));
        let bad: Vec<_> = checks.iter().filter(|c| !c.passed).collect();
        *failed = bad.len();
        match bad.first() {
            Some(c) => {
                Err(Fail(QsymkitStatus::CheckFailed, format!("{}: {}", c.name, c.witness.as_deref().unwrap_or(""))))
            }
            None => Ok(()),
        }
    })
}
