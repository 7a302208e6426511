//! C interface. Objects are opaque handles released with the matching
//! `*_free`; every fallible call returns an [`HfStatus`] and, on failure,
//! leaves a message for [`hf_last_error_message`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use hallfrob::exactalg::{cyclo_norm_zeta2_minus_q, SurdElt};
use hallfrob::freealg::{FreeAlgebra, DEFAULT_WORD_CAP};
use hallfrob::hall::{cartan_from_quiver, preset, serre_check, QuiverWithAut, RepModel};
use hallfrob::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    NotPrime = 3,
    CapExceeded = 4,
    Hypothesis = 5,
    Mismatch = 6,
    InvalidQuiver = 7,
    InvalidCartan = 8,
    Interpolation = 9,
    Io = 10,
    Json = 11,
    Panic = 12,
}

/// A quiver with automorphism.
pub struct HfQuiver(QuiverWithAut);

/// Representation spaces of a quiver over one finite field.
pub struct HfModel(Arc<RepModel>);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> HfStatus {
    match e {
        Error::InvalidInput(_) => HfStatus::InvalidInput,
        Error::NotPrime(_) => HfStatus::NotPrime,
        Error::CapExceeded { .. } => HfStatus::CapExceeded,
        Error::Hypothesis(_) => HfStatus::Hypothesis,
        Error::Mismatch(_) => HfStatus::Mismatch,
        Error::Quiver(_) => HfStatus::InvalidQuiver,
        Error::Cartan(_) => HfStatus::InvalidCartan,
        Error::Interpolation(_) => HfStatus::Interpolation,
        Error::Io(_) => HfStatus::Io,
        Error::Json(_) => HfStatus::Json,
    }
}

enum Fail {
    Null(&'static str),
    Lib(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> HfStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HfStatus::Ok,
        Ok(Err(Fail::Null(what))) => {
            set_error(format!("null pointer: {what}"));
            HfStatus::NullPointer
        }
        Ok(Err(Fail::Lib(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic".into());
            HfStatus::Panic
        }
    }
}

unsafe fn nonnull<'a, T>(p: *const T, what: &'static str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or(Fail::Null(what))
}

unsafe fn c_str<'a>(p: *const c_char, what: &'static str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail::Null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail::Lib(Error::InvalidInput(format!("{what} is not UTF-8"))))
}

unsafe fn dims<'a>(nu: *const usize, len: usize) -> Result<&'a [usize], Fail> {
    if len == 0 {
        return Ok(&[]);
    }
    if nu.is_null() {
        return Err(Fail::Null("nu"));
    }
    Ok(std::slice::from_raw_parts(nu, len))
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail::Null("out"));
    }
    out.write(v);
    Ok(())
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior nul").into_raw()
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn hf_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn hf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Built-in quiver by name.
///
/// # Safety
/// `name` is a nul-terminated string and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hf_quiver_preset(name: *const c_char, out: *mut *mut HfQuiver) -> HfStatus {
    guard(|| {
        let q = preset(c_str(name, "name")?)?;
        put(out, Box::into_raw(Box::new(HfQuiver(q))))
    })
}

/// Quiver from its JSON description.
///
/// # Safety
/// `json` is a nul-terminated string and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hf_quiver_from_json(json: *const c_char, out: *mut *mut HfQuiver) -> HfStatus {
    guard(|| {
        let q = QuiverWithAut::from_json(c_str(json, "json")?)?;
        put(out, Box::into_raw(Box::new(HfQuiver(q))))
    })
}

/// # Safety
/// `q` is null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn hf_quiver_free(q: *mut HfQuiver) {
    if !q.is_null() {
        drop(Box::from_raw(q));
    }
}

/// Number of vertex orbits.
///
/// # Safety
/// `q` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hf_quiver_rank(q: *const HfQuiver, out: *mut usize) -> HfStatus {
    guard(|| put(out, nonnull(q, "quiver")?.0.vertex_orbits().len()))
}

/// Representation spaces over `F_q`.
///
/// # Safety
/// `quiver` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hf_model_new(quiver: *const HfQuiver, q: u64, out: *mut *mut HfModel) -> HfStatus {
    guard(|| {
        let m = RepModel::new(&nonnull(quiver, "quiver")?.0, q)?;
        put(out, Box::into_raw(Box::new(HfModel(m))))
    })
}

/// # Safety
/// `m` is null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn hf_model_free(m: *mut HfModel) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Number of rational points of the representation space of dimension
/// `nu`, as a decimal string to be released with [`hf_string_free`].
///
/// # Safety
/// `m` is a live handle, `nu` holds `len` entries and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hf_model_point_count(
    m: *const HfModel,
    nu: *const usize,
    len: usize,
    out: *mut *mut c_char,
) -> HfStatus {
    guard(|| {
        let m = &nonnull(m, "model")?.0;
        let nu = dims(nu, len)?;
        if nu.len() != m.rank() {
            return Err(Error::Mismatch(format!("{} entries for {} vertex orbits", nu.len(), m.rank())).into());
        }
        put(out, owned_string(m.point_count(nu).to_string()))
    })
}

/// Number of classes the model stores for dimension `nu`.
///
/// # Safety
/// `m` is a live handle, `nu` holds `len` entries and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hf_model_class_count(
    m: *const HfModel,
    nu: *const usize,
    len: usize,
    out: *mut usize,
) -> HfStatus {
    guard(|| {
        let m = &nonnull(m, "model")?.0;
        let nu = dims(nu, len)?;
        if nu.len() != m.rank() {
            return Err(Error::Mismatch(format!("{} entries for {} vertex orbits", nu.len(), m.rank())).into());
        }
        put(out, m.classes(nu)?.len())
    })
}

/// Whether the quantum Serre relation between orbits `i` and `j` holds.
///
/// # Safety
/// `m` is a live handle and `passed` is writable.
#[no_mangle]
pub unsafe extern "C" fn hf_serre_check(m: *const HfModel, i: usize, j: usize, passed: *mut bool) -> HfStatus {
    guard(|| {
        let m = &nonnull(m, "model")?.0;
        if i >= m.rank() || j >= m.rank() || i == j {
            return Err(Error::InvalidInput(format!("bad orbit pair ({i}, {j})")).into());
        }
        let r = serre_check(m, i, j, &SurdElt::twist(m.q()))?;
        put(passed, r.passed)
    })
}

/// Dimension of the graded piece `nu` of the quotient of the free algebra
/// by the radical of its form.
///
/// # Safety
/// `quiver` is a live handle, `nu` holds `len` entries and `out` is
/// writable.
#[no_mangle]
pub unsafe extern "C" fn hf_f_dimension(
    quiver: *const HfQuiver,
    nu: *const usize,
    len: usize,
    out: *mut usize,
) -> HfStatus {
    guard(|| {
        let c = cartan_from_quiver(&nonnull(quiver, "quiver")?.0)?;
        let alg = FreeAlgebra::new(&c)?;
        let nu = dims(nu, len)?;
        if nu.len() != alg.rank() {
            return Err(Error::Mismatch(format!("{} entries for rank {}", nu.len(), alg.rank())).into());
        }
        put(out, alg.f_dimension(nu, DEFAULT_WORD_CAP)?)
    })
}

/// Norm of `zeta^2 - q` for a primitive `2 l`-th root of unity, as a
/// decimal string.
///
/// # Safety
/// `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hf_cyclo_norm(ell: u64, q: u64, out: *mut *mut c_char) -> HfStatus {
    guard(|| {
        if ell == 0 {
            return Err(Error::InvalidInput("l must be positive".into()).into());
        }
        put(out, owned_string(cyclo_norm_zeta2_minus_q(ell, q).to_string()))
    })
}
