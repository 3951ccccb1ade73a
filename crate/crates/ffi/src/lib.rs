//! C interface to `grfix`.
//!
//! Every fallible function returns a [`GrfixStatus`] and writes its result
//! through an out-pointer. On failure, [`grfix_last_error`] describes the
//! most recent error on the calling thread. Strings returned by the library
//! are freed with [`grfix_string_free`]; ideals with [`grfix_ideal_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use grfix::combinatorics::Partition;
use grfix::grassmann::{dual_check, shuffle_ideal, shuffle_rank, NilpotentMatrix, ShuffleIdeal};
use grfix::groebner::{member_with, Budget, Status};
use grfix::pipeline::{analyze, AnalyzeOptions};
use grfix::schubert::{grassfixed_dim, schubert_dim, Basis, RectangularContext};
use grfix::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrfixStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    Timeout = 4,
    UnitIdeal = 5,
    Internal = 6,
}

/// One analyzed cell. `delta` and `gamma` are meaningful only when
/// `complete` is true.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GrfixRecord {
    pub sigma: u64,
    pub delta: i64,
    pub gamma: u64,
    pub complete: bool,
}

/// A shuffle ideal: shuffle equations plus Plücker quadrics.
pub struct GrfixIdeal {
    inner: ShuffleIdeal,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> GrfixStatus {
    match e {
        Error::Domain(_) => GrfixStatus::InvalidArgument,
        Error::Parse(_) => GrfixStatus::Parse,
        Error::Timeout(_) => GrfixStatus::Timeout,
        Error::UnitIdeal => GrfixStatus::UnitIdeal,
    }
}

enum Fail {
    Null,
    Lib(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> GrfixStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => GrfixStatus::Ok,
        Ok(Err(Fail::Null)) => {
            set_error("null pointer argument");
            GrfixStatus::NullPointer
        }
        Ok(Err(Fail::Lib(e))) => {
            set_error(&e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal error");
            GrfixStatus::Internal
        }
    }
}

/// # Safety
/// `parts` must point to `len` readable values, or be null when `len == 0`.
unsafe fn partition(parts: *const u32, len: usize) -> Result<Partition, Fail> {
    if len == 0 {
        return Ok(Partition::empty());
    }
    if parts.is_null() {
        return Err(Fail::Null);
    }
    let slice = std::slice::from_raw_parts(parts, len);
    Ok(Partition::new(slice.iter().map(|&p| p as usize).collect::<Vec<_>>())?)
}

fn budget(seconds: f64) -> Budget {
    if seconds > 0.0 {
        Budget::seconds(seconds)
    } else {
        Budget::unlimited()
    }
}

fn out<T>(ptr: *mut T) -> Result<&'static mut T, Fail> {
    // SAFETY: checked non-null; callers promise validity for the call
    unsafe { ptr.as_mut() }.ok_or(Fail::Null)
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn grfix_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn grfix_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Rank of the shuffle equations of `T_λ` on `Gr(l, n)`.
///
/// # Safety
/// `parts` points to `len` values; `sigma` is writable.
#[no_mangle]
pub unsafe extern "C" fn grfix_shuffle_rank(parts: *const u32, len: usize, l: u32, sigma: *mut u64) -> GrfixStatus {
    guard(|| {
        let lambda = partition(parts, len)?;
        *out(sigma)? = shuffle_rank(&lambda, l as usize)? as u64;
        Ok(())
    })
}

/// `[σ, δ, γ]` for `T_λ` on `Gr(l, n)`. A non-positive budget is unlimited;
/// running out of budget returns `GRFIX_STATUS_OK` with `complete = false`.
///
/// # Safety
/// `parts` points to `len` values; `record` is writable.
#[no_mangle]
pub unsafe extern "C" fn grfix_analyze(
    parts: *const u32,
    len: usize,
    l: u32,
    budget_seconds: f64,
    record: *mut GrfixRecord,
) -> GrfixStatus {
    guard(|| {
        let lambda = partition(parts, len)?;
        let opts = AnalyzeOptions {
            budget: (budget_seconds > 0.0).then_some(budget_seconds),
            ..Default::default()
        };
        let r = analyze(&lambda, l as usize, &opts)?;
        *out(record)? = GrfixRecord {
            sigma: r.sigma as u64,
            delta: r.delta.unwrap_or(-1),
            gamma: r.gamma.unwrap_or(0),
            complete: r.status == Status::Complete,
        };
        Ok(())
    })
}

/// Builds the shuffle ideal of `T_λ` on `Gr(l, n)`.
///
/// # Safety
/// `parts` points to `len` values; `ideal` is writable. The result must be
/// released with [`grfix_ideal_free`].
#[no_mangle]
pub unsafe extern "C" fn grfix_ideal_new(parts: *const u32, len: usize, l: u32, ideal: *mut *mut GrfixIdeal) -> GrfixStatus {
    guard(|| {
        let lambda = partition(parts, len)?;
        let slot = out(ideal)?;
        let inner = shuffle_ideal(&NilpotentMatrix::jordan(&lambda)?, l as usize)?;
        *slot = Box::into_raw(Box::new(GrfixIdeal { inner }));
        Ok(())
    })
}

/// # Safety
/// `ideal` must be null or a pointer from [`grfix_ideal_new`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn grfix_ideal_free(ideal: *mut GrfixIdeal) {
    if !ideal.is_null() {
        drop(Box::from_raw(ideal));
    }
}

/// Number of generators: shuffle basis followed by quadrics.
///
/// # Safety
/// `ideal` comes from [`grfix_ideal_new`]; `count` is writable.
#[no_mangle]
pub unsafe extern "C" fn grfix_ideal_len(ideal: *const GrfixIdeal, count: *mut usize) -> GrfixStatus {
    guard(|| {
        let ideal = ideal.as_ref().ok_or(Fail::Null)?;
        *out(count)? = ideal.inner.linear.sigma() + ideal.inner.quadrics.len();
        Ok(())
    })
}

/// The ideal in text form: a `# ring p, n=<n>, l=<l>` header and one
/// generator per line. Free the string with [`grfix_string_free`].
///
/// # Safety
/// `ideal` comes from [`grfix_ideal_new`]; `text` is writable.
#[no_mangle]
pub unsafe extern "C" fn grfix_ideal_to_string(ideal: *const GrfixIdeal, text: *mut *mut c_char) -> GrfixStatus {
    guard(|| {
        let ideal = ideal.as_ref().ok_or(Fail::Null)?;
        let slot = out(text)?;
        let s = ideal.inner.to_text()?;
        *slot = CString::new(s).map_err(|e| Error::Parse(e.to_string()))?.into_raw();
        Ok(())
    })
}

/// Whether `poly` (text form, e.g. `p_{1,4,6,8}^2`) lies in the ideal.
///
/// # Safety
/// `ideal` comes from [`grfix_ideal_new`]; `poly` is a NUL-terminated
/// string; `member` is writable.
#[no_mangle]
pub unsafe extern "C" fn grfix_ideal_member(
    ideal: *const GrfixIdeal,
    poly: *const c_char,
    budget_seconds: f64,
    member: *mut bool,
) -> GrfixStatus {
    guard(|| {
        let ideal = ideal.as_ref().ok_or(Fail::Null)?;
        if poly.is_null() {
            return Err(Fail::Null);
        }
        let text = CStr::from_ptr(poly).to_str().map_err(|e| Error::Parse(e.to_string()))?;
        let slot = out(member)?;
        let p = ideal.inner.ring()?.parse(text)?;
        let j = &ideal.inner;
        *slot = member_with(&p, &j.generators(), j.nvars(), budget(budget_seconds))?;
        Ok(())
    })
}

/// Whether duality carries the shuffle span for `l` onto the one for `n - l`.
///
/// # Safety
/// `parts` points to `len` values; `dual` is writable.
#[no_mangle]
pub unsafe extern "C" fn grfix_dual_check(parts: *const u32, len: usize, l: u32, dual: *mut bool) -> GrfixStatus {
    guard(|| {
        let lambda = partition(parts, len)?;
        *out(dual)? = dual_check(&lambda, l as usize)?;
        Ok(())
    })
}

/// Dimension of the Schubert variety `W_μ` for `λ = (r,…,r)` with `d` parts.
///
/// # Safety
/// `mu` points to `len` values; `dim` is writable.
#[no_mangle]
pub unsafe extern "C" fn grfix_schubert_dim(d: u32, r: u32, mu: *const u32, len: usize, dim: *mut u64) -> GrfixStatus {
    guard(|| {
        let mu = partition(mu, len)?;
        let ctx = RectangularContext::new(d as usize, r as usize, Basis::Power)?;
        *out(dim)? = schubert_dim(&mu, &ctx)? as u64;
        Ok(())
    })
}

/// Dimension of `Gr(l, dr)^T` for `λ = (r,…,r)` with `d` parts.
///
/// # Safety
/// `dim` is writable.
#[no_mangle]
pub unsafe extern "C" fn grfix_grassfixed_dim(d: u32, r: u32, l: u32, dim: *mut u64) -> GrfixStatus {
    guard(|| {
        let ctx = RectangularContext::new(d as usize, r as usize, Basis::Power)?;
        *out(dim)? = grassfixed_dim(&ctx, l as usize)? as u64;
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn last_error() -> String {
        let p = grfix_last_error();
        assert!(!p.is_null());
        unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
    }

    #[test]
    fn rank_and_analyze() {
        let parts = [4u32, 2, 2];
        let mut sigma = 0;
        assert_eq!(unsafe { grfix_shuffle_rank(parts.as_ptr(), 3, 4, &mut sigma) }, GrfixStatus::Ok);
        assert_eq!(sigma, 54);
        let mut rec = GrfixRecord::default();
        assert_eq!(unsafe { grfix_analyze(parts.as_ptr(), 3, 4, 0.0, &mut rec) }, GrfixStatus::Ok);
        assert_eq!(rec, GrfixRecord { sigma: 54, delta: 4, gamma: 24, complete: true });
    }

    #[test]
    fn errors() {
        let bad = [1u32, 2];
        let mut sigma = 0;
        assert_eq!(unsafe { grfix_shuffle_rank(bad.as_ptr(), 2, 1, &mut sigma) }, GrfixStatus::InvalidArgument);
        assert!(!last_error().is_empty());
        assert_eq!(unsafe { grfix_shuffle_rank(ptr::null(), 2, 1, &mut sigma) }, GrfixStatus::NullPointer);
        let parts = [2u32, 1];
        assert_eq!(unsafe { grfix_shuffle_rank(parts.as_ptr(), 2, 1, ptr::null_mut()) }, GrfixStatus::NullPointer);
        assert_eq!(unsafe { grfix_shuffle_rank(parts.as_ptr(), 2, 5, &mut sigma) }, GrfixStatus::InvalidArgument);
    }

    #[test]
    fn ideal_handle() {
        let parts = [4u32, 2, 2];
        let mut ideal = ptr::null_mut();
        assert_eq!(unsafe { grfix_ideal_new(parts.as_ptr(), 3, 4, &mut ideal) }, GrfixStatus::Ok);
        let mut count = 0;
        assert_eq!(unsafe { grfix_ideal_len(ideal, &mut count) }, GrfixStatus::Ok);
        assert!(count > 54);
        let mut text = ptr::null_mut();
        assert_eq!(unsafe { grfix_ideal_to_string(ideal, &mut text) }, GrfixStatus::Ok);
        let s = unsafe { CStr::from_ptr(text) }.to_str().unwrap().to_owned();
        assert!(s.starts_with("# ring p, n=8, l=4\n"));
        unsafe { grfix_string_free(text) };
        let mut member = true;
        let p = CString::new("p_{1,4,6,8}").unwrap();
        assert_eq!(unsafe { grfix_ideal_member(ideal, p.as_ptr(), 0.0, &mut member) }, GrfixStatus::Ok);
        assert!(!member);
        let p = CString::new("p_{1,4,6,8}^2").unwrap();
        assert_eq!(unsafe { grfix_ideal_member(ideal, p.as_ptr(), 0.0, &mut member) }, GrfixStatus::Ok);
        assert!(member);
        let p = CString::new("p_{1,4,6,9}").unwrap();
        assert_eq!(unsafe { grfix_ideal_member(ideal, p.as_ptr(), 0.0, &mut member) }, GrfixStatus::Parse);
        unsafe { grfix_ideal_free(ideal) };
        unsafe { grfix_ideal_free(ptr::null_mut()) };
        unsafe { grfix_string_free(ptr::null_mut()) };
    }

    #[test]
    fn dimensions_and_duality() {
        let mu = [2u32, 1];
        let mut dim = 0;
        assert_eq!(unsafe { grfix_schubert_dim(3, 2, mu.as_ptr(), 2, &mut dim) }, GrfixStatus::Ok);
        assert_eq!(dim, 4);
        assert_eq!(unsafe { grfix_grassfixed_dim(4, 2, 4, &mut dim) }, GrfixStatus::Ok);
        assert_eq!(dim, 8);
        assert_eq!(unsafe { grfix_grassfixed_dim(4, 2, 9, &mut dim) }, GrfixStatus::InvalidArgument);
        let parts = [3u32, 1, 1, 1];
        let mut dual = false;
        assert_eq!(unsafe { grfix_dual_check(parts.as_ptr(), 4, 2, &mut dual) }, GrfixStatus::Ok);
        assert!(dual);
    }
}
