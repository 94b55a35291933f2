//! C ABI over `fusion-obstruct`.
//!
//! Rings are opaque `FoRing` handles. Every fallible call returns an
//! `FoStatus`; on failure `fo_last_error` describes what went wrong on the
//! calling thread. Labels passed through `set` arguments are 0-based.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use fusion_obstruct::criteria::{self, CriterionSpec, TwistPattern};
use fusion_obstruct::{io, EvalConfig, Fixture, FusionRing, PsdVerdict};

/// Opaque ring handle.
pub struct FoRing {
    ring: FusionRing,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FoStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    EvalError = 5,
    BufferTooSmall = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FoVerdict {
    Holds = 0,
    Violated = 1,
    Inconclusive = 2,
}

/// Verdict with its bracket on `λ_min`; `rayleigh` is the witness quotient
/// when violated, the bracket midpoint otherwise.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct FoResult {
    pub verdict: FoVerdict,
    pub lower: f64,
    pub upper: f64,
    pub rayleigh: f64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(s).ok());
}

fn fail(status: FoStatus, msg: impl Into<String>) -> FoStatus {
    set_error(msg);
    status
}

/// Runs `f`, turning panics into `FoStatus::Panic`.
fn guard(f: impl FnOnce() -> FoStatus) -> FoStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            fail(FoStatus::Panic, msg)
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, FoStatus> {
    if p.is_null() {
        return Err(fail(FoStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p).to_str().map_err(|_| fail(FoStatus::InvalidUtf8, "string is not valid UTF-8"))
}

fn store(out: *mut *mut FoRing, ring: FusionRing) -> FoStatus {
    // SAFETY: callers checked `out` for null
    unsafe { *out = Box::into_raw(Box::new(FoRing { ring })) };
    FoStatus::Ok
}

/// Parses a ring from text (plain or JSON format). On success `*out` owns a
/// handle to be released with `fo_ring_free`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fo_ring_parse(text: *const c_char, out: *mut *mut FoRing) -> FoStatus {
    guard(|| {
        if out.is_null() {
            return fail(FoStatus::NullPointer, "null output pointer");
        }
        let text = match str_arg(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match io::parse_ring_str(text, "ring") {
            Ok(r) => store(out, r),
            Err(e) => fail(FoStatus::ParseError, e.to_string()),
        }
    })
}

/// Loads a built-in ring such as `k7`, `rank8_1` or `cyclic_5`.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fo_ring_fixture(name: *const c_char, out: *mut *mut FoRing) -> FoStatus {
    guard(|| {
        if out.is_null() {
            return fail(FoStatus::NullPointer, "null output pointer");
        }
        let name = match str_arg(name) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match Fixture::parse(name).map(|f| f.ring()) {
            Some(Ok(r)) => store(out, r),
            Some(Err(e)) => fail(FoStatus::InvalidArgument, e.to_string()),
            None => fail(FoStatus::InvalidArgument, format!("unknown built-in ring `{name}`")),
        }
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `ring` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn fo_ring_free(ring: *mut FoRing) {
    if !ring.is_null() {
        drop(Box::from_raw(ring));
    }
}

/// Rank, or 0 for a null handle.
///
/// # Safety
/// `ring` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fo_ring_rank(ring: *const FoRing) -> usize {
    ring.as_ref().map_or(0, |r| r.ring.rank())
}

/// Copies the Frobenius–Perron dimensions into `out[0..len]`.
///
/// # Safety
/// `ring` must be a live handle and `out` must hold `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn fo_ring_dims(ring: *const FoRing, out: *mut f64, len: usize) -> FoStatus {
    guard(|| {
        let Some(r) = ring.as_ref() else {
            return fail(FoStatus::NullPointer, "null ring");
        };
        if out.is_null() {
            return fail(FoStatus::NullPointer, "null output buffer");
        }
        let d = &r.ring.dims().values;
        if len < d.len() {
            return fail(FoStatus::BufferTooSmall, format!("need {} entries", d.len()));
        }
        ptr::copy_nonoverlapping(d.as_ptr(), out, d.len());
        FoStatus::Ok
    })
}

fn write_result(v: &PsdVerdict, out: *mut FoResult) -> FoStatus {
    let i = v.interval();
    let (verdict, rayleigh) = match v {
        PsdVerdict::Holds { .. } => (FoVerdict::Holds, 0.5 * (i.lower + i.upper)),
        PsdVerdict::Inconclusive { .. } => (FoVerdict::Inconclusive, 0.5 * (i.lower + i.upper)),
        PsdVerdict::Violated(w) => (FoVerdict::Violated, w.rayleigh),
    };
    // SAFETY: callers checked `out` for null
    unsafe {
        *out = FoResult {
            verdict,
            lower: i.lower,
            upper: i.upper,
            rayleigh,
        }
    };
    FoStatus::Ok
}

unsafe fn evaluate(ring: *const FoRing, out: *mut FoResult, spec: impl FnOnce(&FusionRing) -> Result<CriterionSpec, FoStatus>) -> FoStatus {
    guard(|| {
        let Some(r) = ring.as_ref() else {
            return fail(FoStatus::NullPointer, "null ring");
        };
        if out.is_null() {
            return fail(FoStatus::NullPointer, "null result pointer");
        }
        let spec = match spec(&r.ring) {
            Ok(s) => s,
            Err(s) => return s,
        };
        match criteria::check(&r.ring, &spec, &EvalConfig::from_env()) {
            Ok(v) => write_result(&v, out),
            Err(e) => fail(FoStatus::EvalError, e.to_string()),
        }
    })
}

unsafe fn set_arg(set: *const usize, len: usize) -> Result<Vec<usize>, FoStatus> {
    if set.is_null() || len == 0 {
        return Err(fail(FoStatus::InvalidArgument, "empty label set"));
    }
    Ok(std::slice::from_raw_parts(set, len).to_vec())
}

/// Primary criterion at tensor power `n`.
///
/// # Safety
/// `ring` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fo_check_primary(ring: *const FoRing, n: u32, out: *mut FoResult) -> FoStatus {
    evaluate(ring, out, |_| Ok(CriterionSpec::Primary { n: n as usize }))
}

/// Localized criterion on the 0-based labels `set[0..len]`.
///
/// # Safety
/// `ring` must be a live handle, `set` must hold `len` labels and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn fo_check_localized(ring: *const FoRing, set: *const usize, len: usize, n: u32, out: *mut FoResult) -> FoStatus {
    evaluate(ring, out, |_| Ok(CriterionSpec::Localized { set: set_arg(set, len)?, n: n as usize }))
}

/// Reduced (Hadamard-power) criterion; with a non-null `twists` such as
/// `"I,I,swap"` the twisted variant is used and `n` is ignored.
///
/// # Safety
/// As for `fo_check_localized`; `twists` must be null or NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn fo_check_reduced(
    ring: *const FoRing,
    set: *const usize,
    len: usize,
    n: u64,
    twists: *const c_char,
    out: *mut FoResult,
) -> FoStatus {
    evaluate(ring, out, |_| {
        let set = set_arg(set, len)?;
        if twists.is_null() {
            return Ok(CriterionSpec::Reduced { set, n });
        }
        let text = str_arg(twists)?;
        let pattern = TwistPattern::parse(set.len(), text).map_err(|e| fail(FoStatus::InvalidArgument, e.to_string()))?;
        Ok(CriterionSpec::ReducedTwisted { set, pattern })
    })
}

/// Character-table criterion (commutative rings only).
///
/// # Safety
/// `ring` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fo_check_schur(ring: *const FoRing, out: *mut FoResult) -> FoStatus {
    evaluate(ring, out, |_| Ok(CriterionSpec::Schur))
}

/// Copy of the calling thread's last error message, or null. Free with
/// `fo_string_free`.
#[no_mangle]
pub extern "C" fn fo_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null_mut(), |s| s.clone().into_raw()))
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn fo_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version; static storage, do not free.
#[no_mangle]
pub extern "C" fn fo_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
