//! C ABI over the `lcmbetti` engine.
//!
//! Objects cross the boundary as opaque handles that the caller releases
//! with the matching `*_free` function. Every fallible call returns an
//! [`LbStatus`]; the message of the most recent failure on the calling
//! thread is available from [`lb_last_error`]. Panics never unwind into C.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use lcmbetti::betti::{betti_tables, BettiOptions, BettiTable};
use lcmbetti::complexes::construct;
use lcmbetti::ideals::text::{ideal_to_text, parse_ideal};
use lcmbetti::ideals::{power_guarded, MonomialIdeal};
use lcmbetti::{Error, FieldSpec};

/// Result codes. Values are stable.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LbStatus {
    Ok = 0,
    /// A required pointer argument was NULL.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Malformed ideal text or field name.
    Parse = 3,
    /// Mathematically invalid request (bad field, undefined invariant, ...).
    Domain = 4,
    /// A resource guard tripped.
    Resource = 5,
    /// The output buffer is too small; the needed length was still written.
    BufferTooSmall = 6,
    /// Internal failure; the engine panicked.
    Internal = 7,
}

/// Opaque monomial ideal.
pub struct LbIdeal(MonomialIdeal);

/// Opaque Betti table over one field.
pub struct LbBettiTable(BettiTable);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: LbStatus, msg: &str) -> LbStatus {
    set_error(msg);
    status
}

fn from_error(e: &Error) -> LbStatus {
    let status = match e {
        Error::Resource(_) => LbStatus::Resource,
        Error::Parse { .. } | Error::Json(_) | Error::InvalidField(_) => LbStatus::Parse,
        Error::Io { .. } => LbStatus::Internal,
        _ => LbStatus::Domain,
    };
    fail(status, &e.to_string())
}

/// Runs `f`, turning a panic into [`LbStatus::Internal`].
fn guarded(f: impl FnOnce() -> LbStatus) -> LbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(LbStatus::Internal, "internal panic"),
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, LbStatus> {
    if s.is_null() {
        return Err(fail(LbStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(LbStatus::InvalidUtf8, "string argument is not UTF-8"))
}

unsafe fn write_string(s: String, out: *mut *mut c_char) -> LbStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            LbStatus::Ok
        }
        Err(_) => fail(LbStatus::Internal, "output contains a nul byte"),
    }
}

macro_rules! check_null {
    ($($p:expr),+) => {
        $(if $p.is_null() {
            return fail(LbStatus::NullPointer, concat!("`", stringify!($p), "` is null"));
        })+
    };
}

/// Message of the last failed call on this thread, or NULL. The pointer is
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn lb_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn lb_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses the plain-text ideal format.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lb_ideal_parse(text: *const c_char, out: *mut *mut LbIdeal) -> LbStatus {
    check_null!(out);
    guarded(|| {
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match parse_ideal(text) {
            Ok(i) => {
                *out = Box::into_raw(Box::new(LbIdeal(i)));
                LbStatus::Ok
            }
            Err(e) => from_error(&e),
        }
    })
}

/// Builds a named ideal (`rp2`, `kty`, `dunce_cap`, ...). `p` is the
/// construction parameter; pass 0 when there is none.
///
/// # Safety
/// `name` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lb_ideal_construct(name: *const c_char, p: u32, out: *mut *mut LbIdeal) -> LbStatus {
    check_null!(out);
    guarded(|| {
        let name = match read_str(name) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match construct(name, (p > 0).then_some(p)) {
            Ok(c) => {
                *out = Box::into_raw(Box::new(LbIdeal(c.ideal())));
                LbStatus::Ok
            }
            Err(e) => from_error(&e),
        }
    })
}

/// Releases an ideal. NULL is ignored.
///
/// # Safety
/// `ideal` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn lb_ideal_free(ideal: *mut LbIdeal) {
    if !ideal.is_null() {
        drop(Box::from_raw(ideal));
    }
}

/// Number of minimal generators; 0 for NULL.
///
/// # Safety
/// `ideal` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lb_ideal_num_generators(ideal: *const LbIdeal) -> usize {
    ideal.as_ref().map_or(0, |i| i.0.num_generators())
}

/// Minimal generators of `ideal^h` as a new handle.
///
/// # Safety
/// `ideal` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lb_ideal_power(ideal: *const LbIdeal, h: u32, out: *mut *mut LbIdeal) -> LbStatus {
    check_null!(ideal, out);
    guarded(|| {
        let i = &(*ideal).0;
        match power_guarded(i, h, lcmbetti::Guards::default().max_generators) {
            Ok(p) => {
                *out = Box::into_raw(Box::new(LbIdeal(p)));
                LbStatus::Ok
            }
            Err(e) => from_error(&e),
        }
    })
}

/// Canonical text of the ideal; release with [`lb_string_free`].
///
/// # Safety
/// `ideal` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lb_ideal_to_string(ideal: *const LbIdeal, out: *mut *mut c_char) -> LbStatus {
    check_null!(ideal, out);
    guarded(|| write_string(ideal_to_text(&(*ideal).0), out))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn lb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Multigraded Betti table of `ideal` over `field` (`"Q"` or `"F<p>"`).
///
/// # Safety
/// `ideal` must be a live handle, `field` a nul-terminated string and `out`
/// a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lb_betti_compute(
    ideal: *const LbIdeal,
    field: *const c_char,
    out: *mut *mut LbBettiTable,
) -> LbStatus {
    check_null!(ideal, out);
    guarded(|| {
        let field: FieldSpec = match read_str(field).map(str::parse) {
            Ok(Ok(f)) => f,
            Ok(Err(e)) => return from_error(&e),
            Err(s) => return s,
        };
        match betti_tables(&(*ideal).0, &[field], &BettiOptions::default()) {
            Ok(mut t) => {
                *out = Box::into_raw(Box::new(LbBettiTable(t.remove(0))));
                LbStatus::Ok
            }
            Err(e) => from_error(&e),
        }
    })
}

/// Releases a table. NULL is ignored.
///
/// # Safety
/// `table` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn lb_betti_free(table: *mut LbBettiTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// Copies the total Betti numbers `β_0, β_1, …` into `buf`. `len` receives
/// the full length even when `cap` is too small.
///
/// # Safety
/// `table` must be a live handle, `len` valid, and `buf` valid for `cap`
/// writes (it may be NULL when `cap` is 0).
#[no_mangle]
pub unsafe extern "C" fn lb_betti_total(
    table: *const LbBettiTable,
    buf: *mut u64,
    cap: usize,
    len: *mut usize,
) -> LbStatus {
    check_null!(table, len);
    let total = (*table).0.total();
    *len = total.len();
    if total.len() > cap {
        return fail(LbStatus::BufferTooSmall, "buffer too small for the total Betti numbers");
    }
    if !total.is_empty() {
        check_null!(buf);
        ptr::copy_nonoverlapping(total.as_ptr(), buf, total.len());
    }
    LbStatus::Ok
}

/// Projective dimension of the ideal.
///
/// # Safety
/// `table` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lb_betti_pd(table: *const LbBettiTable, out: *mut usize) -> LbStatus {
    check_null!(table, out);
    match (*table).0.pd() {
        Ok(v) => {
            *out = v;
            LbStatus::Ok
        }
        Err(e) => from_error(&e),
    }
}

/// Castelnuovo-Mumford regularity of the ideal.
///
/// # Safety
/// `table` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lb_betti_reg(table: *const LbBettiTable, out: *mut i64) -> LbStatus {
    check_null!(table, out);
    match (*table).0.reg() {
        Ok(v) => {
            *out = v;
            LbStatus::Ok
        }
        Err(e) => from_error(&e),
    }
}

/// JSON rendering of the table; release with [`lb_string_free`].
///
/// # Safety
/// `table` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lb_betti_to_json(table: *const LbBettiTable, out: *mut *mut c_char) -> LbStatus {
    check_null!(table, out);
    guarded(|| write_string((*table).0.to_json(), out))
}
