//! C ABI over `greenbiset`.
//!
//! Catalogs and groups are opaque heap handles released with their `_free`
//! function. Results that are not plain numbers come back as JSON strings
//! owned by the caller and released with [`gb_string_free`]. Every entry
//! point returns a [`GbStatus`]; on failure [`gb_last_error`] describes it.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use greenbiset::biset::{burnside_units, table_of_marks};
use greenbiset::category::EndAlgebra;
use greenbiset::green::{Burnside, MatrixFunctor};
use greenbiset::group::{builtin_catalog, subgroup_classes, Catalog, FiniteGroup};
use greenbiset::scalar::Ring;
use greenbiset::star::{make_star_burnside, make_star_matrix, orthogonal_automorphisms, orthogonal_units};
use greenbiset::verify::{self, Suite, VerifyConfig, DEFAULT_WINDOW};
use greenbiset::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GbStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    UnknownGroup = 4,
    Parse = 5,
    Io = 6,
    /// Any other library error, e.g. a search that is too large.
    Computation = 7,
    /// `gb_verify_json` ran, and at least one check failed.
    VerificationFailed = 8,
    Panic = 9,
}

/// Opaque group catalog.
pub struct GbCatalog(Catalog);

/// Opaque finite group.
pub struct GbGroup(FiniteGroup);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Fail(GbStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::UnknownGroup(_) => GbStatus::UnknownGroup,
            Error::InvalidArgument(_) | Error::RequiresRationals => GbStatus::InvalidArgument,
            Error::Parse(_) | Error::InvalidTable { .. } => GbStatus::Parse,
            Error::Io(_) => GbStatus::Io,
            _ => GbStatus::Computation,
        };
        Fail(status, e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(GbStatus::NullArgument, format!("{what} is null"))
}

/// Runs `f`, turning errors and panics into a status plus last-error text.
fn guard(f: impl FnOnce() -> Result<GbStatus, Fail>) -> GbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err(Fail(s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("internal panic".into());
            GbStatus::Panic
        }
    }
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn string<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(GbStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<GbStatus, Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = v;
    Ok(GbStatus::Ok)
}

unsafe fn put_json(out: *mut *mut c_char, v: &serde_json::Value) -> Result<GbStatus, Fail> {
    let s = CString::new(v.to_string()).expect("JSON has no interior NUL");
    put(out, s.into_raw())
}

fn ring(rational: bool) -> Ring {
    if rational {
        Ring::Rationals
    } else {
        Ring::Integers
    }
}

/// Message for the last failure on this thread, or null. Valid until the
/// next failing call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn gb_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn gb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// A copy of the builtin catalog. Never null.
#[no_mangle]
pub extern "C" fn gb_catalog_builtin() -> *mut GbCatalog {
    Box::into_raw(Box::new(GbCatalog(builtin_catalog().clone())))
}

/// Loads a JSON catalog file merged over the builtin groups.
///
/// # Safety
/// `path` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gb_catalog_load(path: *const c_char, out: *mut *mut GbCatalog) -> GbStatus {
    guard(|| {
        let path = string(path, "path")?;
        let cat = Catalog::load(std::path::Path::new(path))?;
        put(out, Box::into_raw(Box::new(GbCatalog(cat))))
    })
}

/// # Safety
/// `c` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn gb_catalog_free(c: *mut GbCatalog) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Number of groups in the catalog; 0 for null.
///
/// # Safety
/// `c` must be null or a live catalog.
#[no_mangle]
pub unsafe extern "C" fn gb_catalog_len(c: *const GbCatalog) -> usize {
    c.as_ref().map_or(0, |c| c.0.len())
}

/// Looks a group up by name.
///
/// # Safety
/// `c` must be a live catalog, `name` NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gb_group_get(c: *const GbCatalog, name: *const c_char, out: *mut *mut GbGroup) -> GbStatus {
    guard(|| {
        let c = borrow(c, "catalog")?;
        let g = c.0.require(string(name, "name")?)?;
        put(out, Box::into_raw(Box::new(GbGroup(g))))
    })
}

/// # Safety
/// `g` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn gb_group_free(g: *mut GbGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Group order; 0 for null.
///
/// # Safety
/// `g` must be null or a live group.
#[no_mangle]
pub unsafe extern "C" fn gb_group_order(g: *const GbGroup) -> usize {
    g.as_ref().map_or(0, |g| g.0.order())
}

/// Number of conjugacy classes of subgroups; 0 for null.
///
/// # Safety
/// `g` must be null or a live group.
#[no_mangle]
pub unsafe extern "C" fn gb_group_class_count(g: *const GbGroup) -> usize {
    g.as_ref().map_or(0, |g| subgroup_classes(&g.0).len())
}

/// Table of marks as a JSON array of rows.
///
/// # Safety
/// `g` must be a live group and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gb_marks_json(g: *const GbGroup, out: *mut *mut c_char) -> GbStatus {
    guard(|| {
        let g = borrow(g, "group")?;
        put_json(out, &serde_json::json!(table_of_marks(&g.0)))
    })
}

/// Units of the Burnside ring as a JSON array.
///
/// # Safety
/// `g` must be a live group and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gb_units_json(g: *const GbGroup, out: *mut *mut c_char) -> GbStatus {
    guard(|| {
        let g = borrow(g, "group")?;
        let units: Vec<_> = burnside_units(&g.0)?.iter().map(|u| u.to_json()).collect();
        put_json(out, &serde_json::json!(units))
    })
}

/// Composition table of `End(G)` for `B` (`matrix_n == 0`) or `Mn(B)`.
///
/// # Safety
/// `g` must be a live group and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gb_ring_table_json(g: *const GbGroup, matrix_n: u32, rational: bool, out: *mut *mut c_char) -> GbStatus {
    guard(|| {
        let g = &borrow(g, "group")?.0;
        let r = ring(rational);
        let v = match matrix_n {
            0 => EndAlgebra::new(&Burnside, g, r)?.to_json(),
            n => EndAlgebra::new(&MatrixFunctor::new(Burnside, n as usize)?, g, r)?.to_json(),
        };
        put_json(out, &v)
    })
}

/// Bounded search for orthogonal units (`automorphisms == false`) or
/// orthogonal automorphisms, for `B` (`matrix_n == 0`) or `Mn(B)`.
///
/// # Safety
/// `g` must be a live group and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gb_orthogonal_json(
    g: *const GbGroup,
    matrix_n: u32,
    automorphisms: bool,
    bound: u32,
    rational: bool,
    out: *mut *mut c_char,
) -> GbStatus {
    guard(|| {
        let g = &borrow(g, "group")?.0;
        if bound == 0 {
            return Err(Fail(GbStatus::InvalidArgument, "bound must be at least 1".into()));
        }
        let r = ring(rational);
        let sb = make_star_burnside()?;
        let report = match (matrix_n, automorphisms) {
            (0, false) => orthogonal_units(&sb, g, bound, r)?,
            (0, true) => orthogonal_automorphisms(&sb, g, bound, r)?.0,
            (n, auts) => {
                let sm = make_star_matrix(&sb, n as usize)?;
                if auts {
                    orthogonal_automorphisms(&sm, g, bound, r)?.0
                } else {
                    orthogonal_units(&sm, g, bound, r)?
                }
            }
        };
        put_json(out, &report.to_json())
    })
}

/// Runs a verification suite (or `all`) over a comma-separated window of
/// catalog groups; null `window` means the default window. The JSON report
/// is written to `out` whether or not the checks pass.
///
/// # Safety
/// `c` must be a live catalog, strings NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gb_verify_json(
    c: *const GbCatalog,
    window: *const c_char,
    suite: *const c_char,
    seed: u64,
    samples: usize,
    out: *mut *mut c_char,
) -> GbStatus {
    guard(|| {
        let c = borrow(c, "catalog")?;
        let suites = Suite::parse_selection(string(suite, "suite")?)?;
        let names: Vec<&str> = if window.is_null() {
            DEFAULT_WINDOW.to_vec()
        } else {
            string(window, "window")?.split(',').map(str::trim).collect()
        };
        let mut cfg = VerifyConfig::with_catalog(&c.0, &names)?;
        cfg.seed = seed;
        cfg.samples = samples;
        let report = verify::run(&suites, &cfg);
        put_json(out, &report.to_json())?;
        if report.passed() {
            Ok(GbStatus::Ok)
        } else {
            Err(Fail(GbStatus::VerificationFailed, "verification failed".into()))
        }
    })
}
