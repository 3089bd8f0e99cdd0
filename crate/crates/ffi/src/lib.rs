//! C ABI over `rhl-core`.
//!
//! Colorings and patterns cross the boundary as opaque handles owned by the
//! caller and released with the matching `_free` function. Every entry point
//! returns an [`RhlStatus`]; on failure a message for the calling thread is
//! available from [`rhl_last_error`]. Strings returned through out-pointers
//! are released with [`rhl_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::time::Duration;

use rhl_core::certify::{
    certify_loose, certify_loose_plus, certify_tight, certify_tripartite, verify_certificate, Certificate, Rejection,
    TriTheorem,
};
use rhl_core::constructions::{build, ConstructionId};
use rhl_core::format::{parse_coloring, write_coloring};
use rhl_core::search::{max_rainbow_free_colors, SearchBudget, SearchStatus};
use rhl_core::{find_rainbow_copy, Coloring, HostGraph, Pattern};

/// Result code of every call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RhlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    BufferTooSmall = 4,
    Inconclusive = 5,
    PreconditionFailed = 6,
    TheoremViolation = 7,
    Rejected = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RhlTheorem {
    Tight = 0,
    Loose = 1,
    LoosePlus = 2,
    MpTight = 3,
    MpMessy = 4,
    MpLoose = 5,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RhlHostKind {
    Complete = 0,
    /// Balanced `K_{n,n,n}`.
    Tripartite = 1,
}

/// Opaque coloring handle.
pub struct RhlColoring(Coloring);

/// Opaque pattern handle.
pub struct RhlPattern(Pattern);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

type FfiResult = Result<(), RhlStatus>;

fn fail(status: RhlStatus, msg: impl Into<String>) -> RhlStatus {
    set_error(msg);
    status
}

/// Run `f`, turning panics into `RhlStatus::Panic`.
fn guard(f: impl FnOnce() -> FfiResult) -> RhlStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => RhlStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => fail(RhlStatus::Panic, "internal panic"),
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, RhlStatus> {
    if p.is_null() {
        return Err(fail(RhlStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| fail(RhlStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, RhlStatus> {
    p.as_ref().ok_or_else(|| fail(RhlStatus::NullPointer, format!("{what} is null")))
}

unsafe fn out<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, RhlStatus> {
    p.as_mut().ok_or_else(|| fail(RhlStatus::NullPointer, format!("{what} is null")))
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior nul").into_raw()
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next call on this thread.
#[no_mangle]
pub extern "C" fn rhl_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn rhl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parse the coloring text format.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rhl_coloring_parse(text: *const c_char, out_handle: *mut *mut RhlColoring) -> RhlStatus {
    guard(|| {
        let text = str_arg(text, "text")?;
        let slot = out(out_handle, "out")?;
        let c = parse_coloring(text).map_err(|e| fail(RhlStatus::ParseError, e.to_string()))?;
        *slot = Box::into_raw(Box::new(RhlColoring(c)));
        Ok(())
    })
}

/// Build a named construction, e.g. `"tight-lb"` with `n = 9`. `n = 0`
/// selects the default size; `j_mask` bit `i` selects coordinate `i + 1`.
///
/// # Safety
/// `name` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rhl_coloring_build(
    name: *const c_char,
    n: u32,
    j_mask: u8,
    out_handle: *mut *mut RhlColoring,
) -> RhlStatus {
    guard(|| {
        let name = str_arg(name, "name")?;
        let slot = out(out_handle, "out")?;
        let id = ConstructionId::from_name(name, (n > 0).then_some(n), j_mask)
            .map_err(|e| fail(RhlStatus::InvalidArgument, e.to_string()))?;
        let c = build(id).map_err(|e| fail(RhlStatus::InvalidArgument, e.to_string()))?;
        *slot = Box::into_raw(Box::new(RhlColoring(c)));
        Ok(())
    })
}

/// # Safety
/// `c` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rhl_coloring_free(c: *mut RhlColoring) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Number of distinct colors, or 0 for a null handle.
///
/// # Safety
/// `c` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rhl_coloring_palette_size(c: *const RhlColoring) -> u32 {
    c.as_ref().map_or(0, |c| c.0.palette_size())
}

/// Number of host edges, or 0 for a null handle.
///
/// # Safety
/// `c` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rhl_coloring_edge_count(c: *const RhlColoring) -> usize {
    c.as_ref().map_or(0, |c| c.0.host().edge_count())
}

/// Serialize to the text format; free the result with `rhl_string_free`.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rhl_coloring_to_text(c: *const RhlColoring, out_text: *mut *mut c_char) -> RhlStatus {
    guard(|| {
        let c = handle(c, "coloring")?;
        *out(out_text, "out")? = c_string(write_coloring(&c.0));
        Ok(())
    })
}

/// Catalog pattern by name (`"T"`, `"MESSY_M"`, `"M2"`, ...).
///
/// # Safety
/// `name` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rhl_pattern_from_name(name: *const c_char, out_handle: *mut *mut RhlPattern) -> RhlStatus {
    guard(|| {
        let name = str_arg(name, "name")?;
        let slot = out(out_handle, "out")?;
        let p: Pattern = name.parse().map_err(|e: rhl_core::error::PatternError| fail(RhlStatus::InvalidArgument, e.to_string()))?;
        *slot = Box::into_raw(Box::new(RhlPattern(p)));
        Ok(())
    })
}

/// # Safety
/// `p` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rhl_pattern_free(p: *mut RhlPattern) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Look for a rainbow copy. On return `*found` tells whether one exists; if
/// so its vertex images are written to `vertices` (template order) and their
/// count to `*len`. `BufferTooSmall` leaves the needed size in `*len`.
///
/// # Safety
/// Handles must be live; `found` and `len` writable; `vertices` valid for
/// `capacity` writes (may be null when `capacity` is 0).
#[no_mangle]
pub unsafe extern "C" fn rhl_find_rainbow_copy(
    c: *const RhlColoring,
    p: *const RhlPattern,
    found: *mut bool,
    vertices: *mut u32,
    capacity: usize,
    len: *mut usize,
) -> RhlStatus {
    guard(|| {
        let (c, p) = (handle(c, "coloring")?, handle(p, "pattern")?);
        let (found, len) = (out(found, "found")?, out(len, "len")?);
        match find_rainbow_copy(&c.0, &p.0) {
            None => {
                *found = false;
                *len = 0;
            }
            Some(w) => {
                *found = true;
                *len = w.images.len();
                if capacity < w.images.len() || vertices.is_null() {
                    return Err(fail(RhlStatus::BufferTooSmall, format!("need room for {} vertices", w.images.len())));
                }
                ptr::copy_nonoverlapping(w.images.as_ptr(), vertices, w.images.len());
            }
        }
        Ok(())
    })
}

fn rejection(r: Rejection) -> RhlStatus {
    match r {
        Rejection::PreconditionFailed(p) => fail(RhlStatus::PreconditionFailed, p.to_string()),
        v @ Rejection::TheoremViolation { .. } => fail(RhlStatus::TheoremViolation, v.to_string()),
    }
}

/// Certify against a structure theorem; the certificate JSON is written to
/// `*out_json` (free with `rhl_string_free`).
///
/// # Safety
/// `c` must be a live handle; `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn rhl_certify(c: *const RhlColoring, theorem: RhlTheorem, out_json: *mut *mut c_char) -> RhlStatus {
    guard(|| {
        let c = &handle(c, "coloring")?.0;
        let slot = out(out_json, "out")?;
        let cert: Certificate = match theorem {
            RhlTheorem::Tight => certify_tight(c).map(Into::into),
            RhlTheorem::Loose => certify_loose(c).map(Into::into),
            RhlTheorem::LoosePlus => certify_loose_plus(c).map(Into::into),
            RhlTheorem::MpTight => certify_tripartite(c, TriTheorem::MpTight).map(Into::into),
            RhlTheorem::MpMessy => certify_tripartite(c, TriTheorem::MpMessy).map(Into::into),
            RhlTheorem::MpLoose => certify_tripartite(c, TriTheorem::MpLoose).map(Into::into),
        }
        .map_err(rejection)?;
        *slot = c_string(cert.to_json());
        Ok(())
    })
}

/// Check a certificate (JSON) against a coloring. `Rejected` means it
/// parsed but does not hold; the failing clause is in `rhl_last_error`.
///
/// # Safety
/// `c` must be a live handle; `json` a nul-terminated string.
#[no_mangle]
pub unsafe extern "C" fn rhl_verify_certificate(c: *const RhlColoring, json: *const c_char) -> RhlStatus {
    guard(|| {
        let c = &handle(c, "coloring")?.0;
        let cert = Certificate::from_json(str_arg(json, "json")?).map_err(|e| fail(RhlStatus::ParseError, e.to_string()))?;
        verify_certificate(c, &cert).map_err(|e| fail(RhlStatus::Rejected, e.0))
    })
}

/// Anti-Ramsey number of `p` on `K_n` or `K_{n,n,n}`. Zero limits mean
/// "no node limit" and "default time limit"; `threads = 0` uses all cores.
///
/// # Safety
/// `p` must be a live handle; `value` writable.
#[no_mangle]
pub unsafe extern "C" fn rhl_anti_ramsey(
    host: RhlHostKind,
    n: u32,
    p: *const RhlPattern,
    node_limit: u64,
    time_limit_secs: u64,
    threads: u32,
    value: *mut u32,
) -> RhlStatus {
    guard(|| {
        let p = &handle(p, "pattern")?.0;
        let value = out(value, "value")?;
        let host = match host {
            RhlHostKind::Complete => HostGraph::complete(n),
            RhlHostKind::Tripartite => HostGraph::tripartite(n, n, n),
        }
        .map_err(|e| fail(RhlStatus::InvalidArgument, e.to_string()))?;
        let mut budget = SearchBudget::default();
        if node_limit > 0 {
            budget = budget.with_nodes(node_limit);
        }
        if time_limit_secs > 0 {
            budget.time_limit = Duration::from_secs(time_limit_secs);
        }
        if threads > 0 {
            budget = budget.with_threads(threads as usize);
        }
        let o = max_rainbow_free_colors(&host, p, budget).map_err(|e| fail(RhlStatus::InvalidArgument, e.to_string()))?;
        match o.status {
            SearchStatus::Proved => {
                *value = o.value + 1;
                Ok(())
            }
            SearchStatus::Inconclusive => Err(fail(RhlStatus::Inconclusive, format!("budget exhausted after {} nodes", o.nodes))),
        }
    })
}
