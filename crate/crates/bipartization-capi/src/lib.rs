//! C ABI for the `bipartization` crate.
//!
//! Conventions:
//! - Handles (`BzGraph`, `BzWeighting`) are opaque; free them with the
//!   matching `*_free` function exactly once.
//! - Every fallible function returns a `BzStatus`; on anything other than
//!   `BZ_STATUS_OK`, `bz_last_error_message` returns a human-readable
//!   description valid until the next failing call on the same thread.
//! - Strings returned through out-parameters are NUL-terminated, allocated
//!   by this library, and must be released with `bz_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use bipartization::{
    bipartize, classify, covering_number, domination_number, invert_bipartization,
    is_tree_bipartization, parse_edge_list, parse_graph6, parse_weighting, write_edge_list,
    write_graph6, write_weighting, BipartiteGraph, CliqueWeighting, Error, Graph, Side,
};

/// Result code of a C API call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum BzStatus {
    /// The call succeeded.
    Ok = 0,
    /// A required pointer argument was NULL or not valid UTF-8.
    NullArgument = 1,
    /// The input was rejected (bad weighting, vertex out of range, ...).
    InvalidInput = 2,
    /// Textual input failed to parse.
    ParseError = 3,
    /// The instance exceeds a supported size limit.
    SizeLimit = 4,
    /// The graph is not bipartite.
    NotBipartite = 5,
    /// The graph is not connected.
    Disconnected = 6,
    /// A precondition of the requested operation does not hold.
    Precondition = 7,
    /// The library panicked; the handle states are unspecified.
    Internal = 8,
}

/// Opaque handle to an undirected graph.
pub struct BzGraph(Graph);

/// Opaque handle to a clique weighting of a host graph.
pub struct BzWeighting(CliqueWeighting);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let sanitized: String = msg.chars().filter(|&c| c != '\0').collect();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = CString::new(sanitized).unwrap());
}

fn fail(e: &Error) -> BzStatus {
    set_error(&e.to_string());
    match e {
        Error::SizeLimit { .. } => BzStatus::SizeLimit,
        Error::Parse { .. } => BzStatus::ParseError,
        Error::NotBipartite => BzStatus::NotBipartite,
        Error::Disconnected => BzStatus::Disconnected,
        Error::Precondition(_) => BzStatus::Precondition,
        _ => BzStatus::InvalidInput,
    }
}

fn null_arg(what: &str) -> BzStatus {
    set_error(&format!("{what} must not be NULL"));
    BzStatus::NullArgument
}

/// Runs `body` with panics converted to `BZ_STATUS_INTERNAL`.
fn guarded(body: impl FnOnce() -> BzStatus) -> BzStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            BzStatus::Internal
        }
    }
}

/// # Safety
/// `ptr` must be NULL or a valid NUL-terminated string.
unsafe fn read_str<'a>(ptr: *const c_char, what: &str) -> Result<&'a str, BzStatus> {
    if ptr.is_null() {
        return Err(null_arg(what));
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error(&format!("{what} is not valid UTF-8"));
        BzStatus::NullArgument
    })
}

fn write_out_string(text: String, out: *mut *mut c_char) -> BzStatus {
    debug_assert!(!out.is_null());
    let c = CString::new(text.replace('\0', "")).unwrap();
    unsafe { *out = c.into_raw() };
    BzStatus::Ok
}

/// Returns the message of the most recent error on this thread.
///
/// The pointer stays valid until the next failing call on the same thread.
/// Never returns NULL; before any error it points at an empty string.
#[no_mangle]
pub extern "C" fn bz_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Frees a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and must not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn bz_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a graph6 string into a new graph handle.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bz_graph_parse_graph6(
    text: *const c_char,
    out: *mut *mut BzGraph,
) -> BzStatus {
    guarded(|| {
        if out.is_null() {
            return null_arg("out");
        }
        let text = match read_str(text, "text") {
            Ok(t) => t,
            Err(s) => return s,
        };
        match parse_graph6(text.trim()) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(BzGraph(g)));
                BzStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Parses an edge-list string (first line `n`, then `u v` lines) into a
/// new graph handle.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bz_graph_parse_edge_list(
    text: *const c_char,
    out: *mut *mut BzGraph,
) -> BzStatus {
    guarded(|| {
        if out.is_null() {
            return null_arg("out");
        }
        let text = match read_str(text, "text") {
            Ok(t) => t,
            Err(s) => return s,
        };
        match parse_edge_list(text) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(BzGraph(g)));
                BzStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Frees a graph handle. NULL is ignored.
///
/// # Safety
/// `g` must come from this library and must not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn bz_graph_free(g: *mut BzGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn bz_graph_order(g: *const BzGraph) -> u64 {
    g.as_ref().map_or(0, |g| g.0.n() as u64)
}

/// Number of edges, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn bz_graph_size(g: *const BzGraph) -> u64 {
    g.as_ref().map_or(0, |g| g.0.edge_count() as u64)
}

/// Writes the graph in graph6 format into a newly allocated string.
///
/// # Safety
/// `g` must be a live graph handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bz_graph_to_graph6(
    g: *const BzGraph,
    out: *mut *mut c_char,
) -> BzStatus {
    guarded(|| {
        if out.is_null() {
            return null_arg("out");
        }
        let Some(g) = g.as_ref() else {
            return null_arg("g");
        };
        match write_graph6(&g.0) {
            Ok(text) => write_out_string(text, out),
            Err(e) => fail(&e),
        }
    })
}

/// Parses a weighting over the cliques of `host`. Each line is
/// `v1,v2,...,vk : w` with `#` comments allowed.
///
/// # Safety
/// `text` must be a valid NUL-terminated string, `host` a live graph
/// handle, and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bz_weighting_parse(
    text: *const c_char,
    host: *const BzGraph,
    out: *mut *mut BzWeighting,
) -> BzStatus {
    guarded(|| {
        if out.is_null() {
            return null_arg("out");
        }
        let Some(host) = host.as_ref() else {
            return null_arg("host");
        };
        let text = match read_str(text, "text") {
            Ok(t) => t,
            Err(s) => return s,
        };
        match parse_weighting(text, &host.0) {
            Ok(f) => {
                *out = Box::into_raw(Box::new(BzWeighting(f)));
                BzStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Frees a weighting handle. NULL is ignored.
///
/// # Safety
/// `f` must come from this library and must not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn bz_weighting_free(f: *mut BzWeighting) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Builds the bipartite expansion of a weighted host graph and returns it
/// as a new graph handle. The host vertices keep their labels `0..n`; the
/// copy vertices follow in a deterministic order.
///
/// # Safety
/// `f` must be a live weighting handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bz_bipartize(
    f: *const BzWeighting,
    out: *mut *mut BzGraph,
) -> BzStatus {
    guarded(|| {
        if out.is_null() {
            return null_arg("out");
        }
        let Some(f) = f.as_ref() else {
            return null_arg("f");
        };
        let b = bipartize(&f.0);
        *out = Box::into_raw(Box::new(BzGraph(b.graph().clone())));
        BzStatus::Ok
    })
}

/// Recovers a host graph and weighting from a connected bipartite graph,
/// taking side `0` (A) or `1` (B) as the host vertex set. On success
/// `out_host` receives the host as an edge list and `out_weights` the
/// weighting, both as newly allocated strings.
///
/// # Safety
/// `g` must be a live graph handle; `out_host` and `out_weights` must be
/// valid pointers.
#[no_mangle]
pub unsafe extern "C" fn bz_invert(
    g: *const BzGraph,
    side: u32,
    out_host: *mut *mut c_char,
    out_weights: *mut *mut c_char,
) -> BzStatus {
    guarded(|| {
        if out_host.is_null() || out_weights.is_null() {
            return null_arg("out");
        }
        let Some(g) = g.as_ref() else {
            return null_arg("g");
        };
        let side = match side {
            0 => Side::A,
            1 => Side::B,
            _ => {
                set_error("side must be 0 (A) or 1 (B)");
                return BzStatus::InvalidInput;
            }
        };
        let bg = match BipartiteGraph::from_graph(&g.0) {
            Ok(bg) => bg,
            Err(e) => return fail(&e),
        };
        match invert_bipartization(&bg, side) {
            Ok(inv) => {
                let host = write_edge_list(&inv.h);
                let weights = write_weighting(&inv.f);
                let status = write_out_string(host, out_host);
                debug_assert!(status == BzStatus::Ok);
                write_out_string(weights, out_weights)
            }
            Err(e) => fail(&e),
        }
    })
}

/// Decides whether the expansion of the weighted host is a tree.
/// `*out_is_tree` receives 1 or 0; when 0, `bz_last_error_message`
/// describes the violated condition (the status is still `BZ_STATUS_OK`).
///
/// # Safety
/// `f` must be a live weighting handle and `out_is_tree` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bz_is_tree_bipartization(
    f: *const BzWeighting,
    out_is_tree: *mut i32,
) -> BzStatus {
    guarded(|| {
        if out_is_tree.is_null() {
            return null_arg("out_is_tree");
        }
        let Some(f) = f.as_ref() else {
            return null_arg("f");
        };
        match is_tree_bipartization(&f.0) {
            Ok(None) => {
                *out_is_tree = 1;
                BzStatus::Ok
            }
            Ok(Some(v)) => {
                set_error(&v.to_string());
                *out_is_tree = 0;
                BzStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Computes the domination number. `out_members`, when non-NULL, receives
/// a newly allocated space-separated minimum dominating set.
///
/// # Safety
/// `g` must be a live graph handle and `out_gamma` a valid pointer;
/// `out_members` must be NULL or a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bz_domination_number(
    g: *const BzGraph,
    out_gamma: *mut u64,
    out_members: *mut *mut c_char,
) -> BzStatus {
    guarded(|| {
        if out_gamma.is_null() {
            return null_arg("out_gamma");
        }
        let Some(g) = g.as_ref() else {
            return null_arg("g");
        };
        match domination_number(&g.0) {
            Ok((k, witness)) => {
                *out_gamma = k as u64;
                if !out_members.is_null() {
                    let members: Vec<String> =
                        witness.members.iter().map(|v| v.to_string()).collect();
                    return write_out_string(members.join(" "), out_members);
                }
                BzStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Computes the covering number (minimum vertex cover size).
///
/// # Safety
/// `g` must be a live graph handle and `out_beta` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bz_covering_number(
    g: *const BzGraph,
    out_beta: *mut u64,
) -> BzStatus {
    guarded(|| {
        if out_beta.is_null() {
            return null_arg("out_beta");
        }
        let Some(g) = g.as_ref() else {
            return null_arg("g");
        };
        match covering_number(&g.0) {
            Ok((k, _)) => {
                *out_beta = k as u64;
                BzStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Classifies a connected bipartite graph against the family of bipartite
/// graphs whose domination number equals the smaller side. `*out_in_family`
/// receives 1 or 0; `out_gamma` and `out_beta`, when non-NULL, receive the
/// domination and covering numbers.
///
/// # Safety
/// `g` must be a live graph handle and `out_in_family` a valid pointer;
/// `out_gamma` and `out_beta` must each be NULL or a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bz_classify(
    g: *const BzGraph,
    out_in_family: *mut i32,
    out_gamma: *mut u64,
    out_beta: *mut u64,
) -> BzStatus {
    guarded(|| {
        if out_in_family.is_null() {
            return null_arg("out_in_family");
        }
        let Some(g) = g.as_ref() else {
            return null_arg("g");
        };
        let bg = match BipartiteGraph::from_graph(&g.0) {
            Ok(bg) => bg,
            Err(e) => return fail(&e),
        };
        match classify(&bg) {
            Ok(report) => {
                *out_in_family = report.in_family_b as i32;
                if !out_gamma.is_null() {
                    *out_gamma = report.gamma as u64;
                }
                if !out_beta.is_null() {
                    *out_beta = report.beta as u64;
                }
                BzStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}
