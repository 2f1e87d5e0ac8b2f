//! C interface to `isoset`.
//!
//! Graphs live behind an opaque [`IsosetGraph`] handle created by
//! `isoset_graph_new` or `isoset_graph_parse` and released with
//! `isoset_graph_free`. Every other call returns an [`IsosetStatus`]; on
//! anything but `ISOSET_STATUS_OK` a description is available from
//! `isoset_last_error` until the next call on the same thread.
//!
//! Output buffers for vertex ids must hold at least `n` entries.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use isoset::constructive::{self, Certificate};
use isoset::exact::{self, Tier};
use isoset::isolation::is_independent_isolating;
use isoset::{Error, Graph, VertexSet};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsosetStatus {
    Ok = 0,
    /// Null pointer or out-of-range argument.
    InvalidArgument = 1,
    /// Malformed edge list or graph (self-loop, duplicate edge, ...).
    InvalidGraph = 2,
    /// Node budget exhausted.
    Budget = 3,
    /// The graph does not meet the method's precondition.
    Precondition = 4,
    /// The rotation sweep stalled or violated an invariant.
    Stalled = 5,
    /// A produced witness failed re-verification.
    VerificationFailed = 6,
    /// Exact search is limited to 128 vertices.
    TooLarge = 7,
    Panic = 99,
}

/// Opaque graph handle.
pub struct IsosetGraph {
    graph: Graph,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(err: &Error) -> IsosetStatus {
    match err {
        Error::SelfLoop(_)
        | Error::DuplicateEdge(..)
        | Error::VertexOutOfRange(_)
        | Error::Parse { .. } => IsosetStatus::InvalidGraph,
        Error::BudgetExceeded { .. } => IsosetStatus::Budget,
        Error::TooLarge(_) => IsosetStatus::TooLarge,
        Error::AlgorithmStalled { .. } | Error::InvariantViolated(_) => IsosetStatus::Stalled,
        Error::BoundViolated(_) => IsosetStatus::VerificationFailed,
        Error::BadParameter(_) => IsosetStatus::InvalidArgument,
        _ => IsosetStatus::Precondition,
    }
}

/// Runs `f`, recording errors and converting panics.
fn guard(f: impl FnOnce() -> Result<(), (IsosetStatus, String)>) -> IsosetStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => IsosetStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            IsosetStatus::Panic
        }
    }
}

fn lib_err(err: Error) -> (IsosetStatus, String) {
    (status_of(&err), err.to_string())
}

fn invalid(msg: &str) -> (IsosetStatus, String) {
    (IsosetStatus::InvalidArgument, msg.to_string())
}

unsafe fn graph_ref<'a>(g: *const IsosetGraph) -> Result<&'a Graph, (IsosetStatus, String)> {
    g.as_ref()
        .map(|h| &h.graph)
        .ok_or_else(|| invalid("null graph handle"))
}

unsafe fn write_ids(out: *mut usize, s: &VertexSet) {
    if !out.is_null() {
        for (i, v) in s.iter().enumerate() {
            *out.add(i) = v;
        }
    }
}

/// Message for the last failing call on this thread; empty if none. The
/// pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn isoset_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Builds a graph on `n` vertices from `m` edges given as `2m` ids
/// `u0 v0 u1 v1 ...`.
///
/// # Safety
/// `edges` must point to `2 * m` readable ids (may be null when `m == 0`);
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isoset_graph_new(
    n: usize,
    edges: *const usize,
    m: usize,
    out: *mut *mut IsosetGraph,
) -> IsosetStatus {
    guard(|| {
        if out.is_null() || (edges.is_null() && m > 0) {
            return Err(invalid("null pointer"));
        }
        let flat = if m == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(edges, 2 * m)
        };
        let pairs: Vec<(usize, usize)> = flat.chunks(2).map(|c| (c[0], c[1])).collect();
        let graph = Graph::from_edge_list(n, &pairs).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(IsosetGraph { graph }));
        Ok(())
    })
}

/// Parses the `p <n> <m>` edge-list text format.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isoset_graph_parse(
    text: *const c_char,
    out: *mut *mut IsosetGraph,
) -> IsosetStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return Err(invalid("null pointer"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| invalid("text is not UTF-8"))?;
        let graph = isoset::io::parse_edge_list(s).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(IsosetGraph { graph }));
        Ok(())
    })
}

/// # Safety
/// `g` must come from `isoset_graph_new`/`isoset_graph_parse` and not have
/// been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn isoset_graph_free(g: *mut IsosetGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn isoset_graph_n(g: *const IsosetGraph) -> usize {
    g.as_ref().map_or(0, |h| h.graph.n())
}

/// Number of edges, or 0 for a null handle.
///
/// # Safety
/// `g` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn isoset_graph_m(g: *const IsosetGraph) -> usize {
    g.as_ref().map_or(0, |h| h.graph.m())
}

/// Exact independent isolation number with its lexicographically least
/// witness. `budget == 0` selects the default of 10^8 nodes.
///
/// # Safety
/// `g` must be a live handle; `value` writable; `witness` null or room for
/// `n` ids.
#[no_mangle]
pub unsafe extern "C" fn isoset_iota_independent(
    g: *const IsosetGraph,
    budget: u64,
    value: *mut usize,
    witness: *mut usize,
) -> IsosetStatus {
    guard(|| {
        let graph = graph_ref(g)?;
        if value.is_null() {
            return Err(invalid("null output"));
        }
        let budget = if budget == 0 {
            isoset::coloring::DEFAULT_BUDGET
        } else {
            budget
        };
        let res = exact::iota_independent_with(graph, Tier::Auto, budget).map_err(lib_err)?;
        *value = res.value;
        write_ids(witness, &res.witness);
        Ok(())
    })
}

/// Writes whether the `len` ids in `ids` form an independent isolating set.
///
/// # Safety
/// `g` must be a live handle; `ids` must hold `len` readable ids (may be
/// null when `len == 0`); `result` writable.
#[no_mangle]
pub unsafe extern "C" fn isoset_is_independent_isolating(
    g: *const IsosetGraph,
    ids: *const usize,
    len: usize,
    result: *mut bool,
) -> IsosetStatus {
    guard(|| {
        let graph = graph_ref(g)?;
        if result.is_null() || (ids.is_null() && len > 0) {
            return Err(invalid("null pointer"));
        }
        let slice = if len == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(ids, len)
        };
        let s = VertexSet::from_ids(graph.n(), slice.iter().copied()).map_err(lib_err)?;
        *result = is_independent_isolating(graph, &s);
        Ok(())
    })
}

/// Distance-mod-3 classes of a connected bipartite graph: `classes[v]` is
/// 0, 1 or 2.
///
/// # Safety
/// `g` must be a live handle; `classes` must have room for `n` bytes.
#[no_mangle]
pub unsafe extern "C" fn isoset_bipartite_partition3(
    g: *const IsosetGraph,
    classes: *mut u8,
) -> IsosetStatus {
    guard(|| {
        let graph = graph_ref(g)?;
        if classes.is_null() {
            return Err(invalid("null output"));
        }
        let parts = constructive::bipartite_partition3(graph).map_err(lib_err)?;
        for (i, part) in parts.iter().enumerate() {
            for v in part.iter() {
                *classes.add(v) = i as u8;
            }
        }
        Ok(())
    })
}

/// A constructive bound: witness of `size` vertices within
/// `bound_num / bound_den`.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct IsosetBound {
    pub size: usize,
    pub bound_num: u64,
    pub bound_den: u64,
}

unsafe fn emit(
    cert: Certificate,
    out: *mut IsosetBound,
    witness: *mut usize,
) -> Result<(), (IsosetStatus, String)> {
    if !cert.verified || !cert.within_bound() {
        return Err((
            IsosetStatus::VerificationFailed,
            "witness failed verification".into(),
        ));
    }
    *out = IsosetBound {
        size: cert.size(),
        bound_num: *cert.bound.numer(),
        bound_den: *cert.bound.denom(),
    };
    write_ids(witness, &cert.witness);
    Ok(())
}

/// Rotation-sweep bound `(n+1)/3` for a connected 3-colorable graph.
///
/// # Safety
/// `g` must be a live handle; `out` writable; `witness` null or room for
/// `n` ids.
#[no_mangle]
pub unsafe extern "C" fn isoset_tripartite_bound(
    g: *const IsosetGraph,
    out: *mut IsosetBound,
    witness: *mut usize,
) -> IsosetStatus {
    guard(|| {
        let graph = graph_ref(g)?;
        if out.is_null() {
            return Err(invalid("null output"));
        }
        emit(
            constructive::tripartite_bound(graph, None).map_err(lib_err)?,
            out,
            witness,
        )
    })
}

/// Grundy-coloring bound `(k+2)n/(2k+6)`.
///
/// # Safety
/// `g` must be a live handle; `out` writable; `witness` null or room for
/// `n` ids.
#[no_mangle]
pub unsafe extern "C" fn isoset_k_colorable_bound(
    g: *const IsosetGraph,
    out: *mut IsosetBound,
    witness: *mut usize,
) -> IsosetStatus {
    guard(|| {
        let graph = graph_ref(g)?;
        if out.is_null() {
            return Err(invalid("null output"));
        }
        emit(
            constructive::k_colorable_bound(graph, None).map_err(lib_err)?,
            out,
            witness,
        )
    })
}
