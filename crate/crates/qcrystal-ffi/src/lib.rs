//! C ABI for the qcrystal library.
//!
//! Conventions: every function returns a [`QcStatus`]; results are written
//! through out-pointers. Graphs are opaque handles freed with
//! [`qc_graph_free`]; all returned strings are NUL-terminated, UTF-8, and
//! freed with [`qc_string_free`]. On error, a thread-local message is
//! retrievable via [`qc_last_error`] until the next call on that thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use qcrystal::axioms::{check_queer_regular, check_regular};
use qcrystal::graph::{graph_from_json, graph_to_dot, graph_to_json, shifted_crystal, young_crystal, ColoredDigraph};
use qcrystal::polynomials::{expand_p_in_schur, expand_product_in_p, poly_to_json, schur, schur_p};
use qcrystal::rectification::{partial_from_json, rect, rectify, to_symmetric};
use qcrystal::tableaux::{
    parse_parts, tableau_from_json, young_to_json, Partition, StrictPartition, Tableau,
};

/// Status codes shared by every entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QcStatus {
    /// Success.
    QcOk = 0,
    /// A pointer argument was NULL or a string was not valid UTF-8.
    QcNullArgument = 1,
    /// Input could not be parsed (shape syntax, JSON, tableau validity).
    QcInvalidInput = 2,
    /// The requested object exists but the operation is undefined on it.
    QcDomainError = 3,
    /// A verification check failed (axiom violation, identity mismatch).
    QcVerificationFailed = 4,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg).unwrap_or_else(|_| CString::new("invalid error text").unwrap());
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

/// Message for the most recent failure on this thread, or NULL. The pointer
/// is owned by the library and valid until the next qcrystal call on the
/// same thread.
#[no_mangle]
pub extern "C" fn qc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| {
        e.borrow()
            .as_ref()
            .map(|c| c.as_ptr())
            .unwrap_or(ptr::null())
    })
}

/// Opaque crystal graph handle.
pub struct QcGraph {
    inner: ColoredDigraph,
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, QcStatus> {
    if s.is_null() {
        set_error("NULL string argument".into());
        return Err(QcStatus::QcNullArgument);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8".into());
        QcStatus::QcNullArgument
    })
}

fn give_string(s: String, out: *mut *mut c_char) -> QcStatus {
    if out.is_null() {
        set_error("NULL out-pointer".into());
        return QcStatus::QcNullArgument;
    }
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            QcStatus::QcOk
        }
        Err(_) => {
            set_error("result contained an interior NUL".into());
            QcStatus::QcInvalidInput
        }
    }
}

/// Frees a string returned by this library. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn qc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Frees a graph handle. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn qc_graph_free(g: *mut QcGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Builds the crystal on semistandard Young tableaux of the given shape
/// ("3,1"; empty string for the empty shape) with entries at most n.
#[no_mangle]
pub unsafe extern "C" fn qc_young_crystal(
    shape: *const c_char,
    n: usize,
    out: *mut *mut QcGraph,
) -> QcStatus {
    clear_error();
    let shape = match read_str(shape) {
        Ok(s) => s,
        Err(e) => return e,
    };
    if out.is_null() {
        set_error("NULL out-pointer".into());
        return QcStatus::QcNullArgument;
    }
    let parts = match parse_parts(shape) {
        Ok(p) => p,
        Err(e) => {
            set_error(e.to_string());
            return QcStatus::QcInvalidInput;
        }
    };
    let lambda = match Partition::new(parts) {
        Ok(p) => p,
        Err(e) => {
            set_error(e.to_string());
            return QcStatus::QcInvalidInput;
        }
    };
    match young_crystal(&lambda, n) {
        Ok(g) => {
            *out = Box::into_raw(Box::new(QcGraph { inner: g }));
            QcStatus::QcOk
        }
        Err(e) => {
            set_error(e.to_string());
            QcStatus::QcDomainError
        }
    }
}

/// Builds the crystal on semistandard shifted tableaux of the given strict
/// shape; when queer is nonzero the 0-colored edges are included.
#[no_mangle]
pub unsafe extern "C" fn qc_shifted_crystal(
    shape: *const c_char,
    n: usize,
    queer: i32,
    out: *mut *mut QcGraph,
) -> QcStatus {
    clear_error();
    let shape = match read_str(shape) {
        Ok(s) => s,
        Err(e) => return e,
    };
    if out.is_null() {
        set_error("NULL out-pointer".into());
        return QcStatus::QcNullArgument;
    }
    let gamma = match parse_parts(shape).and_then(StrictPartition::new) {
        Ok(p) => p,
        Err(e) => {
            set_error(e.to_string());
            return QcStatus::QcInvalidInput;
        }
    };
    match shifted_crystal(&gamma, n, queer != 0) {
        Ok(g) => {
            *out = Box::into_raw(Box::new(QcGraph { inner: g }));
            QcStatus::QcOk
        }
        Err(e) => {
            set_error(e.to_string());
            QcStatus::QcDomainError
        }
    }
}

/// Parses a graph from its JSON serialization.
#[no_mangle]
pub unsafe extern "C" fn qc_graph_from_json(
    json: *const c_char,
    out: *mut *mut QcGraph,
) -> QcStatus {
    clear_error();
    let json = match read_str(json) {
        Ok(s) => s,
        Err(e) => return e,
    };
    if out.is_null() {
        set_error("NULL out-pointer".into());
        return QcStatus::QcNullArgument;
    }
    let value: serde_json::Value = match serde_json::from_str(json) {
        Ok(v) => v,
        Err(e) => {
            set_error(format!("malformed JSON: {e}"));
            return QcStatus::QcInvalidInput;
        }
    };
    match graph_from_json(&value) {
        Ok(g) => {
            *out = Box::into_raw(Box::new(QcGraph { inner: g }));
            QcStatus::QcOk
        }
        Err(e) => {
            set_error(e.to_string());
            QcStatus::QcInvalidInput
        }
    }
}

/// Number of vertices of the graph.
#[no_mangle]
pub unsafe extern "C" fn qc_graph_vertex_count(g: *const QcGraph, out: *mut usize) -> QcStatus {
    clear_error();
    if g.is_null() || out.is_null() {
        set_error("NULL argument".into());
        return QcStatus::QcNullArgument;
    }
    *out = (*g).inner.vertex_count();
    QcStatus::QcOk
}

/// Number of colored edges of the graph.
#[no_mangle]
pub unsafe extern "C" fn qc_graph_edge_count(g: *const QcGraph, out: *mut usize) -> QcStatus {
    clear_error();
    if g.is_null() || out.is_null() {
        set_error("NULL argument".into());
        return QcStatus::QcNullArgument;
    }
    *out = (*g).inner.edges().len();
    QcStatus::QcOk
}

/// Serializes the graph to JSON.
#[no_mangle]
pub unsafe extern "C" fn qc_graph_to_json(g: *const QcGraph, out: *mut *mut c_char) -> QcStatus {
    clear_error();
    if g.is_null() {
        set_error("NULL graph".into());
        return QcStatus::QcNullArgument;
    }
    give_string(graph_to_json(&(*g).inner).to_string(), out)
}

/// Renders the graph in DOT format.
#[no_mangle]
pub unsafe extern "C" fn qc_graph_to_dot(g: *const QcGraph, out: *mut *mut c_char) -> QcStatus {
    clear_error();
    if g.is_null() {
        set_error("NULL graph".into());
        return QcStatus::QcNullArgument;
    }
    give_string(graph_to_dot(&(*g).inner), out)
}

/// Runs the local axiom checks on the graph: the Stembridge axioms over
/// the nonzero colors, plus the queer axioms when queer is nonzero. The
/// report (always written on success paths) is a JSON object with fields
/// "passed" and "violations". Returns QcVerificationFailed when the graph
/// fails, with the report still written.
#[no_mangle]
pub unsafe extern "C" fn qc_graph_check_axioms(
    g: *const QcGraph,
    queer: i32,
    out_report: *mut *mut c_char,
) -> QcStatus {
    clear_error();
    if g.is_null() {
        set_error("NULL graph".into());
        return QcStatus::QcNullArgument;
    }
    let report = if queer != 0 {
        check_queer_regular(&(*g).inner)
    } else {
        check_regular(&(*g).inner)
    };
    let passed = report.passed;
    let json = match serde_json::to_string(&report) {
        Ok(j) => j,
        Err(e) => {
            set_error(e.to_string());
            return QcStatus::QcDomainError;
        }
    };
    let st = give_string(json, out_report);
    if st != QcStatus::QcOk {
        return st;
    }
    if passed {
        QcStatus::QcOk
    } else {
        set_error("axiom violations found; see report".into());
        QcStatus::QcVerificationFailed
    }
}

fn parse_partition(shape: &str) -> Result<Partition, QcStatus> {
    parse_parts(shape).and_then(Partition::new).map_err(|e| {
        set_error(e.to_string());
        QcStatus::QcInvalidInput
    })
}

fn parse_strict(shape: &str) -> Result<StrictPartition, QcStatus> {
    parse_parts(shape).and_then(StrictPartition::new).map_err(|e| {
        set_error(e.to_string());
        QcStatus::QcInvalidInput
    })
}

/// Schur polynomial s_shape(x_1..x_n) as polynomial JSON.
#[no_mangle]
pub unsafe extern "C" fn qc_schur(
    shape: *const c_char,
    n: usize,
    out: *mut *mut c_char,
) -> QcStatus {
    clear_error();
    let shape = match read_str(shape) {
        Ok(s) => s,
        Err(e) => return e,
    };
    let lambda = match parse_partition(shape) {
        Ok(p) => p,
        Err(e) => return e,
    };
    give_string(poly_to_json(&schur(&lambda, n)).to_string(), out)
}

/// Schur P polynomial P_shape(x_1..x_n) as polynomial JSON.
#[no_mangle]
pub unsafe extern "C" fn qc_schur_p(
    shape: *const c_char,
    n: usize,
    out: *mut *mut c_char,
) -> QcStatus {
    clear_error();
    let shape = match read_str(shape) {
        Ok(s) => s,
        Err(e) => return e,
    };
    let gamma = match parse_strict(shape) {
        Ok(p) => p,
        Err(e) => return e,
    };
    give_string(poly_to_json(&schur_p(&gamma, n)).to_string(), out)
}

/// Expansion of P_shape into Schur polynomials at n variables, as a JSON
/// array of {"shape": [..], "coef": "..."} records. The identity is
/// re-verified internally; a mismatch reports QcVerificationFailed.
#[no_mangle]
pub unsafe extern "C" fn qc_expand_schur_p(
    shape: *const c_char,
    n: usize,
    out: *mut *mut c_char,
) -> QcStatus {
    clear_error();
    let shape = match read_str(shape) {
        Ok(s) => s,
        Err(e) => return e,
    };
    let gamma = match parse_strict(shape) {
        Ok(p) => p,
        Err(e) => return e,
    };
    match expand_p_in_schur(&gamma, n) {
        Ok(exp) => match serde_json::to_string(&exp) {
            Ok(j) => give_string(j, out),
            Err(e) => {
                set_error(e.to_string());
                QcStatus::QcDomainError
            }
        },
        Err(e) => {
            set_error(e.to_string());
            QcStatus::QcVerificationFailed
        }
    }
}

/// Expansion of P_gamma * P_delta back into Schur P polynomials, as a JSON
/// array of {"shape": [..], "coef": "..."} records. Nonnegativity and exact
/// reconstruction are verified; failure reports QcVerificationFailed.
#[no_mangle]
pub unsafe extern "C" fn qc_product_schur_p(
    gamma: *const c_char,
    delta: *const c_char,
    out: *mut *mut c_char,
) -> QcStatus {
    clear_error();
    let gamma = match read_str(gamma) {
        Ok(s) => s,
        Err(e) => return e,
    };
    let delta = match read_str(delta) {
        Ok(s) => s,
        Err(e) => return e,
    };
    let (g, d) = match (parse_strict(gamma), parse_strict(delta)) {
        (Ok(g), Ok(d)) => (g, d),
        (Err(e), _) | (_, Err(e)) => return e,
    };
    match expand_product_in_p(&g, &d, true) {
        Ok(exp) => match serde_json::to_string(&exp) {
            Ok(j) => give_string(j, out),
            Err(e) => {
                set_error(e.to_string());
                QcStatus::QcDomainError
            }
        },
        Err(e) => {
            set_error(e.to_string());
            QcStatus::QcVerificationFailed
        }
    }
}

/// Rectifies a tableau given as JSON: accepts a shifted tableau (which is
/// first unfolded to its symmetric filling) or a partial filling, and
/// writes the resulting Young tableau as JSON.
#[no_mangle]
pub unsafe extern "C" fn qc_rectify(json: *const c_char, out: *mut *mut c_char) -> QcStatus {
    clear_error();
    let json = match read_str(json) {
        Ok(s) => s,
        Err(e) => return e,
    };
    let value: serde_json::Value = match serde_json::from_str(json) {
        Ok(v) => v,
        Err(e) => {
            set_error(format!("malformed JSON: {e}"));
            return QcStatus::QcInvalidInput;
        }
    };
    let outcome = if value.get("kind").and_then(|k| k.as_str()) == Some("partial") {
        partial_from_json(&value).and_then(|p| rectify(&p, None))
    } else {
        match tableau_from_json(&value) {
            Ok(Tableau::Shifted(t)) => rect(&t),
            Ok(Tableau::Young(_)) => {
                set_error("already a Young tableau; nothing to rectify".into());
                return QcStatus::QcDomainError;
            }
            Err(e) => {
                set_error(e.to_string());
                return QcStatus::QcInvalidInput;
            }
        }
    };
    match outcome {
        Ok(y) => give_string(young_to_json(&y).to_string(), out),
        Err(e) => {
            set_error(e.to_string());
            QcStatus::QcInvalidInput
        }
    }
}

/// Unfolds a shifted tableau (JSON) into its symmetric partial filling
/// (JSON with "kind":"partial").
#[no_mangle]
pub unsafe extern "C" fn qc_to_symmetric(json: *const c_char, out: *mut *mut c_char) -> QcStatus {
    clear_error();
    let json = match read_str(json) {
        Ok(s) => s,
        Err(e) => return e,
    };
    let value: serde_json::Value = match serde_json::from_str(json) {
        Ok(v) => v,
        Err(e) => {
            set_error(format!("malformed JSON: {e}"));
            return QcStatus::QcInvalidInput;
        }
    };
    match tableau_from_json(&value) {
        Ok(Tableau::Shifted(t)) => {
            let sym = to_symmetric(&t);
            give_string(
                qcrystal::rectification::partial_to_json(sym.filling()).to_string(),
                out,
            )
        }
        Ok(Tableau::Young(_)) => {
            set_error("expected a shifted tableau".into());
            QcStatus::QcDomainError
        }
        Err(e) => {
            set_error(e.to_string());
            QcStatus::QcInvalidInput
        }
    }
}
