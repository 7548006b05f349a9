//! C interface to the `mackey` engine.
//!
//! Arguments use the same text syntax as the command line: partitions
//! `[2,1]`, quadruples `l,m,n,p`, simple indices `[1],[],[],[1]`. Every
//! fallible call returns a [`MackeyStatus`] and writes its result through an
//! out-pointer; on failure the message is available from
//! [`mackey_last_error`] on the same thread.
//!
//! Strings returned by this library must be released with
//! [`mackey_string_free`], decompositions with [`mackey_decomposition_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use mackey::grothendieck::{self, Decomposition, SimpleIndex};
use mackey::poset::{self, QuadIndex};
use mackey::{cli, config, ext, symfunc, syntax, Error};

/// Outcome of a call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MackeyStatus {
    Ok = 0,
    /// A required pointer was null.
    NullArgument = 1,
    /// An argument was not valid UTF-8 or did not parse.
    Parse = 2,
    /// The degree cap or a size guard refused the query.
    Limit = 3,
    /// The two indices are not comparable, so there is no defect.
    Incomparable = 4,
    /// The argument parsed but the operation does not apply to it.
    Invalid = 5,
    /// An index past the end of a decomposition.
    OutOfRange = 6,
    /// A multiplicity does not fit the output type.
    Overflow = 7,
    /// An internal error; this is a bug.
    Panic = 8,
}

/// An owned decomposition into simple objects, in canonical order.
pub struct MackeyDecomposition {
    inner: Decomposition,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: MackeyStatus, msg: impl Into<String>) -> MackeyStatus {
    set_error(msg);
    status
}

fn from_error(e: &Error) -> MackeyStatus {
    let status = match e {
        _ if e.is_limit() => MackeyStatus::Limit,
        Error::Parse { .. } | Error::InvalidPartition(_) => MackeyStatus::Parse,
        _ => MackeyStatus::Invalid,
    };
    fail(status, e.to_string())
}

/// Runs `f`, converting panics into [`MackeyStatus::Panic`].
fn guard(f: impl FnOnce() -> MackeyStatus) -> MackeyStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(MackeyStatus::Panic, "internal error"),
    }
}

/// Reads a borrowed C string argument.
///
/// # Safety
/// `s` must be null or point to a nul-terminated string.
unsafe fn arg<'a>(s: *const c_char, name: &str) -> Result<&'a str, MackeyStatus> {
    if s.is_null() {
        return Err(fail(MackeyStatus::NullArgument, format!("`{name}` is null")));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(MackeyStatus::Parse, format!("`{name}` is not UTF-8")))
}

fn parsed<T>(r: mackey::Result<T>) -> Result<T, MackeyStatus> {
    r.map_err(|e| from_error(&e))
}

fn out_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

macro_rules! non_null {
    ($p:expr, $name:literal) => {
        if $p.is_null() {
            return fail(MackeyStatus::NullArgument, concat!("`", $name, "` is null"));
        }
    };
}

/// The message of the last failed call on this thread, or null. The caller
/// owns the returned string.
#[no_mangle]
pub extern "C" fn mackey_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null_mut(), |m| m.clone().into_raw()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a pointer previously returned by this library and not
/// yet freed.
#[no_mangle]
pub unsafe extern "C" fn mackey_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Sets the largest number of boxes any intermediate object may have.
#[no_mangle]
pub extern "C" fn mackey_set_degree_cap(cap: usize) {
    config::set_degree_cap(cap);
}

#[no_mangle]
pub extern "C" fn mackey_degree_cap() -> usize {
    config::degree_cap()
}

/// The Littlewood–Richardson coefficient `c^lam_{mu,nu}`.
///
/// # Safety
/// String arguments must be nul-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mackey_lr_coefficient(
    lam: *const c_char,
    mu: *const c_char,
    nu: *const c_char,
    out: *mut u64,
) -> MackeyStatus {
    guard(|| {
        non_null!(out, "out");
        let lam = try_status!(parsed(syntax::parse_partition(try_status!(arg(lam, "lam")))));
        let mu = try_status!(parsed(syntax::parse_partition(try_status!(arg(mu, "mu")))));
        let nu = try_status!(parsed(syntax::parse_partition(try_status!(arg(nu, "nu")))));
        if let Err(e) = config::check_degree(lam.degree()) {
            return from_error(&e);
        }
        *out = symfunc::lr_coefficient(&lam, &mu, &nu);
        MackeyStatus::Ok
    })
}

/// The defect from quadruple `a` to quadruple `b` in the default order.
/// Returns [`MackeyStatus::Incomparable`] when `a` is not below `b`.
///
/// # Safety
/// String arguments must be nul-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mackey_defect(a: *const c_char, b: *const c_char, out: *mut usize) -> MackeyStatus {
    guard(|| {
        non_null!(out, "out");
        let a: QuadIndex = try_status!(parsed(try_status!(arg(a, "a")).parse()));
        let b: QuadIndex = try_status!(parsed(try_status!(arg(b, "b")).parse()));
        match poset::defect(&a, &b) {
            Some(d) => {
                *out = d;
                MackeyStatus::Ok
            }
            None => fail(MackeyStatus::Incomparable, format!("{a} and {b} are not comparable")),
        }
    })
}

/// `dim Ext^j(L_x, ℂ)`.
///
/// # Safety
/// `x` must be nul-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mackey_ext_to_trivial(x: *const c_char, j: usize, out: *mut u64) -> MackeyStatus {
    guard(|| {
        non_null!(out, "out");
        let x: SimpleIndex = try_status!(parsed(try_status!(arg(x, "x")).parse()));
        *out = ext::ext_to_trivial(&x, j);
        MackeyStatus::Ok
    })
}

/// Composition factors of `J_q`. On success `*out` owns a new decomposition.
///
/// # Safety
/// `q` must be nul-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mackey_decompose_j(q: *const c_char, out: *mut *mut MackeyDecomposition) -> MackeyStatus {
    guard(|| {
        non_null!(out, "out");
        let q: QuadIndex = try_status!(parsed(try_status!(arg(q, "q")).parse()));
        let d = try_status!(parsed(grothendieck::decompose_j(&q)));
        *out = Box::into_raw(Box::new(MackeyDecomposition { inner: d }));
        MackeyStatus::Ok
    })
}

/// Number of distinct simple factors. Null counts as empty.
///
/// # Safety
/// `d` must be null or a live decomposition.
#[no_mangle]
pub unsafe extern "C" fn mackey_decomposition_len(d: *const MackeyDecomposition) -> usize {
    d.as_ref().map_or(0, |d| d.inner.len())
}

/// The `i`-th factor: its index as text, e.g. `[1],[],[],[1]`, and its multiplicity.
/// `index_out` receives an owned string.
///
/// # Safety
/// `d` must be a live decomposition; out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn mackey_decomposition_term(
    d: *const MackeyDecomposition,
    i: usize,
    index_out: *mut *mut c_char,
    mult_out: *mut u64,
) -> MackeyStatus {
    guard(|| {
        non_null!(d, "d");
        non_null!(index_out, "index_out");
        non_null!(mult_out, "mult_out");
        let Some((s, c)) = (*d).inner.iter().nth(i) else {
            return fail(MackeyStatus::OutOfRange, format!("term {i} of {}", (*d).inner.len()));
        };
        let Ok(m) = u64::try_from(c) else {
            return fail(MackeyStatus::Overflow, format!("multiplicity {c} does not fit in 64 bits"));
        };
        *index_out = out_string(s.to_string());
        *mult_out = m;
        MackeyStatus::Ok
    })
}

/// The decomposition as a JSON array of `{"index", "mult"}` objects, owned by
/// the caller. Null on a null argument.
///
/// # Safety
/// `d` must be null or a live decomposition.
#[no_mangle]
pub unsafe extern "C" fn mackey_decomposition_to_json(d: *const MackeyDecomposition) -> *mut c_char {
    match d.as_ref() {
        Some(d) => out_string(cli::decomposition_json(&d.inner).to_string()),
        None => ptr::null_mut(),
    }
}

/// Releases a decomposition. Null is ignored.
///
/// # Safety
/// `d` must be null or a decomposition not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mackey_decomposition_free(d: *mut MackeyDecomposition) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}
