//! C ABI over the orbit-space calculus: parse documents, run the same
//! commands the CLI exposes, and get reports back as JSON strings.
//!
//! Conventions: documents are opaque handles freed with
//! [`oc_document_free`]; strings returned by the library are freed with
//! [`oc_string_free`]; every function returns an [`OcStatus`], and the
//! message of the most recent failure on the current thread is available
//! via [`oc_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use orbitcalc::doc::{parse, serialize, ParsedDocument};
use orbitcalc::run::{execute, CommandKind, ErrorCode, RunOptions};

/// Status codes; nonzero values match the CLI exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OcStatus {
    Ok = 0,
    /// A pointer argument was null or a command name was invalid.
    InvalidArgument = 1,
    Parse = 2,
    Data = 3,
    Unsupported = 4,
    Internal = 5,
}

/// Opaque parsed document.
pub struct OcDocument {
    inner: ParsedDocument,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<Vec<u8>>) {
    let c =
        CString::new(message).unwrap_or_else(|_| CString::new("invalid error message").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn status_of(code: ErrorCode) -> OcStatus {
    match code.exit_code() {
        2 => OcStatus::Parse,
        3 => OcStatus::Data,
        4 => OcStatus::Unsupported,
        _ => OcStatus::Internal,
    }
}

/// Message of the most recent failure on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn oc_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn oc_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr().cast()
}

/// Parse a document from `len` bytes at `text`. On success stores a handle
/// in `out`.
///
/// # Safety
/// `text` must point to `len` readable bytes and `out` to a writable
/// pointer slot.
#[no_mangle]
pub unsafe extern "C" fn oc_document_parse(
    text: *const c_char,
    len: usize,
    out: *mut *mut OcDocument,
) -> OcStatus {
    if text.is_null() || out.is_null() {
        set_error("null pointer argument");
        return OcStatus::InvalidArgument;
    }
    let bytes = std::slice::from_raw_parts(text.cast::<u8>(), len);
    match parse(bytes) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(OcDocument { inner }));
            OcStatus::Ok
        }
        Err(e) => {
            set_error(format!("[E_PARSE] {e}"));
            OcStatus::Parse
        }
    }
}

/// Free a document handle. Null is allowed.
///
/// # Safety
/// `doc` must be a handle from [`oc_document_parse`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn oc_document_free(doc: *mut OcDocument) {
    if !doc.is_null() {
        drop(Box::from_raw(doc));
    }
}

/// Document kind as a static string ("orbitspace4", "seifert3", "matrix"
/// or "config"); do not free.
///
/// # Safety
/// `doc` must be a live handle from [`oc_document_parse`].
#[no_mangle]
pub unsafe extern "C" fn oc_document_kind(doc: *const OcDocument) -> *const c_char {
    if doc.is_null() {
        return ptr::null();
    }
    let kind: &'static str = match (*doc).inner.document.kind() {
        "orbitspace4" => "orbitspace4\0",
        "seifert3" => "seifert3\0",
        "matrix" => "matrix\0",
        _ => "config\0",
    };
    kind.as_ptr().cast()
}

/// Canonical text form of a document. Free the result with
/// [`oc_string_free`].
///
/// # Safety
/// `doc` must be a live handle and `out` a writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn oc_document_serialize(
    doc: *const OcDocument,
    out: *mut *mut c_char,
) -> OcStatus {
    if doc.is_null() || out.is_null() {
        set_error("null pointer argument");
        return OcStatus::InvalidArgument;
    }
    let text = serialize(&(*doc).inner.document);
    match CString::new(text) {
        Ok(c) => {
            *out = c.into_raw();
            OcStatus::Ok
        }
        Err(_) => {
            set_error("serialized document contains a NUL byte");
            OcStatus::Internal
        }
    }
}

fn command_of(name: &str) -> Option<CommandKind> {
    Some(match name {
        "validate" => CommandKind::Validate,
        "classify3" => CommandKind::Classify3,
        "classify4" => CommandKind::Classify4,
        "plumb" => CommandKind::Plumb,
        "reduce" => CommandKind::Reduce,
        "enumerate" => CommandKind::Enumerate,
        _ => return None,
    })
}

unsafe fn run_command(
    command: *const c_char,
    doc: *const OcDocument,
    k_max: i64,
    trace: bool,
    out_json: *mut *mut c_char,
) -> OcStatus {
    if command.is_null() || out_json.is_null() {
        set_error("null pointer argument");
        return OcStatus::InvalidArgument;
    }
    let Ok(name) = CStr::from_ptr(command).to_str() else {
        set_error("command name is not valid UTF-8");
        return OcStatus::InvalidArgument;
    };
    let Some(kind) = command_of(name) else {
        set_error(format!("unknown command `{name}`"));
        return OcStatus::InvalidArgument;
    };
    let options = RunOptions {
        k_max,
        trace,
        strict: false,
    };
    let parsed = if doc.is_null() {
        None
    } else {
        Some(&(*doc).inner)
    };
    match execute(kind, parsed, &options) {
        Ok(output) => match CString::new(output.report.to_json()) {
            Ok(c) => {
                *out_json = c.into_raw();
                OcStatus::Ok
            }
            Err(_) => {
                set_error("report contains a NUL byte");
                OcStatus::Internal
            }
        },
        Err(e) => {
            set_error(e.to_string());
            status_of(e.code)
        }
    }
}

/// Run a command ("validate", "classify3", "classify4", "plumb", "reduce")
/// on a document; the JSON report is stored in `out_json` and freed with
/// [`oc_string_free`]. Pass `trace` nonzero to include reduction steps.
///
/// # Safety
/// `command` must be a NUL-terminated string, `doc` a live handle, and
/// `out_json` a writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn oc_run_json(
    doc: *const OcDocument,
    command: *const c_char,
    trace: bool,
    out_json: *mut *mut c_char,
) -> OcStatus {
    if doc.is_null() {
        set_error("null document handle");
        return OcStatus::InvalidArgument;
    }
    run_command(command, doc, RunOptions::default().k_max, trace, out_json)
}

/// Enumerate the single-segment arc cases up to `k_max`; the JSON report
/// is stored in `out_json` and freed with [`oc_string_free`].
///
/// # Safety
/// `out_json` must be a writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn oc_enumerate_json(k_max: i64, out_json: *mut *mut c_char) -> OcStatus {
    let command = c"enumerate";
    run_command(command.as_ptr(), ptr::null(), k_max, false, out_json)
}

/// Free a string returned by this library. Null is allowed.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn oc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
