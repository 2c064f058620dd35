//! C ABI for the segment calculus.
//!
//! Sessions are opaque handles created from session-file text; every command
//! returns its report as a JSON string (the same schema the CLI prints).
//! Functions return a status code; on failure a thread-local message is
//! available through [`segcalc_last_error_message`]. Strings handed out by
//! this library must be released with [`segcalc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use segcalc::{parse_session, run_command, CommandKind, Error, OracleTable, RunOptions, Sign};

/// Status codes returned by every fallible entry point.
#[repr(i32)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SegcalcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Session or oracle text failed to parse or validate.
    ParseError = 3,
    /// A command precondition was violated (no embedding, empty multisegment, ...).
    PreconditionError = 4,
    /// `verify` found a counterexample; the report JSON is still written.
    CounterexampleFound = 5,
    UnknownCommand = 6,
    InternalError = 7,
}

/// Opaque parsed session.
pub struct SegcalcSession {
    inner: segcalc::Session,
}

/// Optional per-call settings. Zero/null fields mean "unset".
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct SegcalcOptions {
    /// Override for d; 0 leaves the session value in force.
    pub d: u32,
    /// Override for eta(-1): +1 or -1; 0 leaves the session value in force.
    pub eta: i32,
    /// Number of random instances for `verify`; 0 disables batch mode.
    pub random: u64,
    /// Seed for `random`.
    pub seed: u64,
    /// Oracle table text (not a path); null for none.
    pub oracle_text: *const c_char,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: &str) {
    let cstring = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(cstring));
}

fn status_of(err: &Error) -> SegcalcStatus {
    match err {
        Error::Parse { .. } | Error::Invalid(_) | Error::Oracle { .. } => SegcalcStatus::ParseError,
        Error::Precondition(_) | Error::NoEmbedding { .. } | Error::InvalidLine { .. } => {
            SegcalcStatus::PreconditionError
        }
    }
}

unsafe fn read_utf8<'a>(ptr: *const c_char) -> Result<&'a str, SegcalcStatus> {
    if ptr.is_null() {
        set_error("null pointer argument");
        return Err(SegcalcStatus::NullPointer);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        SegcalcStatus::InvalidUtf8
    })
}

fn guarded(body: impl FnOnce() -> SegcalcStatus) -> SegcalcStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            SegcalcStatus::InternalError
        }
    }
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn segcalc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Message describing the most recent error on this thread, or null. The
/// caller owns the returned string (free with `segcalc_string_free`).
#[no_mangle]
pub extern "C" fn segcalc_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| match &*slot.borrow() {
        Some(msg) => msg.clone().into_raw(),
        None => ptr::null_mut(),
    })
}

/// Parses and validates session text into an opaque handle.
///
/// # Safety
/// `text` must point at a NUL-terminated string and `out` at writable storage
/// for one pointer. On `Ok` the caller owns the handle and must release it
/// with [`segcalc_session_free`].
#[no_mangle]
pub unsafe extern "C" fn segcalc_session_parse(
    text: *const c_char,
    out: *mut *mut SegcalcSession,
) -> SegcalcStatus {
    guarded(|| {
        if out.is_null() {
            set_error("null output pointer");
            return SegcalcStatus::NullPointer;
        }
        let text = match read_utf8(text) {
            Ok(t) => t,
            Err(status) => return status,
        };
        match parse_session(text) {
            Ok(session) => {
                let handle = Box::new(SegcalcSession { inner: session });
                *out = Box::into_raw(handle);
                SegcalcStatus::Ok
            }
            Err(e) => {
                set_error(&e.to_string());
                status_of(&e)
            }
        }
    })
}

/// Releases a session handle; null is permitted.
///
/// # Safety
/// `session` must be a handle returned by [`segcalc_session_parse`], not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn segcalc_session_free(session: *mut SegcalcSession) {
    if !session.is_null() {
        drop(Box::from_raw(session));
    }
}

/// Renders the canonical text of a parsed session (round-trips through
/// `segcalc_session_parse`). The caller frees the string.
///
/// # Safety
/// `session` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn segcalc_session_render(
    session: *const SegcalcSession,
    out: *mut *mut c_char,
) -> SegcalcStatus {
    guarded(|| {
        if session.is_null() || out.is_null() {
            set_error("null pointer argument");
            return SegcalcStatus::NullPointer;
        }
        let text = (*session).inner.render();
        match CString::new(text) {
            Ok(s) => {
                *out = s.into_raw();
                SegcalcStatus::Ok
            }
            Err(_) => {
                set_error("rendered session contained a NUL byte");
                SegcalcStatus::InternalError
            }
        }
    })
}

/// Runs a command against a session and writes the JSON report to `out_json`.
///
/// `command` is one of `order`, `classify`, `mackey`, `verify`, `jl`,
/// `cosets`, `epsilon`. `opts` may be null. The report is written on both
/// `Ok` and `CounterexampleFound`; the caller frees it.
///
/// # Safety
/// `session` must be a live handle, `command` a NUL-terminated string,
/// `opts` null or valid, `out_json` writable. If `opts->oracle_text` is
/// non-null it must be NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn segcalc_run(
    session: *const SegcalcSession,
    command: *const c_char,
    opts: *const SegcalcOptions,
    out_json: *mut *mut c_char,
) -> SegcalcStatus {
    guarded(|| {
        if session.is_null() || out_json.is_null() {
            set_error("null pointer argument");
            return SegcalcStatus::NullPointer;
        }
        let command = match read_utf8(command) {
            Ok(c) => c,
            Err(status) => return status,
        };
        let Ok(kind) = command.parse::<CommandKind>() else {
            set_error(&format!("unknown command `{command}`"));
            return SegcalcStatus::UnknownCommand;
        };
        let mut run_opts = RunOptions::default();
        if !opts.is_null() {
            let o = *opts;
            if o.d > 0 {
                run_opts.d = Some(o.d);
            }
            run_opts.eta = match o.eta {
                0 => None,
                1 => Some(Sign::Plus),
                -1 => Some(Sign::Minus),
                other => {
                    set_error(&format!("eta must be +1, -1 or 0 (unset), got {other}"));
                    return SegcalcStatus::PreconditionError;
                }
            };
            if o.random > 0 {
                run_opts.random = Some((o.random, o.seed));
            }
            if !o.oracle_text.is_null() {
                let text = match read_utf8(o.oracle_text) {
                    Ok(t) => t,
                    Err(status) => return status,
                };
                match OracleTable::parse(text) {
                    Ok(table) => run_opts.oracle = Some(table),
                    Err(e) => {
                        set_error(&e.to_string());
                        return status_of(&e);
                    }
                }
            }
        }
        match run_command(kind, &(*session).inner, &run_opts) {
            Ok(report) => {
                let json = report.to_json();
                match CString::new(json) {
                    Ok(s) => {
                        *out_json = s.into_raw();
                        if report.counterexample_found() {
                            set_error("verify found a counterexample");
                            SegcalcStatus::CounterexampleFound
                        } else {
                            SegcalcStatus::Ok
                        }
                    }
                    Err(_) => {
                        set_error("report contained a NUL byte");
                        SegcalcStatus::InternalError
                    }
                }
            }
            Err(e) => {
                set_error(&e.to_string());
                status_of(&e)
            }
        }
    })
}

/// Releases a string returned by this library; null is permitted.
///
/// # Safety
/// `s` must originate from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn segcalc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
