//! Exercises the C entry points from Rust, including the error paths.

use std::ffi::{CStr, CString};
use std::ptr;

use segcalc_capi::{
    segcalc_last_error_message, segcalc_run, segcalc_session_free, segcalc_session_parse,
    segcalc_session_render, segcalc_string_free, segcalc_version, SegcalcOptions, SegcalcSession,
    SegcalcStatus,
};

const SESSION: &str =
    "line A k=1 l=1 dual=B\nline B k=1 l=1 dual=A\nset d=2 eta=-1\nA[0,1] + B[-1,0]\n";

unsafe fn parse(text: &str) -> *mut SegcalcSession {
    let c = CString::new(text).unwrap();
    let mut handle: *mut SegcalcSession = ptr::null_mut();
    let status = segcalc_session_parse(c.as_ptr(), &mut handle);
    assert_eq!(status, SegcalcStatus::Ok);
    assert!(!handle.is_null());
    handle
}

unsafe fn take_string(ptr: *mut std::ffi::c_char) -> String {
    assert!(!ptr.is_null());
    let s = CStr::from_ptr(ptr).to_str().unwrap().to_string();
    segcalc_string_free(ptr);
    s
}

#[test]
fn version_is_a_static_string() {
    let v = unsafe { CStr::from_ptr(segcalc_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn parse_run_free_lifecycle() {
    unsafe {
        let session = parse(SESSION);
        let command = CString::new("classify").unwrap();
        let mut out: *mut std::ffi::c_char = ptr::null_mut();
        let status = segcalc_run(session, command.as_ptr(), ptr::null(), &mut out);
        assert_eq!(status, SegcalcStatus::Ok);
        let json = take_string(out);
        assert!(json.contains("\"display\": \"TRUE\""), "{json}");
        segcalc_session_free(session);
    }
}

#[test]
fn options_override_the_context() {
    unsafe {
        let session = parse(SESSION);
        let command = CString::new("order").unwrap();
        let opts = SegcalcOptions {
            d: 4,
            eta: 1,
            random: 0,
            seed: 0,
            oracle_text: ptr::null(),
        };
        let mut out: *mut std::ffi::c_char = ptr::null_mut();
        let status = segcalc_run(session, command.as_ptr(), &opts, &mut out);
        assert_eq!(status, SegcalcStatus::Ok);
        let json = take_string(out);
        assert!(json.contains("\"d\": 4"));
        assert!(json.contains("\"eta\": \"+1\""));
        segcalc_session_free(session);
    }
}

#[test]
fn oracle_text_reaches_the_evaluator() {
    unsafe {
        let session = parse("line A k=1 l=2 dual=A\nset d=2\nA[-1,1]\n");
        let command = CString::new("classify").unwrap();
        let oracle = CString::new("A[-1,1] = true\n").unwrap();
        let opts = SegcalcOptions {
            d: 0,
            eta: 0,
            random: 0,
            seed: 0,
            oracle_text: oracle.as_ptr(),
        };
        let mut out: *mut std::ffi::c_char = ptr::null_mut();
        let status = segcalc_run(session, command.as_ptr(), &opts, &mut out);
        assert_eq!(status, SegcalcStatus::Ok);
        let json = take_string(out);
        assert!(json.contains("\"evaluation\": \"distinguished\""), "{json}");
        segcalc_session_free(session);
    }
}

#[test]
fn parse_errors_surface_a_message() {
    unsafe {
        let bad = CString::new("line A k=1 l=1 dual=A\nA[3,1]\n").unwrap();
        let mut handle: *mut SegcalcSession = ptr::null_mut();
        let status = segcalc_session_parse(bad.as_ptr(), &mut handle);
        assert_eq!(status, SegcalcStatus::ParseError);
        assert!(handle.is_null());
        let msg = take_string(segcalc_last_error_message());
        assert!(msg.contains("a <= b"), "{msg}");
    }
}

#[test]
fn precondition_errors_map_to_their_status() {
    unsafe {
        let session = parse("line A k=1 l=1 dual=A\nset d=1\nA[0,0]\n");
        let command = CString::new("classify").unwrap();
        let mut out: *mut std::ffi::c_char = ptr::null_mut();
        let status = segcalc_run(session, command.as_ptr(), ptr::null(), &mut out);
        assert_eq!(status, SegcalcStatus::PreconditionError);
        assert!(out.is_null());
        let msg = take_string(segcalc_last_error_message());
        assert!(msg.contains("does not embed"), "{msg}");
        segcalc_session_free(session);
    }
}

#[test]
fn unknown_command_and_null_arguments() {
    unsafe {
        let session = parse(SESSION);
        let command = CString::new("frobnicate").unwrap();
        let mut out: *mut std::ffi::c_char = ptr::null_mut();
        assert_eq!(
            segcalc_run(session, command.as_ptr(), ptr::null(), &mut out),
            SegcalcStatus::UnknownCommand
        );
        assert_eq!(
            segcalc_run(session, ptr::null(), ptr::null(), &mut out),
            SegcalcStatus::NullPointer
        );
        let mut handle: *mut SegcalcSession = ptr::null_mut();
        assert_eq!(
            segcalc_session_parse(ptr::null(), &mut handle),
            SegcalcStatus::NullPointer
        );
        segcalc_session_free(session);
        // freeing null is a no-op
        segcalc_session_free(ptr::null_mut());
        segcalc_string_free(ptr::null_mut());
    }
}

#[test]
fn render_round_trips() {
    unsafe {
        let session = parse(SESSION);
        let mut out: *mut std::ffi::c_char = ptr::null_mut();
        assert_eq!(
            segcalc_session_render(session, &mut out),
            SegcalcStatus::Ok
        );
        let rendered = take_string(out);
        let reparsed = parse(&rendered);
        let mut again: *mut std::ffi::c_char = ptr::null_mut();
        assert_eq!(
            segcalc_session_render(reparsed, &mut again),
            SegcalcStatus::Ok
        );
        assert_eq!(rendered, take_string(again));
        segcalc_session_free(session);
        segcalc_session_free(reparsed);
    }
}

#[test]
fn seeded_verify_through_the_ffi() {
    unsafe {
        let session = parse(SESSION);
        let command = CString::new("verify").unwrap();
        let opts = SegcalcOptions {
            d: 0,
            eta: 0,
            random: 100,
            seed: 9,
            oracle_text: ptr::null(),
        };
        let mut out: *mut std::ffi::c_char = ptr::null_mut();
        let status = segcalc_run(session, command.as_ptr(), &opts, &mut out);
        assert_eq!(status, SegcalcStatus::Ok);
        let json = take_string(out);
        assert!(json.contains("\"instances\": 101"));
        assert!(json.contains("\"counterexamples\": 0"));
        segcalc_session_free(session);
    }
}
