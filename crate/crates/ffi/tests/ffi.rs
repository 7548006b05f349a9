use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use mackey_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { mackey_string_free(s) };
    out
}

fn last_error() -> String {
    take(mackey_last_error())
}

#[test]
fn lr_coefficient() {
    let mut out = 0u64;
    let st = unsafe { mackey_lr_coefficient(c("[3,2,1]").as_ptr(), c("[2,1]").as_ptr(), c("[2,1]").as_ptr(), &mut out) };
    assert_eq!((st, out), (MackeyStatus::Ok, 2));
    let st = unsafe { mackey_lr_coefficient(c("[2,1]").as_ptr(), c("[1]").as_ptr(), c("[2]").as_ptr(), &mut out) };
    assert_eq!((st, out), (MackeyStatus::Ok, 1));
}

#[test]
fn parse_and_null_errors() {
    let mut out = 0u64;
    let st = unsafe { mackey_lr_coefficient(c("[2,x]").as_ptr(), c("[1]").as_ptr(), c("[2]").as_ptr(), &mut out) };
    assert_eq!(st, MackeyStatus::Parse);
    let msg = last_error();
    assert!(msg.contains("`x`") && msg.contains("position 3"), "{msg}");
    let st = unsafe { mackey_lr_coefficient(ptr::null(), c("[1]").as_ptr(), c("[2]").as_ptr(), &mut out) };
    assert_eq!(st, MackeyStatus::NullArgument);
    let st = unsafe { mackey_lr_coefficient(c("[1]").as_ptr(), c("[1]").as_ptr(), c("[]").as_ptr(), ptr::null_mut()) };
    assert_eq!(st, MackeyStatus::NullArgument);
}

#[test]
fn degree_cap() {
    let mut out = 0u64;
    let before = mackey_degree_cap();
    // other tests stay below degree 7, so lowering the cap does not disturb them
    mackey_set_degree_cap(7);
    let st = unsafe { mackey_lr_coefficient(c("[4,4]").as_ptr(), c("[4]").as_ptr(), c("[4]").as_ptr(), &mut out) };
    mackey_set_degree_cap(before);
    assert_eq!(st, MackeyStatus::Limit);
    assert!(last_error().contains("cap of 7"));
}

#[test]
fn defect() {
    let mut out = 0usize;
    let st = unsafe { mackey_defect(c("1,0,0,1").as_ptr(), c("0,1,1,0").as_ptr(), &mut out) };
    assert_eq!((st, out), (MackeyStatus::Ok, 2));
    let st = unsafe { mackey_defect(c("0,0,0,0").as_ptr(), c("1,0,0,1").as_ptr(), &mut out) };
    assert_eq!(st, MackeyStatus::Incomparable);
    let st = unsafe { mackey_defect(c("1,0,0").as_ptr(), c("0,0,0,0").as_ptr(), &mut out) };
    assert_eq!(st, MackeyStatus::Parse);
}

#[test]
fn ext_to_trivial() {
    let mut out = 9u64;
    let st = unsafe { mackey_ext_to_trivial(c("[1],[],[],[1]").as_ptr(), 1, &mut out) };
    assert_eq!((st, out), (MackeyStatus::Ok, 1));
    let st = unsafe { mackey_ext_to_trivial(c("[2],[],[],[2]").as_ptr(), 2, &mut out) };
    assert_eq!((st, out), (MackeyStatus::Ok, 0));
}

#[test]
fn decompose_j_iteration_and_json() {
    let mut d = ptr::null_mut();
    let st = unsafe { mackey_decompose_j(c("0,1,1,0").as_ptr(), &mut d) };
    assert_eq!(st, MackeyStatus::Ok);
    let len = unsafe { mackey_decomposition_len(d) };
    assert_eq!(len, 5);
    let mut terms = Vec::new();
    for i in 0..len {
        let mut idx = ptr::null_mut();
        let mut mult = 0u64;
        assert_eq!(unsafe { mackey_decomposition_term(d, i, &mut idx, &mut mult) }, MackeyStatus::Ok);
        terms.push((take(idx), mult));
    }
    let want: Vec<(String, u64)> = ["[],[],[],[]", "[],[1],[1],[]", "[],[1],[],[1]", "[1],[],[1],[]", "[1],[],[],[1]"]
        .into_iter()
        .map(|s| (s.to_string(), 1))
        .collect();
    let mut sorted = terms.clone();
    sorted.sort();
    let mut want_sorted = want.clone();
    want_sorted.sort();
    assert_eq!(sorted, want_sorted);
    let mut idx = ptr::null_mut();
    let mut mult = 0u64;
    assert_eq!(unsafe { mackey_decomposition_term(d, len, &mut idx, &mut mult) }, MackeyStatus::OutOfRange);
    let json = take(unsafe { mackey_decomposition_to_json(d) });
    assert!(json.starts_with("[{\"index\":"), "{json}");
    assert_eq!(json.matches("\"mult\"").count(), len);
    unsafe { mackey_decomposition_free(d) };
    unsafe { mackey_decomposition_free(ptr::null_mut()) };
    assert_eq!(unsafe { mackey_decomposition_len(ptr::null()) }, 0);
    assert!(unsafe { mackey_decomposition_to_json(ptr::null()) }.is_null());
}

#[test]
fn header_is_valid_c() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include").join("mackey.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in ["mackey_lr_coefficient", "mackey_defect", "mackey_decompose_j", "mackey_last_error", "MACKEY_STATUS_INCOMPARABLE"] {
        assert!(text.contains(name), "{name} missing from header");
    }
    let Ok(status) = Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c", "-include"])
        .arg(&header)
        .arg("/dev/null")
        .status()
    else {
        eprintln!("no C compiler; skipping syntax check");
        return;
    };
    assert!(status.success());
}
