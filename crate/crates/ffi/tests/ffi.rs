use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use gkm_ffi::*;

fn last_error() -> String {
    let p = gkm_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn example(name: &str) -> *mut GkmSheaf {
    let name = CString::new(name).unwrap();
    let mut sheaf = ptr::null_mut();
    assert_eq!(
        unsafe { gkm_sheaf_example(name.as_ptr(), &mut sheaf) },
        GkmStatus::Ok
    );
    sheaf
}

fn take_string(p: *mut c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string();
    unsafe { gkm_string_free(p) };
    s
}

#[test]
fn sphere_report() {
    let sheaf = example("sphere");
    let (mut passed, mut nd) = (false, 0usize);
    assert_eq!(
        unsafe { gkm_sheaf_validate(sheaf, &mut passed, &mut nd) },
        GkmStatus::Ok
    );
    assert!(passed);
    assert_eq!(nd, 1);

    let mut report = ptr::null_mut();
    assert_eq!(
        unsafe { gkm_report_compute(sheaf, 6, true, true, &mut report) },
        GkmStatus::Ok
    );
    let h0: Vec<usize> = (0..=6)
        .map(|d| {
            let mut dim = 0;
            assert_eq!(
                unsafe { gkm_report_h0_dim(report, d, &mut dim) },
                GkmStatus::Ok
            );
            dim
        })
        .collect();
    assert_eq!(h0, vec![1, 0, 2, 0, 2, 0, 2]);
    let mut dim = 7;
    assert_eq!(
        unsafe { gkm_report_h1_dim(report, 2, &mut dim) },
        GkmStatus::Ok
    );
    assert_eq!(dim, 0);
    assert_eq!(
        unsafe { gkm_report_h0_dim(report, 8, &mut dim) },
        GkmStatus::OutOfRange
    );
    assert!(last_error().contains("cutoff"));
    let mut ok = false;
    assert_eq!(
        unsafe { gkm_report_checks_passed(report, &mut ok) },
        GkmStatus::Ok
    );
    assert!(ok);

    let mut json = ptr::null_mut();
    assert_eq!(
        unsafe { gkm_report_to_json(report, &mut json) },
        GkmStatus::Ok
    );
    let json = take_string(json);
    assert!(json.contains("\"h0_generators\""));
    unsafe {
        gkm_report_free(report);
        gkm_sheaf_free(sheaf);
    }
}

#[test]
fn json_round_trip() {
    let sheaf = example("theta");
    let mut text = ptr::null_mut();
    assert_eq!(
        unsafe { gkm_sheaf_to_json(sheaf, &mut text) },
        GkmStatus::Ok
    );
    let text = take_string(text);
    let c = CString::new(text.clone()).unwrap();
    let mut again = ptr::null_mut();
    assert_eq!(
        unsafe { gkm_sheaf_from_json(c.as_ptr(), &mut again) },
        GkmStatus::Ok
    );
    let mut text2 = ptr::null_mut();
    assert_eq!(
        unsafe { gkm_sheaf_to_json(again, &mut text2) },
        GkmStatus::Ok
    );
    assert_eq!(take_string(text2), text);

    let mut report = ptr::null_mut();
    assert_eq!(
        unsafe { gkm_report_compute(again, 4, false, false, &mut report) },
        GkmStatus::Ok
    );
    let mut dim = 0;
    assert_eq!(
        unsafe { gkm_report_h1_dim(report, 0, &mut dim) },
        GkmStatus::Ok
    );
    assert_eq!(dim, 1);
    let mut ok = true;
    assert_eq!(
        unsafe { gkm_report_checks_passed(report, &mut ok) },
        GkmStatus::Ok
    );
    assert!(!ok);
    unsafe {
        gkm_report_free(report);
        gkm_sheaf_free(again);
        gkm_sheaf_free(sheaf);
    }
}

#[test]
fn error_codes() {
    let mut sheaf = ptr::null_mut();
    assert_eq!(
        unsafe { gkm_sheaf_from_json(ptr::null(), &mut sheaf) },
        GkmStatus::NullPointer
    );
    let bad = CString::new("{").unwrap();
    assert_eq!(
        unsafe { gkm_sheaf_from_json(bad.as_ptr(), &mut sheaf) },
        GkmStatus::ParseError
    );
    assert!(!last_error().is_empty());
    let invalid = CString::new(
        r#"{"torus_rank": 1, "vertices": ["a"], "relations": [{"weight": [1], "blocks": []}]}"#,
    )
    .unwrap();
    assert_eq!(
        unsafe { gkm_sheaf_from_json(invalid.as_ptr(), &mut sheaf) },
        GkmStatus::InvalidSheaf
    );
    let bytes = [0xffu8, 0];
    assert_eq!(
        unsafe { gkm_sheaf_from_json(bytes.as_ptr().cast(), &mut sheaf) },
        GkmStatus::InvalidUtf8
    );
    let unknown = CString::new("cpn").unwrap();
    assert_eq!(
        unsafe { gkm_sheaf_example(unknown.as_ptr(), &mut sheaf) },
        GkmStatus::UnknownExample
    );
    assert!(sheaf.is_null());

    let point = example("point");
    let mut report = ptr::null_mut();
    assert_eq!(
        unsafe { gkm_report_compute(point, 3, false, false, &mut report) },
        GkmStatus::OutOfRange
    );
    assert_eq!(
        unsafe { gkm_report_compute(point, 2, false, false, ptr::null_mut()) },
        GkmStatus::NullPointer
    );
    assert_eq!(
        unsafe { gkm_report_compute(point, 2, false, false, &mut report) },
        GkmStatus::Ok
    );
    assert!(gkm_last_error_message().is_null());
    unsafe {
        gkm_report_free(report);
        gkm_sheaf_free(point);
        gkm_sheaf_free(ptr::null_mut());
        gkm_string_free(ptr::null_mut());
    }
}

#[test]
fn version() {
    let v = unsafe { CStr::from_ptr(gkm_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

const C_PROGRAM: &str = r#"
#include <stdio.h>
#include "gkm.h"

int main(void) {
    GkmSheaf *sheaf = NULL;
    if (gkm_sheaf_example("cp1", &sheaf) != GKM_STATUS_OK) return 10;
    GkmReport *report = NULL;
    if (gkm_report_compute(sheaf, 4, false, true, &report) != GKM_STATUS_OK) return 11;
    size_t dims[3];
    for (int i = 0; i < 3; i++) {
        if (gkm_report_h0_dim(report, 2 * i, &dims[i]) != GKM_STATUS_OK) return 12;
    }
    bool ok = false;
    gkm_report_checks_passed(report, &ok);
    printf("%zu %zu %zu %d\n", dims[0], dims[1], dims[2], ok);
    if (gkm_sheaf_example("nope", &sheaf) != GKM_STATUS_UNKNOWN_EXAMPLE) return 13;
    printf("%s\n", gkm_last_error_message());
    gkm_report_free(report);
    gkm_sheaf_free(sheaf);
    return 0;
}
"#;

/// Compiles a C program against the generated header and the static library.
#[test]
fn c_program_links_against_the_header() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let exe = std::env::current_exe().unwrap();
    let target_dir = exe.parent().unwrap().parent().unwrap();
    let lib = target_dir.join("libgkm_ffi.a");
    assert!(
        lib.exists(),
        "static library not built at {}",
        lib.display()
    );
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("main.c");
    std::fs::write(&src, C_PROGRAM).unwrap();
    let bin = dir.path().join("main");
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let status = Command::new(&cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&bin)
        .status()
        .expect("a C compiler is available");
    assert!(status.success());
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status.code());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(stdout, "1 3 5 1\nunknown example \"nope\"\n");
}
