use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use gsq_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(gsq_last_error()) }.to_string_lossy().into_owned()
}

fn uq_plus(n: usize) -> *mut GsqSystem {
    let mut sys = ptr::null_mut();
    assert_eq!(unsafe { gsq_system_builtin_uq_plus(n, &mut sys) }, GsqStatus::Ok);
    sys
}

#[test]
fn builtin_verifies_and_counts() {
    let sys = uq_plus(3);
    unsafe {
        assert_eq!((gsq_system_generator_count(sys), gsq_system_relation_count(sys)), (6, 15));
        let mut gs = false;
        assert_eq!(gsq_is_gs_basis(sys, &mut gs), GsqStatus::Ok);
        assert!(gs);
        let mut counts = [0u64; 5];
        assert_eq!(gsq_hilbert(sys, 4, counts.as_mut_ptr(), counts.len()), GsqStatus::Ok);
        assert_eq!(counts, [1, 3, 8, 17, 33]);
        assert_eq!(gsq_hilbert(sys, 5, counts.as_mut_ptr(), counts.len()), GsqStatus::BufferTooSmall);
        gsq_system_free(sys);
    }
}

#[test]
fn normal_form_round_trip() {
    let sys = uq_plus(2);
    let poly = CString::new("x13*x12").unwrap();
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(gsq_normal_form(sys, poly.as_ptr(), &mut out), GsqStatus::Ok);
        assert_eq!(CStr::from_ptr(out).to_str().unwrap(), "q^-2 x12*x13");
        gsq_string_free(out);
        let bad = CString::new("x99").unwrap();
        assert_eq!(gsq_normal_form(sys, bad.as_ptr(), &mut out), GsqStatus::ParseError);
        assert!(last_error().contains("x99"));
        gsq_system_free(sys);
    }
}

#[test]
fn text_input_and_errors() {
    let mut sys = ptr::null_mut();
    let good = CString::new("generators: y < x\nrel: x*x - y\n").unwrap();
    let bad = CString::new("generators: x\nrel: x y\n").unwrap();
    unsafe {
        assert_eq!(gsq_system_from_text(good.as_ptr(), &mut sys), GsqStatus::Ok);
        assert!(last_error().is_empty());
        let mut gs = true;
        assert_eq!(gsq_is_gs_basis(sys, &mut gs), GsqStatus::Ok);
        assert!(!gs);
        gsq_system_free(sys);
        let mut other = ptr::null_mut();
        assert_eq!(gsq_system_from_text(bad.as_ptr(), &mut other), GsqStatus::ParseError);
        assert!(other.is_null());
        assert!(last_error().contains("line 2, column 8"), "{}", last_error());
        assert_eq!(gsq_system_from_text(ptr::null(), &mut other), GsqStatus::NullPointer);
        assert_eq!(gsq_system_from_text(good.as_ptr(), ptr::null_mut()), GsqStatus::NullPointer);
        assert_eq!(gsq_system_builtin_uq_plus(0, &mut other), GsqStatus::InvalidArgument);
        let mut gs = false;
        assert_eq!(gsq_is_gs_basis(ptr::null(), &mut gs), GsqStatus::NullPointer);
        assert_eq!(gsq_system_generator_count(ptr::null()), 0);
        gsq_system_free(ptr::null_mut());
        gsq_string_free(ptr::null_mut());
    }
}

#[test]
fn invalid_utf8_is_reported() {
    let bytes = [0x67u8, 0xff, 0x00];
    let mut sys = ptr::null_mut();
    let status = unsafe { gsq_system_from_text(bytes.as_ptr().cast(), &mut sys) };
    assert_eq!(status, GsqStatus::InvalidUtf8);
}

fn header() -> String {
    std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("include/gsq.h")).unwrap()
}

#[test]
fn header_declares_every_export() {
    let h = header();
    for f in [
        "gsq_system_from_text",
        "gsq_system_builtin_uq_plus",
        "gsq_system_free",
        "gsq_system_generator_count",
        "gsq_system_relation_count",
        "gsq_is_gs_basis",
        "gsq_normal_form",
        "gsq_hilbert",
        "gsq_string_free",
        "gsq_last_error",
    ] {
        assert!(h.contains(&format!("{f}(")), "{f} missing from header");
    }
    for code in ["GSQ_STATUS_OK = 0", "GSQ_STATUS_PARSE_ERROR = 3", "GSQ_STATUS_PANIC = 6"] {
        assert!(h.contains(code), "{code}");
    }
    assert!(h.contains("typedef struct GsqSystem GsqSystem;"));
}

/// Directory holding the library artifacts for the profile running this test.
fn artifact_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn c_program_links_against_the_static_library() {
    let dir = artifact_dir();
    let mut build = Command::new(env!("CARGO"));
    build.args(["build", "-p", "gsq-ffi", "--lib"]).current_dir(env!("CARGO_MANIFEST_DIR"));
    if dir.file_name().and_then(|s| s.to_str()) == Some("release") {
        build.arg("--release");
    }
    assert!(build.status().unwrap().success());
    let tmp = tempdir();
    let exe = tmp.join("smoke");
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let status = Command::new(cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(manifest.join("tests/smoke.c"))
        .arg(dir.join("libgsq_ffi.a"))
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "ok\n");
}

fn tempdir() -> PathBuf {
    let d = std::env::temp_dir().join(format!("gsq-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}
