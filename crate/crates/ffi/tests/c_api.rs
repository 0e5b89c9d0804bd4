use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use qsymkit_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn parse(s: &str) -> *mut QsymkitElement {
    let mut e = ptr::null_mut();
    let st = unsafe { qsymkit_element_parse(c(s).as_ptr(), &mut e) };
    assert_eq!(st, QsymkitStatus::Ok, "{}", last_error());
    e
}

fn text(e: *const QsymkitElement, normalized: bool) -> String {
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(qsymkit_element_to_text(e, normalized, &mut out), QsymkitStatus::Ok);
        let s = CStr::from_ptr(out).to_str().unwrap().to_string();
        qsymkit_string_free(out);
        s
    }
}

fn last_error() -> String {
    let p = qsymkit_last_error();
    if p.is_null() {
        return String::new();
    }
    unsafe { CStr::from_ptr(p).to_string_lossy().into_owned() }
}

#[test]
fn convert_and_compare() {
    let s = parse("s[2,1]");
    let mut f = ptr::null_mut();
    unsafe {
        assert_eq!(qsymkit_element_convert(s, c("F").as_ptr(), &mut f), QsymkitStatus::Ok);
    }
    assert_eq!(text(f, false), "F[1,2] + F[2,1]");
    let mut eq = false;
    unsafe {
        assert_eq!(qsymkit_element_equal(s, f, &mut eq), QsymkitStatus::Ok);
    }
    assert!(eq);
    unsafe {
        qsymkit_element_free(s);
        qsymkit_element_free(f);
    }
}

#[test]
fn json_roundtrip() {
    let e = parse("1/2*Psi[2,1] - q*Psi[3]");
    let mut js = ptr::null_mut();
    let mut back = ptr::null_mut();
    let mut eq = false;
    unsafe {
        assert_eq!(qsymkit_element_to_json(e, &mut js), QsymkitStatus::Ok);
        assert_eq!(qsymkit_element_from_json(js, &mut back), QsymkitStatus::Ok);
        qsymkit_element_equal(e, back, &mut eq);
        qsymkit_string_free(js);
        qsymkit_element_free(e);
        qsymkit_element_free(back);
    }
    assert!(eq);
}

#[test]
fn kp_of_a_chain_is_h() {
    let mut p = ptr::null_mut();
    let mut k = ptr::null_mut();
    let mut h = ptr::null_mut();
    let mut ext = 0u64;
    unsafe {
        let json = c(r#"{"n":3,"covers":[[1,2],[2,3]]}"#);
        assert_eq!(qsymkit_poset_from_json(json.as_ptr(), &mut p), QsymkitStatus::Ok);
        assert_eq!(qsymkit_poset_linear_extensions(p, &mut ext), QsymkitStatus::Ok);
        assert_eq!(qsymkit_kp_psi(p, c("all").as_ptr(), &mut k), QsymkitStatus::Ok);
        assert_eq!(qsymkit_element_convert(k, c("h").as_ptr(), &mut h), QsymkitStatus::Ok);
    }
    assert_eq!(ext, 1);
    assert_eq!(text(h, false), "h[3]");
    unsafe {
        qsymkit_element_free(h);
        qsymkit_element_free(k);
        qsymkit_poset_free(p);
    }
}

#[test]
fn errors_set_status_and_message() {
    let mut e = ptr::null_mut();
    unsafe {
        assert_eq!(qsymkit_element_parse(c("Psi[0,1]").as_ptr(), &mut e), QsymkitStatus::InvalidInput);
        assert!(e.is_null());
        assert!(!last_error().is_empty());
        assert_eq!(qsymkit_element_parse(ptr::null(), &mut e), QsymkitStatus::NullPointer);
        assert_eq!(qsymkit_element_parse(c("F[1]").as_ptr(), ptr::null_mut()), QsymkitStatus::NullPointer);
        let bad = [0xffu8, 0];
        assert_eq!(qsymkit_element_parse(bad.as_ptr() as *const _, &mut e), QsymkitStatus::InvalidUtf8);
        let cyclic = c(r#"{"n":2,"covers":[[1,2],[2,1]]}"#);
        let mut p = ptr::null_mut();
        assert_eq!(qsymkit_poset_from_json(cyclic.as_ptr(), &mut p), QsymkitStatus::InvalidInput);
        assert_eq!(qsymkit_poset_from_json(c("{").as_ptr(), &mut p), QsymkitStatus::InvalidInput);
        let mut failed = 0usize;
        assert_eq!(qsymkit_verify(c("nope").as_ptr(), 0, &mut failed), QsymkitStatus::InvalidInput);
        assert_eq!(qsymkit_verify(c("bases").as_ptr(), 2, &mut failed), QsymkitStatus::Ok);
        assert_eq!(failed, 0);
        qsymkit_element_free(ptr::null_mut());
        qsymkit_poset_free(ptr::null_mut());
        qsymkit_string_free(ptr::null_mut());
    }
}

#[test]
fn version_matches_the_crate() {
    let v = unsafe { CStr::from_ptr(qsymkit_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

/// Compiles a C program against the generated header and the shared
/// library, then runs it.
#[test]
fn c_program_links_and_runs() {
    let crate_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header_dir = crate_dir.join("include");
    assert!(header_dir.join("qsymkit.h").exists());
    // target/<profile>/deps/<this test> -> target/<profile>
    let lib_dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    if !lib_dir.join("libqsymkit_ffi.so").exists() {
        eprintln!("skipping: no libqsymkit_ffi.so in {}", lib_dir.display());
        return;
    }
    let out_dir = std::env::temp_dir().join(format!("qsymkit_ffi_smoke_{}", std::process::id()));
    std::fs::create_dir_all(&out_dir).unwrap();
    let exe = out_dir.join("smoke");
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let status = Command::new(&cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(&header_dir)
        .arg(crate_dir.join("tests/c/smoke.c"))
        .arg("-L")
        .arg(&lib_dir)
        .arg("-lqsymkit_ffi")
        .arg("-o")
        .arg(&exe)
        .status();
    let status = match status {
        Ok(s) => s,
        Err(e) => {
            eprintln!("skipping: no C compiler ({})", e);
            return;
        }
    };
    assert!(status.success(), "C compile failed");
    let out = Command::new(&exe).env("LD_LIBRARY_PATH", &lib_dir).output().unwrap();
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(out.status.success(), "{}{}", stdout, String::from_utf8_lossy(&out.stderr));
    // 1 < 2, 1 < 3: two linear extensions, K_P = Psi[3]/z + Psi[2,1]/z + ...
    assert!(stdout.starts_with("2 "), "{}", stdout);
    let _ = std::fs::remove_dir_all(&out_dir);
}
