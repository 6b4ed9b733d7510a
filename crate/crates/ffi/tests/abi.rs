use std::ffi::{CStr, CString};
use std::ptr;

use quillen_ffi::*;

fn json(r: *const QgReport) -> serde_json::Value {
    let s = unsafe { CStr::from_ptr(qg_report_json(r)) };
    serde_json::from_str(s.to_str().unwrap()).unwrap()
}

fn last_error() -> String {
    let p = qg_last_error();
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { qg_string_free(p) };
    s
}

fn bundled(name: &str) -> *mut QgGroup {
    let name = CString::new(name).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { qg_group_bundled(name.as_ptr(), &mut g) },
        QgStatus::Ok
    );
    g
}

#[test]
fn betti_of_alt5() {
    let g = bundled("alt5");
    assert_eq!(unsafe { qg_group_order(g) }, 60);
    assert_eq!(unsafe { qg_group_degree(g) }, 5);
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { qg_betti(g, 2, &mut r) }, QgStatus::Ok);
    let v = json(r);
    assert_eq!(v["betti"]["values"], serde_json::json!([4]));
    assert_eq!(v["poset_size"], 20);
    unsafe {
        qg_report_free(r);
        qg_group_free(g);
    }
}

#[test]
fn spec_text_and_certificates() {
    let spec = CString::new(r#"{"name": "S4", "construction": {"kind": "sym", "n": 4}}"#).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { qg_group_from_spec(spec.as_ptr(), 0, &mut g) },
        QgStatus::Ok
    );
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { qg_hqc(g, 2, &mut r) }, QgStatus::Ok);
    assert_eq!(json(r)["verdict"], "inapplicable");
    unsafe { qg_report_free(r) };
    assert_eq!(unsafe { qg_euler_formula(g, 3, &mut r) }, QgStatus::Ok);
    assert_eq!(json(r)["agree"], true);
    unsafe {
        qg_report_free(r);
        qg_group_free(g);
    }
}

#[test]
fn criterion_report() {
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { qg_criterion(7, &mut r) }, QgStatus::Ok);
    assert_eq!(json(r)["passed"], true);
    unsafe { qg_report_free(r) };
    assert_eq!(
        unsafe { qg_criterion(99, &mut r) },
        QgStatus::ComputationFailed
    );
    assert!(r.is_null());
}

#[test]
fn error_codes() {
    let mut g = ptr::null_mut();
    let bad = CString::new("{not json").unwrap();
    assert_eq!(
        unsafe { qg_group_from_spec(bad.as_ptr(), 0, &mut g) },
        QgStatus::MalformedSpec
    );
    assert!(g.is_null());
    assert!(last_error().contains("malformed"));

    let big = CString::new(r#"{"name": "S9", "construction": {"kind": "sym", "n": 9}}"#).unwrap();
    assert_eq!(
        unsafe { qg_group_from_spec(big.as_ptr(), 1000, &mut g) },
        QgStatus::CapExceeded
    );

    let missing = CString::new("nothing").unwrap();
    assert_eq!(
        unsafe { qg_group_bundled(missing.as_ptr(), &mut g) },
        QgStatus::UnknownGroup
    );
    assert_eq!(
        unsafe { qg_group_bundled(ptr::null(), &mut g) },
        QgStatus::NullArgument
    );
    assert_eq!(
        unsafe { qg_group_bundled(missing.as_ptr(), ptr::null_mut()) },
        QgStatus::NullArgument
    );

    let a5 = bundled("alt5");
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { qg_betti(a5, 4, &mut r) }, QgStatus::NotPrime);
    assert_eq!(
        unsafe { qg_betti(ptr::null(), 2, &mut r) },
        QgStatus::NullArgument
    );
    unsafe { qg_group_free(a5) };

    assert_eq!(unsafe { qg_group_order(ptr::null()) }, 0);
    assert!(unsafe { qg_report_json(ptr::null()) }.is_null());
    unsafe {
        qg_group_free(ptr::null_mut());
        qg_report_free(ptr::null_mut());
        qg_string_free(ptr::null_mut());
    }
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(qg_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_compiles_as_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/quillen_ffi.h");
    let text = std::fs::read_to_string(header).unwrap();
    for name in [
        "qg_group_from_spec",
        "qg_betti",
        "qg_report_free",
        "qg_last_error",
        "QG_STATUS_CAP_EXCEEDED",
    ] {
        assert!(text.contains(name), "{name}");
    }
    let dir = std::env::var("CARGO_TARGET_TMPDIR")
        .map(std::path::PathBuf::from)
        .unwrap_or_else(|_| std::env::temp_dir());
    let src = dir.join("quillen_ffi_header_check.c");
    std::fs::write(
        &src,
        format!("#include \"{header}\"\nint main(void) {{ return QG_STATUS_OK; }}\n"),
    )
    .unwrap();
    match std::process::Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror"])
        .arg(&src)
        .status()
    {
        Ok(status) => assert!(status.success()),
        Err(_) => eprintln!("no C compiler; header syntax not checked"),
    }
}
