use std::ffi::{CStr, CString};
use std::ptr;

use hallfrob_ffi::*;

fn last_error() -> String {
    let p = hf_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

unsafe fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = CStr::from_ptr(p).to_string_lossy().into_owned();
    hf_string_free(p);
    s
}

#[test]
fn preset_model_round_trip() {
    unsafe {
        let name = CString::new("A2").unwrap();
        let mut q = ptr::null_mut();
        assert_eq!(hf_quiver_preset(name.as_ptr(), &mut q), HfStatus::Ok);
        assert!(hf_last_error_message().is_null());
        let mut rank = 0;
        assert_eq!(hf_quiver_rank(q, &mut rank), HfStatus::Ok);
        assert_eq!(rank, 2);

        let mut m = ptr::null_mut();
        assert_eq!(hf_model_new(q, 3, &mut m), HfStatus::Ok);
        let nu = [1usize, 1];
        let mut s = ptr::null_mut();
        assert_eq!(hf_model_point_count(m, nu.as_ptr(), 2, &mut s), HfStatus::Ok);
        assert_eq!(take_string(s), "3");
        let mut classes = 0;
        assert_eq!(hf_model_class_count(m, nu.as_ptr(), 2, &mut classes), HfStatus::Ok);
        assert_eq!(classes, 2);
        let mut passed = false;
        assert_eq!(hf_serre_check(m, 0, 1, &mut passed), HfStatus::Ok);
        assert!(passed);

        let mut dim = 0;
        let nu = [2usize, 2];
        assert_eq!(hf_f_dimension(q, nu.as_ptr(), 2, &mut dim), HfStatus::Ok);
        assert_eq!(dim, 3);
        hf_model_free(m);
        hf_quiver_free(q);
    }
}

#[test]
fn quiver_from_json() {
    unsafe {
        let json = CString::new(
            r#"{"vertices":["a","b"],"edges":[{"s":0,"t":1}],"automorphism":{"vertex_perm":[0,1],"edge_perm":[0]}}"#,
        )
        .unwrap();
        let mut q = ptr::null_mut();
        assert_eq!(hf_quiver_from_json(json.as_ptr(), &mut q), HfStatus::Ok);
        hf_quiver_free(q);
        let bad = CString::new(r#"{"vertices":["a"],"edges":[{"s":0,"t":0}],"automorphism":{"vertex_perm":[0],"edge_perm":[0]}}"#).unwrap();
        assert_eq!(hf_quiver_from_json(bad.as_ptr(), &mut q), HfStatus::InvalidQuiver);
        assert!(last_error().contains("loop"), "{}", last_error());
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut q = ptr::null_mut();
        assert_eq!(hf_quiver_preset(ptr::null(), &mut q), HfStatus::NullPointer);
        assert!(last_error().contains("name"));
        let name = CString::new("E8").unwrap();
        assert_eq!(hf_quiver_preset(name.as_ptr(), &mut q), HfStatus::InvalidInput);

        let name = CString::new("A1").unwrap();
        assert_eq!(hf_quiver_preset(name.as_ptr(), &mut q), HfStatus::Ok);
        let mut m = ptr::null_mut();
        assert_eq!(hf_model_new(q, 6, &mut m), HfStatus::InvalidInput);
        assert!(!last_error().is_empty());
        assert_eq!(hf_model_new(q, 2, &mut m), HfStatus::Ok);
        let nu = [1usize, 1];
        let mut s = ptr::null_mut();
        assert_eq!(hf_model_point_count(m, nu.as_ptr(), 2, &mut s), HfStatus::Mismatch);
        let mut passed = false;
        assert_eq!(hf_serre_check(m, 0, 0, &mut passed), HfStatus::InvalidInput);
        hf_model_free(m);
        hf_quiver_free(q);

        assert_eq!(hf_cyclo_norm(3, 2, &mut s), HfStatus::Ok);
        assert_eq!(take_string(s), "7");
        assert_eq!(hf_cyclo_norm(0, 2, &mut s), HfStatus::InvalidInput);
        hf_string_free(ptr::null_mut());
    }
}

#[test]
fn header_compiles_as_c() {
    let dir = env!("CARGO_MANIFEST_DIR");
    let header = format!("{dir}/include/hallfrob.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for f in ["hf_last_error_message", "hf_string_free", "hf_model_new", "HF_STATUS_NULL_POINTER"] {
        assert!(text.contains(f), "{f} missing from header");
    }
    let src = std::env::temp_dir().join(format!("hallfrob-header-{}.c", std::process::id()));
    std::fs::write(
        &src,
        "#include \"hallfrob.h\"\nint main(void) { HfQuiver *q = 0; HfStatus s = hf_quiver_preset(\"A2\", &q); return s == HF_STATUS_OK ? 0 : 1; }\n",
    )
    .unwrap();
    let Ok(out) = std::process::Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror", "-I", &format!("{dir}/include")])
        .arg(&src)
        .output()
    else {
        eprintln!("no C compiler; header syntax check skipped");
        return;
    };
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}
