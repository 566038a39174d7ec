use std::ffi::{c_char, CStr, CString};
use std::ptr;

use uqplus_ffi::*;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { uq_string_free(s) };
    out
}

fn last_error() -> String {
    take(uq_last_error())
}

#[test]
fn normal_form_through_handles() {
    let name = CString::new("b2").unwrap();
    let mut alg = ptr::null_mut();
    assert_eq!(unsafe { uq_algebra_builtin(name.as_ptr(), &mut alg) }, UqStatus::Ok);
    assert_eq!(unsafe { uq_algebra_generator_count(alg) }, 4);

    let (t1, t2) = (CString::new("e2").unwrap(), CString::new("e1").unwrap());
    let (mut a, mut b, mut ab) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
    unsafe {
        assert_eq!(uq_element_parse(alg, t1.as_ptr(), &mut a), UqStatus::Ok);
        assert_eq!(uq_element_parse(alg, t2.as_ptr(), &mut b), UqStatus::Ok);
        assert_eq!(uq_element_mul(a, b, &mut ab), UqStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(uq_element_to_string(ab, &mut s), UqStatus::Ok);
        assert_eq!(take(s), "q^-2*e1*e2 - q^-2*e3");

        let z = CString::new("z'").unwrap();
        let mut zp = ptr::null_mut();
        assert_eq!(uq_element_parse(alg, z.as_ptr(), &mut zp), UqStatus::Ok);
        let mut central = false;
        assert_eq!(uq_element_is_central(zp, &mut central), UqStatus::Ok);
        assert!(central);
        assert_eq!(uq_element_is_central(a, &mut central), UqStatus::Ok);
        assert!(!central);

        let mut sum = ptr::null_mut();
        assert_eq!(uq_element_add(ab, ab, &mut sum), UqStatus::Ok);
        let mut eq = true;
        assert_eq!(uq_element_equal(sum, ab, &mut eq), UqStatus::Ok);
        assert!(!eq);

        for e in [a, b, ab, zp, sum] {
            uq_element_free(e);
        }
        uq_algebra_free(alg);
    }
}

#[test]
fn errors_carry_codes_and_messages() {
    let mut alg = ptr::null_mut();
    let bad = CString::new("nope").unwrap();
    assert_eq!(unsafe { uq_algebra_builtin(bad.as_ptr(), &mut alg) }, UqStatus::InvalidInput);
    assert!(last_error().contains("nope"));
    assert!(alg.is_null());

    assert_eq!(unsafe { uq_algebra_builtin(ptr::null(), &mut alg) }, UqStatus::NullPointer);

    let name = CString::new("b2").unwrap();
    assert_eq!(unsafe { uq_algebra_builtin(name.as_ptr(), &mut alg) }, UqStatus::Ok);
    let text = CString::new("e1*(e2").unwrap();
    let mut e = ptr::null_mut();
    assert_eq!(unsafe { uq_element_parse(alg, text.as_ptr(), &mut e) }, UqStatus::Parse);
    assert!(last_error().contains("byte 6"));

    let h = CString::new("heisenberg").unwrap();
    let mut halg = ptr::null_mut();
    let (x, y) = (CString::new("e1").unwrap(), CString::new("E1").unwrap());
    let (mut ex, mut ey, mut exy) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
    unsafe {
        assert_eq!(uq_algebra_builtin(h.as_ptr(), &mut halg), UqStatus::Ok);
        assert_eq!(uq_element_parse(alg, x.as_ptr(), &mut ex), UqStatus::Ok);
        assert_eq!(uq_element_parse(halg, y.as_ptr(), &mut ey), UqStatus::Ok);
        assert_eq!(uq_element_mul(ex, ey, &mut exy), UqStatus::Mismatch);
        uq_element_free(ex);
        uq_element_free(ey);
        uq_algebra_free(halg);
        uq_algebra_free(alg);
        // freeing NULL is a no-op
        uq_algebra_free(ptr::null_mut());
        uq_element_free(ptr::null_mut());
        uq_string_free(ptr::null_mut());
    }
}

#[test]
fn braidings_relations_and_hilbert_series() {
    let json = CString::new(r#"{"C": [[2, -1], [-2, 2]], "d": [2, 1]}"#).unwrap();
    let mut b = ptr::null_mut();
    unsafe {
        assert_eq!(uq_braiding_from_cartan_json(json.as_ptr(), &mut b), UqStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(uq_relations_json(b, 4, &mut s), UqStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 2);

        let mut dims = [0usize; 7];
        assert_eq!(uq_hilbert_series(b, 6, dims.as_mut_ptr(), dims.len()), UqStatus::Ok);
        assert_eq!(dims, [1, 2, 4, 7, 11, 16, 23]);
        assert_eq!(uq_hilbert_series(b, 7, dims.as_mut_ptr(), dims.len()), UqStatus::BufferTooSmall);
        let mut s = ptr::null_mut();
        assert_eq!(uq_relations_json(b, 9, &mut s), UqStatus::Resource);
        uq_braiding_free(b);
    }
    let bad = CString::new(r#"{"C": [[2, 0], [-1, 2]], "d": [1, 1]}"#).unwrap();
    let mut b = ptr::null_mut();
    assert_eq!(unsafe { uq_braiding_from_cartan_json(bad.as_ptr(), &mut b) }, UqStatus::InvalidInput);
}

#[test]
fn verify_report_through_the_abi() {
    let mut s = ptr::null_mut();
    let mut passed = true;
    assert_eq!(unsafe { uq_verify_json(&mut s, &mut passed) }, UqStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
    assert_eq!(v["passed"], passed);
    assert!(v["identities"].as_array().unwrap().len() > 20);
    let version = unsafe { CStr::from_ptr(uq_version()) }.to_str().unwrap();
    assert_eq!(version, env!("CARGO_PKG_VERSION"));
}
