use std::ffi::{CStr, CString};
use std::ptr;

use rhl_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    let p = rhl_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn build_find_and_free() {
    unsafe {
        let mut c = ptr::null_mut();
        assert_eq!(rhl_coloring_build(cstr("messy-k6").as_ptr(), 0, 0, &mut c), RhlStatus::Ok);
        assert_eq!(rhl_coloring_palette_size(c), 10);
        assert_eq!(rhl_coloring_edge_count(c), 20);
        let mut t = ptr::null_mut();
        assert_eq!(rhl_pattern_from_name(cstr("T").as_ptr(), &mut t), RhlStatus::Ok);
        let (mut found, mut len) = (false, 0usize);
        let mut verts = [0u32; 2];
        let s = rhl_find_rainbow_copy(c, t, &mut found, verts.as_mut_ptr(), verts.len(), &mut len);
        assert_eq!(s, RhlStatus::BufferTooSmall);
        assert!(found);
        assert_eq!(len, 5);
        let mut verts = [0u32; 5];
        let s = rhl_find_rainbow_copy(c, t, &mut found, verts.as_mut_ptr(), verts.len(), &mut len);
        assert_eq!(s, RhlStatus::Ok);
        let mut sorted = verts;
        sorted.sort_unstable();
        sorted.windows(2).for_each(|w| assert!(w[0] < w[1]));
        rhl_pattern_free(t);
        rhl_coloring_free(c);
    }
}

#[test]
fn text_round_trip() {
    unsafe {
        let mut c = ptr::null_mut();
        assert_eq!(rhl_coloring_build(cstr("loose-lb").as_ptr(), 7, 0, &mut c), RhlStatus::Ok);
        let mut text = ptr::null_mut();
        assert_eq!(rhl_coloring_to_text(c, &mut text), RhlStatus::Ok);
        let mut d = ptr::null_mut();
        assert_eq!(rhl_coloring_parse(text, &mut d), RhlStatus::Ok);
        let mut text2 = ptr::null_mut();
        assert_eq!(rhl_coloring_to_text(d, &mut text2), RhlStatus::Ok);
        assert_eq!(CStr::from_ptr(text), CStr::from_ptr(text2));
        rhl_string_free(text);
        rhl_string_free(text2);
        rhl_coloring_free(c);
        rhl_coloring_free(d);
    }
}

#[test]
fn certify_and_verify() {
    unsafe {
        let mut c = ptr::null_mut();
        assert_eq!(rhl_coloring_build(cstr("loose-lb").as_ptr(), 8, 0, &mut c), RhlStatus::Ok);
        let mut json = ptr::null_mut();
        assert_eq!(rhl_certify(c, RhlTheorem::LoosePlus, &mut json), RhlStatus::Ok);
        assert!(CStr::from_ptr(json).to_str().unwrap().starts_with(r#"{"case":"TWO_APEX""#));
        assert_eq!(rhl_verify_certificate(c, json), RhlStatus::Ok);
        rhl_string_free(json);
        let wrong = cstr(r#"{"case":"MONO_MINUS_VERTEX","u":0,"mono_color":0}"#);
        assert_eq!(rhl_verify_certificate(c, wrong.as_ptr()), RhlStatus::Rejected);
        assert!(!last_error().is_empty());
        assert_eq!(rhl_verify_certificate(c, cstr("{").as_ptr()), RhlStatus::ParseError);
        // tripartite theorem on a complete host
        assert_eq!(rhl_certify(c, RhlTheorem::MpLoose, &mut json), RhlStatus::PreconditionFailed);
        rhl_coloring_free(c);
    }
}

#[test]
fn anti_ramsey_and_budget() {
    unsafe {
        let mut m = ptr::null_mut();
        assert_eq!(rhl_pattern_from_name(cstr("M").as_ptr(), &mut m), RhlStatus::Ok);
        let mut v = 0;
        assert_eq!(rhl_anti_ramsey(RhlHostKind::Tripartite, 3, m, 0, 0, 2, &mut v), RhlStatus::Ok);
        assert_eq!(v, 4);
        assert_eq!(rhl_anti_ramsey(RhlHostKind::Complete, 7, m, 1, 0, 1, &mut v), RhlStatus::Inconclusive);
        rhl_pattern_free(m);
    }
}

#[test]
fn null_and_bad_arguments() {
    unsafe {
        let mut c = ptr::null_mut();
        assert_eq!(rhl_coloring_build(ptr::null(), 5, 0, &mut c), RhlStatus::NullPointer);
        assert_eq!(rhl_coloring_build(cstr("tight-lb").as_ptr(), 4, 0, &mut c), RhlStatus::InvalidArgument);
        assert!(last_error().contains("n >= 5"));
        assert_eq!(rhl_coloring_build(cstr("nope").as_ptr(), 0, 0, &mut c), RhlStatus::InvalidArgument);
        let mut p = ptr::null_mut();
        assert_eq!(rhl_pattern_from_name(cstr("Q").as_ptr(), &mut p), RhlStatus::InvalidArgument);
        assert_eq!(rhl_coloring_palette_size(ptr::null()), 0);
        let mut v = 0;
        assert_eq!(rhl_anti_ramsey(RhlHostKind::Complete, 5, ptr::null(), 0, 0, 1, &mut v), RhlStatus::NullPointer);
        rhl_coloring_free(ptr::null_mut());
        rhl_string_free(ptr::null_mut());
    }
}
