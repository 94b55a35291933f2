use std::ffi::{CStr, CString};
use std::ptr;

use fusion_obstruct_ffi::*;

fn fixture(name: &str) -> *mut FoRing {
    let c = CString::new(name).unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { fo_ring_fixture(c.as_ptr(), &mut h) }, FoStatus::Ok);
    h
}

fn last_error() -> String {
    let p = fo_last_error();
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned();
    unsafe { fo_string_free(p) };
    s
}

fn empty() -> FoResult {
    FoResult {
        verdict: FoVerdict::Inconclusive,
        lower: 0.0,
        upper: 0.0,
        rayleigh: 0.0,
    }
}

#[test]
fn k7_pair_through_the_c_abi() {
    let h = fixture("k7");
    assert_eq!(unsafe { fo_ring_rank(h) }, 7);
    let mut dims = [0.0; 7];
    assert_eq!(unsafe { fo_ring_dims(h, dims.as_mut_ptr(), 7) }, FoStatus::Ok);
    assert_eq!(dims, [1.0, 5.0, 5.0, 5.0, 6.0, 7.0, 7.0]);
    assert_eq!(unsafe { fo_ring_dims(h, dims.as_mut_ptr(), 3) }, FoStatus::BufferTooSmall);
    let set = [5usize, 6];
    let mut r = empty();
    assert_eq!(unsafe { fo_check_localized(h, set.as_ptr(), 2, 3, &mut r) }, FoStatus::Ok);
    assert_eq!(r.verdict, FoVerdict::Violated);
    assert!((r.rayleigh + 0.6294949095).abs() < 1e-6);
    assert_eq!(unsafe { fo_check_primary(h, 1, &mut r) }, FoStatus::Ok);
    assert_eq!(r.verdict, FoVerdict::Holds);
    unsafe { fo_ring_free(h) };
}

#[test]
fn parse_and_twisted_reduced() {
    let text = CString::new(include_str!("../../core/fixtures/corpus/rank8_1.ring")).unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { fo_ring_parse(text.as_ptr(), &mut h) }, FoStatus::Ok);
    let set = [6usize, 7];
    let tw = CString::new("I,I,swap").unwrap();
    let mut r = empty();
    assert_eq!(unsafe { fo_check_reduced(h, set.as_ptr(), 2, 0, tw.as_ptr(), &mut r) }, FoStatus::Ok);
    assert_eq!(r.verdict, FoVerdict::Violated);
    assert_eq!(unsafe { fo_check_schur(h, &mut r) }, FoStatus::Ok);
    unsafe { fo_ring_free(h) };
}

#[test]
fn errors_are_reported() {
    let bad = CString::new("2\n1 0\n").unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { fo_ring_parse(bad.as_ptr(), &mut h) }, FoStatus::ParseError);
    assert!(h.is_null());
    assert!(last_error().contains("syntax"));
    assert_eq!(unsafe { fo_ring_parse(ptr::null(), &mut h) }, FoStatus::NullPointer);
    let name = CString::new("no_such_ring").unwrap();
    assert_eq!(unsafe { fo_ring_fixture(name.as_ptr(), &mut h) }, FoStatus::InvalidArgument);

    let nc = fixture("rank6_nc");
    let mut r = empty();
    assert_eq!(unsafe { fo_check_schur(nc, &mut r) }, FoStatus::EvalError);
    assert!(!last_error().is_empty());
    let set = [9usize];
    assert_eq!(unsafe { fo_check_localized(nc, set.as_ptr(), 1, 2, &mut r) }, FoStatus::EvalError);
    assert_eq!(unsafe { fo_check_localized(nc, ptr::null(), 0, 2, &mut r) }, FoStatus::InvalidArgument);
    assert_eq!(unsafe { fo_check_primary(ptr::null(), 2, &mut r) }, FoStatus::NullPointer);
    unsafe { fo_ring_free(nc) };
    unsafe { fo_ring_free(ptr::null_mut()) };
}

#[test]
fn version_and_header() {
    let v = unsafe { CStr::from_ptr(fo_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/fusion_obstruct.h")).unwrap();
    for f in ["fo_ring_parse", "fo_check_reduced", "fo_last_error", "typedef struct FoRing FoRing", "size_t len"] {
        assert!(header.contains(f), "{f}");
    }
}

#[test]
fn header_compiles_as_c() {
    let dir = std::env::temp_dir().join(format!("fo-hdr-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("use.c");
    std::fs::write(
        &src,
        "#include \"fusion_obstruct.h\"\nint f(void) { FoRing *h = 0; FoResult r; \
         if (fo_ring_fixture(\"k7\", &h) != FO_STATUS_OK) return 1; \
         size_t s[2] = {5, 6}; fo_check_localized(h, s, 2, 3, &r); fo_ring_free(h); \
         return r.verdict == FO_VERDICT_VIOLATED; }\n",
    )
    .unwrap();
    let st = match std::process::Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I", concat!(env!("CARGO_MANIFEST_DIR"), "/include")])
        .arg(&src)
        .status()
    {
        Ok(s) => s,
        // no C compiler on this machine
        Err(_) => return,
    };
    assert!(st.success());
    std::fs::remove_dir_all(dir).unwrap();
}
