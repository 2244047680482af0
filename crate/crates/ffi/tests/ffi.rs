use std::ffi::{CStr, CString};
use std::ptr;

use idealcore_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn ring(vars: &str) -> *mut IcRing {
    let mut r = ptr::null_mut();
    assert_eq!(ic_ring_new(c(vars).as_ptr(), c("GF:32003").as_ptr(), &mut r), IcStatus::Ok);
    r
}

unsafe fn ideal(r: *const IcRing, gens: &str) -> *mut IcIdeal {
    let mut i = ptr::null_mut();
    assert_eq!(ic_ideal_parse(r, c(gens).as_ptr(), &mut i), IcStatus::Ok);
    i
}

unsafe fn render(i: *const IcIdeal) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(ic_ideal_to_string(i, &mut s), IcStatus::Ok);
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    ic_string_free(s);
    out
}

unsafe fn last_error() -> String {
    CStr::from_ptr(ic_last_error()).to_string_lossy().into_owned()
}

#[test]
fn ideal_arithmetic_round_trip() {
    unsafe {
        let r = ring("x,y");
        let a = ideal(r, "x^2, y^2");
        let m = ideal(r, "x, y");
        let m2 = ideal(r, "(x, y)^2");

        let mut colon = ptr::null_mut();
        assert_eq!(ic_ideal_colon(a, m2, &mut colon), IcStatus::Ok);
        let mut eq = false;
        assert_eq!(ic_ideal_equal(colon, m, &mut eq), IcStatus::Ok);
        assert!(eq);

        let mut inter = ptr::null_mut();
        assert_eq!(ic_ideal_intersect(a, m, &mut inter), IcStatus::Ok);
        assert_eq!(ic_ideal_equal(inter, a, &mut eq), IcStatus::Ok);
        assert!(eq);

        let mut sq = ptr::null_mut();
        assert_eq!(ic_ideal_power(m, 2, &mut sq), IcStatus::Ok);
        assert_eq!(ic_ideal_equal(sq, m2, &mut eq), IcStatus::Ok);
        assert!(eq);

        let mut member = false;
        assert_eq!(ic_ideal_member(m2, c("x*y").as_ptr(), &mut member), IcStatus::Ok);
        assert!(member);
        assert_eq!(ic_ideal_member(m2, c("x").as_ptr(), &mut member), IcStatus::Ok);
        assert!(!member);

        assert_eq!(render(a), "(x^2, y^2)");

        for h in [a, m, m2, colon, inter, sq] {
            ic_ideal_free(h);
        }
        ic_ring_free(r);
    }
}

#[test]
fn reductions_and_core() {
    unsafe {
        let r = ring("x,y");
        let i = ideal(r, "(x, y)^2");
        let j = ideal(r, "x^2, y^2");

        let mut red = 0u32;
        assert_eq!(ic_reduction_number(j, i, 30, &mut red), IcStatus::Ok);
        assert_eq!(red, 1);
        let mut spread = 0u32;
        assert_eq!(ic_analytic_spread(i, &mut spread), IcStatus::Ok);
        assert_eq!(spread, 2);

        let m3 = ideal(r, "(x, y)^3");
        let mut core = ptr::null_mut();
        assert_eq!(ic_core_formula(i, j, 30, &mut core), IcStatus::Ok);
        let mut eq = false;
        assert_eq!(ic_ideal_equal(core, m3, &mut eq), IcStatus::Ok);
        assert!(eq);

        let mut mc = ptr::null_mut();
        assert_eq!(ic_core_montecarlo(i, 7, 5, &mut mc), IcStatus::Ok);
        assert_eq!(ic_ideal_equal(mc, m3, &mut eq), IcStatus::Ok);
        assert!(eq);

        let not_red = ideal(r, "x^2");
        assert_eq!(ic_reduction_number(not_red, i, 5, &mut red), IcStatus::NotAReduction);
        assert!(!last_error().is_empty());

        for h in [i, j, m3, core, mc, not_red] {
            ic_ideal_free(h);
        }
        ic_ring_free(r);
    }
}

#[test]
fn errors_are_reported_by_code() {
    unsafe {
        let mut r = ptr::null_mut();
        assert_eq!(ic_ring_new(c("x,y").as_ptr(), c("GF:4").as_ptr(), &mut r), IcStatus::InvalidArgument);
        assert!(r.is_null());
        assert_eq!(ic_ring_new(ptr::null(), c("QQ").as_ptr(), &mut r), IcStatus::NullPointer);

        let r = ring("x,y");
        let mut i = ptr::null_mut();
        assert_eq!(ic_ideal_parse(r, c("x + + ").as_ptr(), &mut i), IcStatus::Parse);
        assert_eq!(ic_ideal_parse(r, c("z").as_ptr(), &mut i), IcStatus::Parse);
        let bad = [0xffu8, 0];
        assert_eq!(ic_ideal_parse(r, bad.as_ptr().cast(), &mut i), IcStatus::InvalidUtf8);

        let other = ring("x,y,z");
        let a = ideal(r, "x");
        let b = ideal(other, "x");
        let mut sum = ptr::null_mut();
        assert_eq!(ic_ideal_sum(a, b, &mut sum), IcStatus::RingMismatch);
        assert_eq!(ic_ideal_sum(a, ptr::null(), &mut sum), IcStatus::NullPointer);
        assert_eq!(ic_ideal_sum(a, a, ptr::null_mut()), IcStatus::NullPointer);

        let mut ok = false;
        assert_eq!(ic_run_fixture(c("no-such-fixture").as_ptr(), &mut ok), IcStatus::UnknownFixture);
        assert!(last_error().contains("no-such-fixture"));

        ic_ideal_free(a);
        ic_ideal_free(b);
        ic_ideal_free(ptr::null_mut());
        ic_ring_free(r);
        ic_ring_free(other);
    }
}

#[test]
fn builtin_fixture_runs() {
    unsafe {
        let mut ok = false;
        assert_eq!(ic_run_fixture(c("maximal-ideal-powers-j2").as_ptr(), &mut ok), IcStatus::Ok);
        assert!(ok);
    }
}

#[test]
fn header_lists_exports() {
    let header = include_str!("../include/idealcore.h");
    for name in ["ic_ring_new", "ic_ideal_parse", "ic_core_formula", "ic_last_error", "IC_STATUS_PANIC", "typedef struct IcIdeal IcIdeal"] {
        assert!(header.contains(name), "{name} missing from header");
    }
}
