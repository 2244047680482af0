//! C interface to `idealcore`.
//!
//! Rings and ideals are opaque heap handles released with `ic_ring_free` / `ic_ideal_free`.
//! Every fallible function returns an [`IcStatus`] and writes its result through an out
//! pointer; on failure `ic_last_error` describes the error on the calling thread.
//! Strings returned by the library are released with `ic_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;

use idealcore::cores::{core_formula, core_montecarlo, MonteCarloOptions};
use idealcore::corpus::run_fixture;
use idealcore::reductions::{analytic_spread, reduction_number, SamplerConfig};
use idealcore::{parse_poly, Error, FieldSpec, Ideal, PolyRing, TermOrder};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    RingMismatch = 5,
    NotAReduction = 6,
    UnknownFixture = 7,
    Computation = 8,
    Panic = 9,
}

/// A polynomial ring.
pub struct IcRing(Arc<PolyRing>);

/// An ideal of an `IcRing`.
pub struct IcIdeal(Ideal);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> IcStatus {
    match e {
        Error::Parse { .. } | Error::UnknownVariable(_) | Error::NotRepresentable { .. } => {
            IcStatus::Parse
        }
        Error::InvalidField(_) | Error::InvalidRing(_) | Error::OutOfRange(_) | Error::Usage(_) => {
            IcStatus::InvalidArgument
        }
        Error::RingMismatch => IcStatus::RingMismatch,
        Error::NotAReduction(_) | Error::NotContained => IcStatus::NotAReduction,
        Error::UnknownFixture(_) => IcStatus::UnknownFixture,
        _ => IcStatus::Computation,
    }
}

struct Fail(IcStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> IcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => IcStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            IcStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(IcStatus::NullPointer, "null string".into()));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(IcStatus::InvalidUtf8, "string is not UTF-8".into()))
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref()
        .ok_or_else(|| Fail(IcStatus::NullPointer, "null handle".into()))
}

unsafe fn write<T>(out: *mut T, v: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(IcStatus::NullPointer, "null out pointer".into()));
    }
    out.write(v);
    Ok(())
}

unsafe fn write_ideal(out: *mut *mut IcIdeal, i: Ideal) -> Result<(), Fail> {
    write(out, Box::into_raw(Box::new(IcIdeal(i))))
}

/// Message for the last failed call on this thread; valid until the next failing call.
#[no_mangle]
pub extern "C" fn ic_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Create a ring from comma separated variables and a field (`"QQ"` or `"GF:p"`).
///
/// # Safety
/// `vars` and `field` must be nul-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ic_ring_new(
    vars: *const c_char,
    field: *const c_char,
    out: *mut *mut IcRing,
) -> IcStatus {
    guard(|| {
        let vars: Vec<String> = text(vars)?.split(',').map(|v| v.trim().to_string()).collect();
        let field: FieldSpec = text(field)?.parse()?;
        let ring = PolyRing::new(vars, field, TermOrder::GrevLex)?;
        write(out, Box::into_raw(Box::new(IcRing(ring))))
    })
}

/// # Safety
/// `ring` must come from `ic_ring_new` and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn ic_ring_free(ring: *mut IcRing) {
    if !ring.is_null() {
        drop(Box::from_raw(ring));
    }
}

/// Parse an ideal from comma separated generators or an expression like `(x, y)^2`.
///
/// # Safety
/// `ring` must be a live handle, `gens` a nul-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ic_ideal_parse(
    ring: *const IcRing,
    gens: *const c_char,
    out: *mut *mut IcIdeal,
) -> IcStatus {
    guard(|| {
        let ring = deref(ring)?;
        let i = idealcore::corpus::parse_ideal_expr(text(gens)?, &ring.0)?;
        write_ideal(out, i)
    })
}

/// # Safety
/// `ideal` must come from this library and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn ic_ideal_free(ideal: *mut IcIdeal) {
    if !ideal.is_null() {
        drop(Box::from_raw(ideal));
    }
}

/// Reduced Gröbner basis generators as `"(g1, g2, ...)"`; free with `ic_string_free`.
///
/// # Safety
/// `ideal` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ic_ideal_to_string(
    ideal: *const IcIdeal,
    out: *mut *mut c_char,
) -> IcStatus {
    guard(|| {
        let i = &deref(ideal)?.0;
        let canonical = Ideal::new(i.ring(), i.canonical_generators())?;
        let s = CString::new(canonical.to_string()).expect("no interior nul");
        write(out, s.into_raw())
    })
}

/// # Safety
/// `s` must come from this library and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn ic_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// Handles must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ic_ideal_equal(
    a: *const IcIdeal,
    b: *const IcIdeal,
    out: *mut bool,
) -> IcStatus {
    guard(|| {
        let v = deref(a)?.0.equals(&deref(b)?.0)?;
        write(out, v)
    })
}

/// Whether the polynomial `poly` lies in the ideal.
///
/// # Safety
/// `ideal` must be live, `poly` a nul-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ic_ideal_member(
    ideal: *const IcIdeal,
    poly: *const c_char,
    out: *mut bool,
) -> IcStatus {
    guard(|| {
        let i = &deref(ideal)?.0;
        let f = parse_poly(text(poly)?, i.ring())?;
        write(out, i.contains(&f)?)
    })
}

#[derive(Clone, Copy)]
enum Binary {
    Sum,
    Product,
    Intersect,
    Colon,
}

unsafe fn binary(
    a: *const IcIdeal,
    b: *const IcIdeal,
    out: *mut *mut IcIdeal,
    op: Binary,
) -> IcStatus {
    guard(|| {
        let (a, b) = (&deref(a)?.0, &deref(b)?.0);
        let r = match op {
            Binary::Sum => a.sum(b)?,
            Binary::Product => a.product(b)?,
            Binary::Intersect => a.intersect(b)?,
            Binary::Colon => a.colon(b)?,
        };
        write_ideal(out, r)
    })
}

/// `a + b`.
///
/// # Safety
/// Handles must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ic_ideal_sum(
    a: *const IcIdeal,
    b: *const IcIdeal,
    out: *mut *mut IcIdeal,
) -> IcStatus {
    binary(a, b, out, Binary::Sum)
}

/// `a b`.
///
/// # Safety
/// Handles must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ic_ideal_product(
    a: *const IcIdeal,
    b: *const IcIdeal,
    out: *mut *mut IcIdeal,
) -> IcStatus {
    binary(a, b, out, Binary::Product)
}

/// `a ∩ b`.
///
/// # Safety
/// Handles must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ic_ideal_intersect(
    a: *const IcIdeal,
    b: *const IcIdeal,
    out: *mut *mut IcIdeal,
) -> IcStatus {
    binary(a, b, out, Binary::Intersect)
}

/// `a : b`.
///
/// # Safety
/// Handles must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ic_ideal_colon(
    a: *const IcIdeal,
    b: *const IcIdeal,
    out: *mut *mut IcIdeal,
) -> IcStatus {
    binary(a, b, out, Binary::Colon)
}

/// `a^k`.
///
/// # Safety
/// `a` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ic_ideal_power(
    a: *const IcIdeal,
    k: u32,
    out: *mut *mut IcIdeal,
) -> IcStatus {
    guard(|| write_ideal(out, deref(a)?.0.power(k)))
}

/// Reduction number of `j` as a reduction of `i`; `IC_STATUS_NOT_A_REDUCTION` past `r_max`.
///
/// # Safety
/// Handles must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ic_reduction_number(
    j: *const IcIdeal,
    i: *const IcIdeal,
    r_max: u32,
    out: *mut u32,
) -> IcStatus {
    guard(|| {
        let r = reduction_number(&deref(j)?.0, &deref(i)?.0, r_max)?;
        write(out, r)
    })
}

/// # Safety
/// `i` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ic_analytic_spread(i: *const IcIdeal, out: *mut u32) -> IcStatus {
    guard(|| {
        let l = analytic_spread(&deref(i)?.0)?;
        write(out, l as u32)
    })
}

/// `core(I) = (J:I) I`; fails with `IC_STATUS_COMPUTATION` if `(J:I)I != (J:I)J`.
///
/// # Safety
/// Handles must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ic_core_formula(
    i: *const IcIdeal,
    j: *const IcIdeal,
    r_max: u32,
    out: *mut *mut IcIdeal,
) -> IcStatus {
    guard(|| {
        let res = core_formula(&deref(i)?.0, &deref(j)?.0, r_max)?;
        if !res.all_agree() {
            return Err(Fail(
                IcStatus::Computation,
                "(J:I)I and (J:I)J differ; the formula does not apply".into(),
            ));
        }
        write_ideal(out, res.core)
    })
}

/// Intersection of sampled minimal reductions, stopped after `stabilization` samples
/// without change.
///
/// # Safety
/// `i` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ic_core_montecarlo(
    i: *const IcIdeal,
    seed: u64,
    stabilization: usize,
    out: *mut *mut IcIdeal,
) -> IcStatus {
    guard(|| {
        let opts = MonteCarloOptions {
            stabilization,
            ..MonteCarloOptions::default()
        };
        let res = core_montecarlo(&deref(i)?.0, &SamplerConfig::with_seed(seed), &opts)?;
        write_ideal(out, res.core)
    })
}

/// Run a built-in fixture; `out` receives whether every check passed.
///
/// # Safety
/// `name` must be a nul-terminated string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ic_run_fixture(name: *const c_char, out: *mut bool) -> IcStatus {
    guard(|| {
        let rep = run_fixture(text(name)?)?;
        write(out, rep.passed())
    })
}
