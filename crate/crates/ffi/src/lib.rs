//! C ABI for `chebknot`.
//!
//! Every entry point returns a [`ChkStatus`] and writes results through out
//! pointers. Knots and parametrizations are opaque heap handles released
//! with their `_free` function. After a failure, [`chk_last_error_message`]
//! describes it for the calling thread. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use chebknot::bridge::{canonicalize, TwoBridgeKnot};
use chebknot::contfrac::{signed_regular_expansion, Fraction};
use chebknot::harmonic::{classify, HarmonicSpec};
use chebknot::heights::{parametrization, Parametrization};
use chebknot::oracle::verify_parametrization;
use num_traits::ToPrimitive;

/// Result code of every call.
#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ChkStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// The arguments do not describe a valid input (zero denominator,
    /// non-coprime pair, non-finite floor).
    InvalidArgument = 2,
    /// The input is valid but the operation is undefined for it (a link
    /// where a knot is needed, a trivial harmonic knot, an ambiguous crossing).
    Domain = 3,
    /// A result does not fit the C type of its out parameter.
    Overflow = 4,
    /// The caller's buffer is too short; the required length was written.
    BufferTooSmall = 5,
    /// Internal failure; the library state is unaffected.
    Panic = 6,
}

/// Opaque canonical two-bridge knot.
pub struct ChkKnot(TwoBridgeKnot);

/// Opaque polynomial parametrization `(T_3(t), T_b(t), z(t))`.
pub struct ChkParametrization(Parametrization);

/// Result of classifying `H(3, b, c)`.
#[repr(C)]
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct ChkHarmonic {
    pub b_canon: i64,
    pub c_canon: i64,
    pub lambda: i64,
    /// The input is the mirror image of `H(3, b_canon, c_canon)`.
    pub mirror: bool,
    /// Schubert fraction of `H(3, b_canon, c_canon)`.
    pub alpha: i64,
    pub beta: i64,
    pub crossing_number: i64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(ChkStatus, String);

impl From<chebknot::Error> for Failure {
    fn from(e: chebknot::Error) -> Self {
        use chebknot::Error as E;
        let status = match &e {
            E::ContFrac(_) | E::Bridge(chebknot::bridge::BridgeError::NotCoprime { .. }) => {
                ChkStatus::InvalidArgument
            }
            E::Harmonic(
                chebknot::harmonic::HarmonicError::NotPairwiseCoprime(..)
                | chebknot::harmonic::HarmonicError::ADifferentFrom3(_),
            ) => ChkStatus::InvalidArgument,
            _ => ChkStatus::Domain,
        };
        Failure(status, e.to_string())
    }
}

fn lib_err(e: impl Into<chebknot::Error>) -> Failure {
    Failure::from(e.into())
}

fn fail<T>(status: ChkStatus, msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure(status, msg.into()))
}

fn set_last_error(msg: Option<String>) {
    let c = msg.map(|m| CString::new(m.replace('\0', " ")).expect("nul bytes removed"));
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> ChkStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error(None);
            ChkStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(Some(msg));
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(Some(format!("internal error: {msg}")));
            ChkStatus::Panic
        }
    }
}

fn out<'a, T>(p: *mut T, name: &str) -> Result<&'a mut T, Failure> {
    // SAFETY: the caller passes either null or a valid, aligned pointer
    unsafe { p.as_mut() }.map_or_else(|| fail(ChkStatus::NullPointer, format!("{name} is null")), Ok)
}

fn handle<'a, T>(p: *const T, name: &str) -> Result<&'a T, Failure> {
    // SAFETY: non-null handles come from the matching `_new` function
    unsafe { p.as_ref() }.map_or_else(|| fail(ChkStatus::NullPointer, format!("{name} is null")), Ok)
}

fn to_i64<T: ToPrimitive + std::fmt::Display>(x: &T, what: &str) -> Result<i64, Failure> {
    x.to_i64()
        .map_or_else(|| fail(ChkStatus::Overflow, format!("{what} = {x} does not fit in int64_t")), Ok)
}

fn fraction(alpha: i64, beta: i64) -> Result<Fraction, Failure> {
    Fraction::new(alpha, beta).map_err(lib_err)
}

/// `α/β'` with `0 < β' < α` naming the same knot as `alpha/beta`.
fn knot_fraction(alpha: i64, beta: i64) -> Result<Fraction, Failure> {
    let r = fraction(alpha, beta)?;
    r.schubert_representative()
        .map_or_else(|| fail(ChkStatus::Domain, format!("S({r}) is the unknot")), Ok)
}

fn json_out(value: &impl serde::Serialize, dst: *mut *mut c_char) -> Result<(), Failure> {
    let dst = out(dst, "out")?;
    let s = serde_json::to_string(value).map_err(|e| Failure(ChkStatus::Panic, e.to_string()))?;
    *dst = CString::new(s).expect("JSON has no nul bytes").into_raw();
    Ok(())
}

/// Message of the last failed call on this thread, or null after a
/// successful one. Owned by the library; valid until the next call.
#[no_mangle]
pub extern "C" fn chk_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn chk_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by a `_json` function. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn chk_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: produced by CString::into_raw
        drop(unsafe { CString::from_raw(s) });
    }
}

/// 1-regular continued fraction of `alpha/beta`.
///
/// Writes the number of terms to `len`. If `cap` is smaller, nothing is
/// written to `buf` and `BUFFER_TOO_SMALL` is returned, so a first call with
/// `cap = 0` sizes the buffer. A negative value is expanded as `−(|r|)`.
///
/// # Safety
/// `buf` must point to `cap` writable bytes (it may be null when `cap = 0`);
/// `len` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn chk_regular_expansion(
    alpha: i64,
    beta: i64,
    buf: *mut i8,
    cap: usize,
    len: *mut usize,
) -> ChkStatus {
    guard(|| {
        let len = out(len, "len")?;
        let (cf, _) = signed_regular_expansion(&fraction(alpha, beta)?)
            .map_err(lib_err)?;
        *len = cf.len();
        if cap < cf.len() {
            return fail(
                ChkStatus::BufferTooSmall,
                format!("expansion has {} terms, buffer holds {cap}", cf.len()),
            );
        }
        if buf.is_null() {
            return fail(ChkStatus::NullPointer, "buf is null");
        }
        // SAFETY: buf holds cap ≥ cf.len() bytes
        unsafe { ptr::copy_nonoverlapping(cf.terms().as_ptr(), buf, cf.len()) };
        Ok(())
    })
}

/// Canonical form of `S(alpha/beta)`. `alpha` must be positive and coprime
/// to `beta`; `alpha = 1` is the unknot.
///
/// # Safety
/// `out_knot` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn chk_knot_new(alpha: i64, beta: i64, out_knot: *mut *mut ChkKnot) -> ChkStatus {
    guard(|| {
        let dst = out(out_knot, "out_knot")?;
        let k = canonicalize(alpha, beta).map_err(lib_err)?;
        *dst = Box::into_raw(Box::new(ChkKnot(k)));
        Ok(())
    })
}

/// Releases a knot. Null is ignored.
///
/// # Safety
/// `knot` must be null or a handle from [`chk_knot_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn chk_knot_free(knot: *mut ChkKnot) {
    if !knot.is_null() {
        // SAFETY: produced by Box::into_raw
        drop(unsafe { Box::from_raw(knot) });
    }
}

/// `α` and `β` of the canonical representative, `0 ≤ β < α`, and whether
/// the knot is the mirror image of `S(α/β)`.
///
/// # Safety
/// `knot` must be a live handle; the out pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn chk_knot_fraction(
    knot: *const ChkKnot,
    alpha: *mut i64,
    beta: *mut i64,
    mirror: *mut bool,
) -> ChkStatus {
    guard(|| {
        let k = &handle(knot, "knot")?.0;
        let (a, b) = (to_i64(k.alpha(), "alpha")?, to_i64(k.beta(), "beta")?);
        *out(alpha, "alpha")? = a;
        *out(beta, "beta")? = b;
        *out(mirror, "mirror")? = k.mirror();
        Ok(())
    })
}

/// Crossing number of the knot.
///
/// # Safety
/// `knot` must be a live handle; `n` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn chk_knot_crossing_number(knot: *const ChkKnot, n: *mut i64) -> ChkStatus {
    guard(|| {
        let k = &handle(knot, "knot")?.0;
        *out(n, "n")? = to_i64(&k.crossing_number(), "crossing number")?;
        Ok(())
    })
}

/// Whether the knot is isotopic to its mirror image.
///
/// # Safety
/// `knot` must be a live handle; `result` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn chk_knot_is_amphicheiral(knot: *const ChkKnot, result: *mut bool) -> ChkStatus {
    guard(|| {
        let k = &handle(knot, "knot")?.0;
        *out(result, "result")? = k.is_amphicheiral();
        Ok(())
    })
}

/// JSON record of the knot. Free the string with [`chk_string_free`].
///
/// # Safety
/// `knot` must be a live handle; `json` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn chk_knot_json(knot: *const ChkKnot, json: *mut *mut c_char) -> ChkStatus {
    guard(|| json_out(&handle(knot, "knot")?.0.record(), json))
}

/// Polynomial parametrization of the knot `S(alpha/beta)` on a minimal
/// Chebyshev diagram. Even `alpha` (a link) is a domain error.
///
/// # Safety
/// `out_param` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn chk_parametrization_new(
    alpha: i64,
    beta: i64,
    out_param: *mut *mut ChkParametrization,
) -> ChkStatus {
    guard(|| {
        let dst = out(out_param, "out_param")?;
        let p = parametrization(&knot_fraction(alpha, beta)?)
            .map_err(lib_err)?;
        *dst = Box::into_raw(Box::new(ChkParametrization(p)));
        Ok(())
    })
}

/// Releases a parametrization. Null is ignored.
///
/// # Safety
/// `param` must be null or a handle from [`chk_parametrization_new`] not
/// yet freed.
#[no_mangle]
pub unsafe extern "C" fn chk_parametrization_free(param: *mut ChkParametrization) {
    if !param.is_null() {
        // SAFETY: produced by Box::into_raw
        drop(unsafe { Box::from_raw(param) });
    }
}

/// Degree `b` of `y = T_b(t)` and the crossing number.
///
/// # Safety
/// `param` must be a live handle; the out pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn chk_parametrization_degrees(
    param: *const ChkParametrization,
    b: *mut i64,
    crossing_number: *mut i64,
) -> ChkStatus {
    guard(|| {
        let p = &handle(param, "param")?.0;
        *out(b, "b")? = p.b;
        *out(crossing_number, "crossing_number")? = to_i64(&p.crossing_number, "crossing number")?;
        Ok(())
    })
}

/// Roots of the height polynomial, increasing, and its leading sign.
/// Sizing follows [`chk_regular_expansion`].
///
/// # Safety
/// `roots` must point to `cap` writable doubles (or be null with `cap = 0`);
/// `len` and `leading_sign` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn chk_parametrization_height_roots(
    param: *const ChkParametrization,
    roots: *mut f64,
    cap: usize,
    len: *mut usize,
    leading_sign: *mut i8,
) -> ChkStatus {
    guard(|| {
        let z = &handle(param, "param")?.0.z;
        *out(len, "len")? = z.roots.len();
        *out(leading_sign, "leading_sign")? = z.leading_sign;
        if cap < z.roots.len() {
            return fail(
                ChkStatus::BufferTooSmall,
                format!("{} roots, buffer holds {cap}", z.roots.len()),
            );
        }
        if roots.is_null() && !z.roots.is_empty() {
            return fail(ChkStatus::NullPointer, "roots is null");
        }
        // SAFETY: roots holds cap ≥ len doubles
        unsafe { ptr::copy_nonoverlapping(z.roots.as_ptr(), roots, z.roots.len()) };
        Ok(())
    })
}

/// The curve point `(x, y, z)` at parameter `t`.
///
/// # Safety
/// `param` must be a live handle; `xyz` must point to 3 writable doubles.
#[no_mangle]
pub unsafe extern "C" fn chk_parametrization_eval(
    param: *const ChkParametrization,
    t: f64,
    xyz: *mut f64,
) -> ChkStatus {
    guard(|| {
        let p = &handle(param, "param")?.0;
        if xyz.is_null() {
            return fail(ChkStatus::NullPointer, "xyz is null");
        }
        let tau = t.clamp(-1.0, 1.0).acos();
        let v = [(3.0 * tau).cos(), (p.b as f64 * tau).cos(), p.z.eval(t)];
        // SAFETY: xyz holds 3 doubles
        unsafe { ptr::copy_nonoverlapping(v.as_ptr(), xyz, 3) };
        Ok(())
    })
}

/// JSON record of the parametrization. Free with [`chk_string_free`].
///
/// # Safety
/// `param` must be a live handle; `json` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn chk_parametrization_json(
    param: *const ChkParametrization,
    json: *mut *mut c_char,
) -> ChkStatus {
    guard(|| json_out(&handle(param, "param")?.0.record(), json))
}

/// Builds the parametrization of `S(alpha/beta)`, measures every crossing
/// and sets `verdict` to whether the measured knot is `S(alpha/beta)`,
/// chirality included. `floor` is the smallest accepted height gap at a
/// crossing; a smaller gap is a domain error.
///
/// # Safety
/// `verdict` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn chk_verify(alpha: i64, beta: i64, floor: f64, verdict: *mut bool) -> ChkStatus {
    guard(|| {
        let verdict = out(verdict, "verdict")?;
        if !(floor.is_finite() && floor >= 0.0) {
            return fail(ChkStatus::InvalidArgument, format!("floor {floor} is not a nonnegative number"));
        }
        let r = knot_fraction(alpha, beta)?;
        let p = parametrization(&r).map_err(lib_err)?;
        let rep = verify_parametrization(&r, &p.record(), floor)
            .map_err(lib_err)?;
        *verdict = rep.verdict;
        Ok(())
    })
}

/// Reduces `H(a, b, c)` to its canonical pair. Only `a = 3` is supported.
///
/// # Safety
/// `result` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn chk_harmonic_classify(a: i64, b: i64, c: i64, result: *mut ChkHarmonic) -> ChkStatus {
    guard(|| {
        let dst = out(result, "result")?;
        let spec = HarmonicSpec::new(a, b, c).map_err(lib_err)?;
        let h = classify(spec).map_err(lib_err)?;
        *dst = ChkHarmonic {
            b_canon: h.b_prime,
            c_canon: h.c_prime,
            lambda: h.lambda,
            mirror: h.mirror,
            alpha: to_i64(h.fraction.numer(), "alpha")?,
            beta: to_i64(h.fraction.denom(), "beta")?,
            crossing_number: h.crossing_number,
        };
        Ok(())
    })
}

/// Reads a NUL-terminated fraction such as `"9/7"` into `alpha`, `beta`.
///
/// # Safety
/// `text` must be a valid C string; the out pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn chk_parse_fraction(text: *const c_char, alpha: *mut i64, beta: *mut i64) -> ChkStatus {
    guard(|| {
        if text.is_null() {
            return fail(ChkStatus::NullPointer, "text is null");
        }
        // SAFETY: caller guarantees a C string
        let s = unsafe { CStr::from_ptr(text) }
            .to_str()
            .map_or_else(|_| fail(ChkStatus::InvalidArgument, "text is not UTF-8"), Ok)?;
        let r: Fraction = s.parse().map_err(lib_err)?;
        let (a, b) = (to_i64(r.numer(), "alpha")?, to_i64(r.denom(), "beta")?);
        *out(alpha, "alpha")? = a;
        *out(beta, "beta")? = b;
        Ok(())
    })
}
