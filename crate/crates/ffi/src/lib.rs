//! C ABI over `zeta-recur`.
//!
//! Every fallible function returns a [`ZrStatus`]; results come back through
//! out-pointers. On failure a description is kept per thread and can be read
//! with [`zr_last_error_message`]. Rationals cross the boundary as opaque
//! [`ZrRational`] handles, strings as NUL-terminated buffers owned by the
//! library. Release them with [`zr_rational_free`] and [`zr_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use zeta_recur::cli::{verify_report, IdentityArg};
use zeta_recur::identities::{contour_closure, odd_zeta_from_contour, zeta_series};
use zeta_recur::{
    bernoulli, pi_digits, render_decimal, zeta_even_euler, zeta_even_recursive, IdentityReport, Rational, ZetaError,
};

/// Result codes. `ZR_STATUS_OK` is zero; everything else is a failure.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZrStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    DomainError = 3,
    NoConvergence = 4,
    Panic = 5,
}

/// Identity selector for [`zr_verify`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZrIdentity {
    /// `∫ x^{s-1}/(e^x - 1) = Γ(s) ζ(s)`
    Eq2 = 0,
    /// `2/(e^{2τ} - 1) = 1/(e^τ - 1) - 1/(e^τ + 1)` at sample points
    Eq5 = 1,
    /// `∫ x^{s-1}/(e^x + 1) = (1 - 2^{1-s}) Γ(s) ζ(s)`
    Eq7 = 2,
    /// contour closure around the rectangle of height π
    Closure = 3,
    /// `A - B = C` after the radius goes to infinity
    Eq9 = 4,
    /// `ζ(2)` extracted from the `s = 2` contour identity
    S2 = 5,
    /// `π ln 2` from the imaginary part at `s = 2`
    Log2 = 6,
    /// even-`s` expansion with exact `ζ(2m)` substituted (`s = 2n`)
    Eq10 = 7,
    /// odd `ζ(s)` extracted from the contour identity
    Odd = 8,
}

impl From<ZrIdentity> for IdentityArg {
    fn from(id: ZrIdentity) -> Self {
        match id {
            ZrIdentity::Eq2 => IdentityArg::Eq2,
            ZrIdentity::Eq5 => IdentityArg::Eq5,
            ZrIdentity::Eq7 => IdentityArg::Eq7,
            ZrIdentity::Closure => IdentityArg::Closure,
            ZrIdentity::Eq9 => IdentityArg::Eq9,
            ZrIdentity::S2 => IdentityArg::S2,
            ZrIdentity::Log2 => IdentityArg::Log2,
            ZrIdentity::Eq10 => IdentityArg::Eq10,
            ZrIdentity::Odd => IdentityArg::Odd,
        }
    }
}

/// Flattened identity report. Real-valued sides have zero imaginary parts.
/// When `passed` is false because a quadrature did not converge, the reason
/// is available from [`zr_last_error_message`].
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct ZrIdentityReport {
    pub s: u32,
    pub lhs_re: f64,
    pub lhs_im: f64,
    pub rhs_re: f64,
    pub rhs_im: f64,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

/// Side integrals around the rectangle, in the order bottom, right, top, left.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct ZrContourReport {
    pub s: u32,
    pub radius: f64,
    pub side_re: [f64; 4],
    pub side_im: [f64; 4],
    pub closure_re: f64,
    pub closure_im: f64,
    pub right_side_magnitude: f64,
    pub error_estimate: f64,
    pub evaluations: u64,
    pub converged: bool,
}

/// Opaque exact rational.
pub struct ZrRational {
    value: Rational,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn clear_last_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(err: &ZetaError) -> ZrStatus {
    match err {
        ZetaError::NoConvergence { .. } => ZrStatus::NoConvergence,
        ZetaError::ParseRational(_) | ZetaError::DigitsOutOfRange(_) | ZetaError::ZeroIndex => {
            ZrStatus::InvalidArgument
        }
        _ => ZrStatus::DomainError,
    }
}

/// Runs `f`, recording its error and turning panics into `ZrStatus::Panic`.
fn guard(f: impl FnOnce() -> Result<(), (ZrStatus, String)>) -> ZrStatus {
    clear_last_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ZrStatus::Ok,
        Ok(Err((status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            ZrStatus::Panic
        }
    }
}

fn zeta_err(e: ZetaError) -> (ZrStatus, String) {
    (status_of(&e), e.to_string())
}

fn null_check<T>(p: *const T, name: &str) -> Result<(), (ZrStatus, String)> {
    if p.is_null() {
        Err((ZrStatus::NullPointer, format!("{name} is null")))
    } else {
        Ok(())
    }
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("library strings contain no NUL").into_raw()
}

/// Writes a new handle to `*out`.
///
/// # Safety
/// `out` must be valid for writes.
unsafe fn emit_rational(out: *mut *mut ZrRational, value: Rational) {
    *out = Box::into_raw(Box::new(ZrRational { value }));
}

/// Message for the last failed call on this thread, or NULL. The pointer
/// stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn zr_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn zr_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses `"p/q"` or `"p"` into a new handle.
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zr_rational_parse(text: *const c_char, out: *mut *mut ZrRational) -> ZrStatus {
    guard(|| {
        null_check(text, "text")?;
        null_check(out, "out")?;
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| (ZrStatus::InvalidArgument, "text is not UTF-8".to_string()))?;
        let value = s.parse::<Rational>().map_err(zeta_err)?;
        emit_rational(out, value);
        Ok(())
    })
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `r` must be NULL or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn zr_rational_free(r: *mut ZrRational) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Canonical `"p/q"` text (integers as `"p"`); free with [`zr_string_free`].
///
/// # Safety
/// `r` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zr_rational_to_string(r: *const ZrRational, out: *mut *mut c_char) -> ZrStatus {
    guard(|| {
        null_check(r, "r")?;
        null_check(out, "out")?;
        *out = into_c_string((*r).value.to_string());
        Ok(())
    })
}

/// Nearest double (may be 0 or infinite outside the double range).
///
/// # Safety
/// `r` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zr_rational_to_f64(r: *const ZrRational, out: *mut f64) -> ZrStatus {
    guard(|| {
        null_check(r, "r")?;
        null_check(out, "out")?;
        *out = (*r).value.to_f64();
        Ok(())
    })
}

/// Exact equality.
///
/// # Safety
/// `a`, `b` must be live handles; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zr_rational_equal(a: *const ZrRational, b: *const ZrRational, out: *mut bool) -> ZrStatus {
    guard(|| {
        null_check(a, "a")?;
        null_check(b, "b")?;
        null_check(out, "out")?;
        *out = (*a).value == (*b).value;
        Ok(())
    })
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a string from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn zr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// `q_n` with `ζ(2n) = q_n π^{2n}`, from the contour recursion.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zr_zeta_even_recursive(n: u64, out: *mut *mut ZrRational) -> ZrStatus {
    guard(|| {
        null_check(out, "out")?;
        emit_rational(out, zeta_even_recursive(n).map_err(zeta_err)?.coeff);
        Ok(())
    })
}

/// `q_n` from the Bernoulli closed form.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zr_zeta_even_euler(n: u64, out: *mut *mut ZrRational) -> ZrStatus {
    guard(|| {
        null_check(out, "out")?;
        emit_rational(out, zeta_even_euler(n).map_err(zeta_err)?.coeff);
        Ok(())
    })
}

/// `B_m` with `B_1 = -1/2`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zr_bernoulli(m: u64, out: *mut *mut ZrRational) -> ZrStatus {
    guard(|| {
        null_check(out, "out")?;
        emit_rational(out, bernoulli(m));
        Ok(())
    })
}

/// π truncated to `digits` decimals; free with [`zr_string_free`].
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zr_pi_digits(digits: u64, out: *mut *mut c_char) -> ZrStatus {
    guard(|| {
        null_check(out, "out")?;
        *out = into_c_string(pi_digits(digits).map_err(zeta_err)?);
        Ok(())
    })
}

/// `ζ(2n)` truncated to `digits` decimals; free with [`zr_string_free`].
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zr_render_zeta_even(n: u64, digits: u64, out: *mut *mut c_char) -> ZrStatus {
    guard(|| {
        null_check(out, "out")?;
        let v = zeta_even_recursive(n).map_err(zeta_err)?;
        *out = into_c_string(render_decimal(&v, digits).map_err(zeta_err)?);
        Ok(())
    })
}

/// `ζ(s)` by direct summation with an Euler–Maclaurin tail, to `tol`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zr_zeta_series(s: u32, tol: f64, out: *mut f64) -> ZrStatus {
    guard(|| {
        null_check(out, "out")?;
        *out = zeta_series(s, tol).map_err(zeta_err)?;
        Ok(())
    })
}

/// Odd `ζ(s)`, `s >= 3`, extracted from the contour identity.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zr_odd_zeta_from_contour(s: u32, tol: f64, out: *mut f64) -> ZrStatus {
    guard(|| {
        null_check(out, "out")?;
        *out = odd_zeta_from_contour(s, tol).map_err(zeta_err)?;
        Ok(())
    })
}

fn flatten(r: &IdentityReport) -> ZrIdentityReport {
    let (lhs, rhs) = (r.lhs.to_complex(), r.rhs.to_complex());
    ZrIdentityReport {
        s: r.s,
        lhs_re: lhs.re,
        lhs_im: lhs.im,
        rhs_re: rhs.re,
        rhs_im: rhs.im,
        residual: r.residual,
        tolerance: r.tolerance,
        passed: r.passed,
    }
}

/// Runs one identity check. `s` is ignored where the identity fixes it
/// (`Eq5`, `S2`, `Log2`); `radius` is used by `Closure` only. A failed check
/// still returns `ZR_STATUS_OK` with `passed == false`; other statuses mean the
/// check could not be run.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zr_verify(
    identity: ZrIdentity,
    s: u32,
    tol: f64,
    radius: f64,
    out: *mut ZrIdentityReport,
) -> ZrStatus {
    guard(|| {
        null_check(out, "out")?;
        let s = match identity {
            ZrIdentity::Eq5 | ZrIdentity::S2 | ZrIdentity::Log2 => None,
            _ => Some(s),
        };
        let report = verify_report(identity.into(), s, tol, radius).map_err(|u| (ZrStatus::InvalidArgument, u.0))?;
        *out = flatten(&report);
        if let Some(d) = report.diagnostic {
            set_last_error(d);
        }
        Ok(())
    })
}

/// Integrates `z^{s-1}/(e^z - 1)` around the rectangle `0, R, R+iπ, iπ`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zr_contour_closure(s: u32, radius: f64, tol: f64, out: *mut ZrContourReport) -> ZrStatus {
    guard(|| {
        null_check(out, "out")?;
        let r = contour_closure(s, radius, tol).map_err(zeta_err)?;
        let mut flat = ZrContourReport {
            s: r.s,
            radius: r.radius,
            closure_re: r.closure.re,
            closure_im: r.closure.im,
            right_side_magnitude: r.right_side_magnitude,
            error_estimate: r.error_estimate,
            evaluations: r.evaluations as u64,
            converged: r.converged,
            ..Default::default()
        };
        for (i, v) in r.side_values.iter().enumerate() {
            flat.side_re[i] = v.re;
            flat.side_im[i] = v.im;
        }
        *out = flat;
        Ok(())
    })
}
