//! Numerical verification of the integral identities behind the recursion.
//!
//! With `f(z) = z^{s-1} / (e^z - 1)` and the rectangle with corners
//! `0, R, R + iπ, iπ`, Cauchy's theorem and `R -> ∞` give
//!
//! ```text
//! A - B = C
//! A = ∫_0^∞ x^{s-1} / (e^x - 1) dx                  = Γ(s) ζ(s)
//! B = ∫_0^∞ (x + iπ)^{s-1} / (e^{x+iπ} - 1) dx      = -Σ_j C(s-1, j) (iπ)^j F(j)
//! C = i ∫_0^π (iy)^{s-1} / (e^{iy} - 1) dy
//! F(j) = ∫_0^∞ x^{s-1-j} / (e^x + 1) dx             = (1 - 2^{j+1-s}) Γ(s-j) ζ(s-j),  F(s-1) = ln 2
//! ```
//!
//! Splitting `1 / (e^{iy} - 1) = -1/2 - (i/2) cot(y/2)` turns `C` into
//! `-i^s π^s / (2s) - (i^{s+1} / 2) K(s)` with `K(s) = ∫_0^π y^{s-1} cot(y/2) dy`.
//! Taking real parts:
//!
//! ```text
//! Γ(s) ζ(s) + Σ_{j even} C(s-1, j) (-1)^{j/2} π^j F(j)
//!     = Re(-i^s π^s / (2s)) + Re(-i^{s+1} / 2) K(s)
//! ```
//!
//! For `s = 2` this is `(3/2) ζ(2) = π² / 4`. For `s = 2n` the `K` term
//! drops out and the `j = 2k` terms are exactly `α(n, k) ζ(2n - 2k)`, which
//! is the even-zeta recursion. For odd `s` the polynomial term vanishes and
//! the identity can be solved for `ζ(s)`; at `s = 3` it reads
//! `ζ(3) = (2π² ln 2 - K(3)) / 7`.

use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::error::ZetaError;
use crate::exact::{alpha_coeff, binomial, gamma_int, zeta_even_recursive};
use crate::quadrature::{
    contour_integrand, fermi, bose, integrate_finite, integrate_semi_infinite, integrate_segment,
    QuadratureResult, Segment,
};

/// Default tolerance for identity checks.
pub const DEFAULT_TOL: f64 = 1e-9;
/// Default tolerance for odd-zeta extraction.
pub const DEFAULT_ODD_TOL: f64 = 1e-8;
/// Default rectangle width.
pub const DEFAULT_RADIUS: f64 = 30.0;
/// Below this, `zeta_series` does not tighten its truncation any further;
/// double precision cannot resolve it anyway.
const MIN_SERIES_TOL: f64 = 1e-17;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum IdentityId {
    Eq2,
    Eq5,
    Eq7,
    Eq8Closure,
    Eq9,
    S2Real,
    S2Imag,
    Eq10Numeric,
    OddZeta,
}

impl IdentityId {
    pub fn tag(&self) -> &'static str {
        match self {
            IdentityId::Eq2 => "EQ2",
            IdentityId::Eq5 => "EQ5",
            IdentityId::Eq7 => "EQ7",
            IdentityId::Eq8Closure => "EQ8_CLOSURE",
            IdentityId::Eq9 => "EQ9",
            IdentityId::S2Real => "S2_REAL",
            IdentityId::S2Imag => "S2_IMAG",
            IdentityId::Eq10Numeric => "EQ10_NUMERIC",
            IdentityId::OddZeta => "ODD_ZETA",
        }
    }
}

/// A real or complex side of an identity. Serialized as a bare number or
/// as `[re, im]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Real(f64),
    Complex(Complex64),
}

impl Value {
    pub fn to_complex(self) -> Complex64 {
        match self {
            Value::Real(x) => Complex64::new(x, 0.0),
            Value::Complex(z) => z,
        }
    }

    pub fn re(self) -> f64 {
        self.to_complex().re
    }
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Value::Real(x) => write!(f, "{x:.15e}"),
            Value::Complex(z) => write!(f, "{:.15e}{:+.15e}i", z.re, z.im),
        }
    }
}

/// Outcome of one identity check. `passed` is `residual <= tolerance`,
/// forced to `false` when a quadrature underneath did not converge (the
/// reason is in `diagnostic`).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity_id: IdentityId,
    pub s: u32,
    pub lhs: Value,
    pub rhs: Value,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<String>,
}

impl IdentityReport {
    pub fn new(identity_id: IdentityId, s: u32, lhs: Value, rhs: Value, tolerance: f64) -> Self {
        let residual = (lhs.to_complex() - rhs.to_complex()).norm();
        IdentityReport {
            identity_id,
            s,
            lhs,
            rhs,
            residual,
            tolerance,
            passed: residual <= tolerance,
            diagnostic: None,
        }
    }

    fn with_failures(mut self, failures: Vec<String>) -> Self {
        if !failures.is_empty() {
            self.passed = false;
            self.diagnostic = Some(failures.join("; "));
        }
        self
    }
}

/// Per-side integrals of `f` around the rectangle `0 -> R -> R+iπ -> iπ -> 0`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ContourReport {
    pub s: u32,
    pub radius: f64,
    /// bottom, right, top, left
    pub side_values: [Complex64; 4],
    pub closure: Complex64,
    pub right_side_magnitude: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
    pub converged: bool,
}

/// Collects non-converged quadratures by name.
#[derive(Default)]
struct Failures(Vec<String>);

impl Failures {
    fn check<T: Copy>(&mut self, what: &str, r: &QuadratureResult<T>) -> T {
        if !r.converged {
            self.0.push(format!(
                "{what}: quadrature did not converge (error estimate {:.3e} after {} evaluations)",
                r.error_estimate, r.evaluations
            ));
        }
        r.value
    }
}

fn check_tol(tol: f64) -> Result<(), ZetaError> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(ZetaError::Domain(format!("tolerance must be positive and finite, got {tol}")))
    }
}

fn check_s(s: u32) -> Result<(), ZetaError> {
    if s < 2 {
        Err(ZetaError::Domain(format!("s must be at least 2, got {s}")))
    } else {
        Ok(())
    }
}

fn gamma_f64(m: u32) -> f64 {
    gamma_int(m as i64).expect("m >= 1").to_f64().unwrap_or(f64::INFINITY)
}

fn binomial_f64(n: u32, k: u32) -> f64 {
    binomial(n as u64, k as u64).to_f64().unwrap_or(f64::INFINITY)
}

/// `ζ(s)` by direct summation plus an Euler–Maclaurin tail,
///
/// ```text
/// Σ_{k<N} k^{-s} + N^{1-s}/(s-1) + N^{-s}/2 + s N^{-s-1}/12,
/// ```
///
/// with `N` chosen so the first omitted correction,
/// `s(s+1)(s+2) N^{-s-3} / 720`, is at most `tol / 2`.
pub fn zeta_series(s: u32, tol: f64) -> Result<f64, ZetaError> {
    check_s(s)?;
    check_tol(tol)?;
    let sf = s as f64;
    let target = (0.5 * tol).max(MIN_SERIES_TOL);
    let c = sf * (sf + 1.0) * (sf + 2.0) / 720.0;
    let n = ((c / target).powf(1.0 / (sf + 3.0)).ceil() as u64).max(4);
    Ok(zeta_series_with_cutoff(s, n))
}

/// The same sum with an explicit cutoff `N` (exposed for the
/// self-consistency check).
pub fn zeta_series_with_cutoff(s: u32, n: u64) -> f64 {
    let sf = s as f64;
    let nf = n as f64;
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    let mut add = |x: f64| {
        let t = sum + x;
        if sum.abs() >= x.abs() {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    };
    add(nf.powf(1.0 - sf) / (sf - 1.0));
    add(0.5 * nf.powf(-sf));
    add(sf * nf.powf(-sf - 1.0) / 12.0);
    for k in (1..n).rev() {
        add((k as f64).powi(-(s as i32)));
    }
    sum + comp
}

/// `∫_0^∞ x^{s-1}/(e^x - 1) dx = Γ(s) ζ(s)`.
pub fn verify_bose_integral(s: u32, tol: f64) -> Result<IdentityReport, ZetaError> {
    check_s(s)?;
    check_tol(tol)?;
    let mut fails = Failures::default();
    let q = integrate_semi_infinite(|x| bose(x, s), s, 0.5 * tol);
    let lhs = fails.check("bose integral", &q);
    let g = gamma_f64(s);
    let rhs = g * zeta_series(s, 0.25 * tol / g)?;
    Ok(IdentityReport::new(IdentityId::Eq2, s, Value::Real(lhs), Value::Real(rhs), tol).with_failures(fails.0))
}

/// `∫_0^∞ x^{s-1}/(e^x + 1) dx = (1 - 2^{1-s}) Γ(s) ζ(s)`.
pub fn verify_fermi_integral(s: u32, tol: f64) -> Result<IdentityReport, ZetaError> {
    check_s(s)?;
    check_tol(tol)?;
    let mut fails = Failures::default();
    let q = integrate_semi_infinite(|x| fermi(x, s), s, 0.5 * tol);
    let lhs = fails.check("fermi integral", &q);
    let g = (1.0 - 2f64.powi(1 - s as i32)) * gamma_f64(s);
    let rhs = g * zeta_series(s, 0.25 * tol / g)?;
    Ok(IdentityReport::new(IdentityId::Eq7, s, Value::Real(lhs), Value::Real(rhs), tol).with_failures(fails.0))
}

/// `2/(e^{2τ} - 1) = 1/(e^τ - 1) - 1/(e^τ + 1)` at `points` pseudo-random
/// `τ ∈ (1e-6, 30)` drawn from a fixed seed. The residual is the largest
/// difference relative to `max(1, |lhs|)`; both sides blow up like `1/τ`
/// near zero, so an absolute bound would only measure their magnitude.
pub fn verify_partial_fractions(points: usize, seed: u64, tol: f64) -> Result<IdentityReport, ZetaError> {
    check_tol(tol)?;
    if points == 0 {
        return Err(ZetaError::Domain("need at least one sample point".into()));
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut worst = (0.0f64, 0.0f64, -1.0f64);
    for _ in 0..points {
        let t: f64 = rng.gen_range(1e-6..30.0);
        let lhs = 2.0 / (2.0 * t).exp_m1();
        let rhs = 1.0 / t.exp_m1() - 1.0 / (t.exp() + 1.0);
        let rel = (lhs - rhs).abs() / lhs.abs().max(1.0);
        if rel > worst.2 {
            worst = (lhs, rhs, rel);
        }
    }
    let (lhs, rhs, rel) = worst;
    let mut report = IdentityReport::new(IdentityId::Eq5, 0, Value::Real(lhs), Value::Real(rhs), tol);
    report.residual = rel;
    report.passed = rel <= tol;
    Ok(report)
}

/// The rectangle sides, counterclockwise.
pub fn rectangle_sides(radius: f64) -> Result<[Segment; 4], ZetaError> {
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(ZetaError::Domain(format!("radius must be positive and finite, got {radius}")));
    }
    let c = |re, im| Complex64::new(re, im);
    Ok([
        Segment::new(c(0.0, 0.0), c(radius, 0.0))?,
        Segment::new(c(radius, 0.0), c(radius, PI))?,
        Segment::new(c(radius, PI), c(0.0, PI))?,
        Segment::new(c(0.0, PI), c(0.0, 0.0))?,
    ])
}

/// `∮ f` around the rectangle, side by side. Each side gets `tol / 4`.
pub fn contour_closure(s: u32, radius: f64, tol: f64) -> Result<ContourReport, ZetaError> {
    check_s(s)?;
    check_tol(tol)?;
    let sides = rectangle_sides(radius)?;
    let mut side_values = [Complex64::new(0.0, 0.0); 4];
    let mut error_estimate = 0.0;
    let mut evaluations = 0;
    let mut converged = true;
    for (slot, seg) in side_values.iter_mut().zip(sides.iter()) {
        let r = integrate_segment(s, seg, 0.25 * tol)?;
        *slot = r.value;
        error_estimate += r.error_estimate;
        evaluations += r.evaluations;
        converged &= r.converged;
    }
    let closure = side_values.iter().sum();
    Ok(ContourReport {
        s,
        radius,
        side_values,
        closure,
        right_side_magnitude: side_values[1].norm(),
        error_estimate,
        evaluations,
        converged,
    })
}

/// Upper bound on the right side, `π · max_y |f(R + iy)|`, using
/// `|z|^{s-1} e^{-R} / (1 - e^{-R})` on that side.
pub fn right_side_bound(s: u32, radius: f64) -> f64 {
    let r = radius.hypot(PI);
    PI * r.powi(s as i32 - 1) * (-radius).exp() / (-(-radius).exp_m1())
}

/// Closure as an identity report: `lhs = ∮ f`, `rhs = 0`.
pub fn verify_closure(s: u32, radius: f64, tol: f64) -> Result<IdentityReport, ZetaError> {
    let report = contour_closure(s, radius, tol)?;
    let mut failures = Vec::new();
    if !report.converged {
        failures.push(format!(
            "side quadrature did not converge (error estimate {:.3e})",
            report.error_estimate
        ));
    }
    Ok(IdentityReport::new(
        IdentityId::Eq8Closure,
        s,
        Value::Complex(report.closure),
        Value::Complex(Complex64::new(0.0, 0.0)),
        tol,
    )
    .with_failures(failures))
}

/// `F(j) = ∫_0^∞ x^{s-1-j}/(e^x + 1) dx` by quadrature; `F(s-1) = ln 2`.
fn fermi_moment(s: u32, j: u32, tol: f64) -> QuadratureResult<f64> {
    let e = s - j;
    if e == 1 {
        return QuadratureResult {
            value: LN_2,
            error_estimate: 0.0,
            evaluations: 0,
            converged: true,
        };
    }
    integrate_semi_infinite(|x| fermi(x, e), e, tol)
}

/// `(iπ)^j`
fn i_pi_pow(j: u32) -> Complex64 {
    Complex64::new(0.0, PI).powu(j)
}

/// `i^m`
fn i_pow(m: u32) -> Complex64 {
    match m % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// The three limiting integrals `A`, `B`, `C` with `A - B = C`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Eq9Components {
    pub s: u32,
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    /// `|A - B - C|`
    pub residual: f64,
    pub converged: bool,
}

/// `A` by the bose quadrature, `B` by the binomial expansion over fermi
/// moments, `C` by direct quadrature on `[0, π]`.
pub fn eq9_components(s: u32, tol: f64) -> Result<Eq9Components, ZetaError> {
    check_s(s)?;
    check_tol(tol)?;
    let mut fails = Failures::default();
    let a = fails.check("A", &integrate_semi_infinite(|x| bose(x, s), s, 0.25 * tol));
    let b = b_by_expansion(s, 0.25 * tol, &mut fails);
    let c = fails.check("C", &c_by_quadrature(s, 0.25 * tol));
    let a = Complex64::new(a, 0.0);
    Ok(Eq9Components {
        s,
        a,
        b,
        c,
        residual: (a - b - c).norm(),
        converged: fails.0.is_empty(),
    })
}

fn b_by_expansion(s: u32, tol: f64, fails: &mut Failures) -> Complex64 {
    let mut b = Complex64::new(0.0, 0.0);
    for j in 0..s {
        let w = binomial_f64(s - 1, j) * PI.powi(j as i32);
        let f = fails.check("F(j)", &fermi_moment(s, j, tol / (s as f64 * w)));
        b -= i_pi_pow(j) * binomial_f64(s - 1, j) * f;
    }
    b
}

/// `B = ∫_0^cutoff (x + iπ)^{s-1} / (e^{x+iπ} - 1) dx` by direct complex
/// quadrature, independent of the expansion.
pub fn b_direct(s: u32, cutoff: f64, tol: f64) -> Result<QuadratureResult<Complex64>, ZetaError> {
    check_s(s)?;
    check_tol(tol)?;
    Ok(integrate_finite(
        |x: f64| contour_integrand(Complex64::new(x, PI), s),
        0.0,
        cutoff,
        tol,
    ))
}

/// `C = i ∫_0^π (iy)^{s-1} / (e^{iy} - 1) dy`.
fn c_by_quadrature(s: u32, tol: f64) -> QuadratureResult<Complex64> {
    let mut r = integrate_finite(|y: f64| contour_integrand(Complex64::new(0.0, y), s), 0.0, PI, tol);
    r.value *= Complex64::new(0.0, 1.0);
    r
}

/// `A - B = C` as an identity report.
pub fn verify_eq9(s: u32, tol: f64) -> Result<IdentityReport, ZetaError> {
    let comp = eq9_components(s, tol)?;
    let mut failures = Vec::new();
    if !comp.converged {
        failures.push("a component quadrature did not converge".to_string());
    }
    Ok(IdentityReport::new(
        IdentityId::Eq9,
        s,
        Value::Complex(comp.a - comp.b),
        Value::Complex(comp.c),
        tol,
    )
    .with_failures(failures))
}

/// `ζ(2)` from the real part of the `s = 2` contour identity,
/// `(3/2) ζ(2) = Re C`.
pub fn zeta2_from_contour(tol: f64) -> Result<f64, ZetaError> {
    check_tol(tol)?;
    // Re C = ∫_0^π y/2 dy; its error passes through scaled by 2/3.
    let c = c_by_quadrature(2, tol).into_value()?;
    Ok(c.re * 2.0 / 3.0)
}

/// `zeta2_from_contour` against `zeta_series(2)`.
pub fn verify_zeta2_contour(tol: f64) -> Result<IdentityReport, ZetaError> {
    let extracted = zeta2_from_contour(0.5 * tol)?;
    let series = zeta_series(2, 0.25 * tol)?;
    Ok(IdentityReport::new(IdentityId::S2Real, 2, Value::Real(extracted), Value::Real(series), tol))
}

/// `y sin y / (1 - cos y) = y cot(y/2)`, limit 2 at `y = 0`.
fn log2_kernel(y: f64) -> f64 {
    cot_kernel(y, 2)
}

/// Imaginary part at `s = 2`: `π ∫_0^∞ dx/(e^x + 1) = (1/2) ∫_0^π y sin y/(1 - cos y) dy`.
pub fn verify_log2_identity(tol: f64) -> Result<IdentityReport, ZetaError> {
    check_tol(tol)?;
    let mut fails = Failures::default();
    let lhs = PI * fails.check("fermi s=1", &integrate_semi_infinite(|x| fermi(x, 1), 1, 0.25 * tol / PI));
    let rhs = 0.5 * fails.check("y sin y/(1 - cos y)", &integrate_finite(log2_kernel, 0.0, PI, 0.5 * tol));
    Ok(IdentityReport::new(IdentityId::S2Imag, 2, Value::Real(lhs), Value::Real(rhs), tol).with_failures(fails.0))
}

/// Below this `y`, `y^{s-1} cot(y/2)` is taken from its Taylor series.
const COT_SERIES_CUTOFF: f64 = 1e-4;

/// `y^{s-1} cot(y/2)` without the `0 · ∞` at the origin.
pub fn cot_kernel(y: f64, s: u32) -> f64 {
    if y == 0.0 {
        return if s == 2 { 2.0 } else { 0.0 };
    }
    if y.abs() < COT_SERIES_CUTOFF {
        // cot(u) = 1/u - u/3 - u^3/45 - ..., u = y/2
        let y2 = y * y;
        return y.powi(s as i32 - 2) * (2.0 - y2 / 6.0 - y2 * y2 / 360.0);
    }
    let half = 0.5 * y;
    y.powi(s as i32 - 1) * half.cos() / half.sin()
}

/// `K(s) = ∫_0^π y^{s-1} cot(y/2) dy`.
pub fn k_integral(s: u32, tol: f64) -> Result<QuadratureResult<f64>, ZetaError> {
    check_s(s)?;
    check_tol(tol)?;
    Ok(integrate_finite(|y| cot_kernel(y, s), 0.0, PI, tol))
}

/// One `j` term on the left of the expanded real identity:
/// `weight · F(j)` with `weight = C(s-1, j) (-1)^{j/2} π^j`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FermiTerm {
    pub j: u32,
    pub weight: f64,
    pub moment: f64,
}

/// The real part of `A - B = C`, term by term.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExpandedIdentity {
    pub s: u32,
    /// `Γ(s) ζ(s)`
    pub zeta_term: f64,
    /// even `j` only; odd `j` contribute to the imaginary part
    pub fermi_terms: Vec<FermiTerm>,
    /// `Re(-i^s π^s / (2s))`
    pub polynomial_term: f64,
    /// `Re(-i^{s+1} / 2)`: zero for even `s`, `±1/2` for odd `s`
    pub kernel_weight: f64,
    /// `K(s)`, only evaluated when `kernel_weight != 0`
    pub kernel: f64,
}

impl ExpandedIdentity {
    pub fn lhs(&self) -> f64 {
        self.zeta_term + self.fermi_terms.iter().map(|t| t.weight * t.moment).sum::<f64>()
    }

    pub fn rhs(&self) -> f64 {
        self.polynomial_term + self.kernel_weight * self.kernel
    }
}

fn fermi_weight(s: u32, j: u32) -> f64 {
    let sign = if (j / 2).is_multiple_of(2) { 1.0 } else { -1.0 };
    sign * binomial_f64(s - 1, j) * PI.powi(j as i32)
}

fn polynomial_term(s: u32) -> f64 {
    (-i_pow(s) * PI.powi(s as i32) / (2.0 * s as f64)).re
}

fn kernel_weight(s: u32) -> f64 {
    (-i_pow(s + 1) * 0.5).re
}

/// `(1 - 2^{j+1-s}) Γ(s-j)`, the factor relating `F(j)` to `ζ(s-j)`.
fn eta_factor(s: u32, j: u32) -> f64 {
    (1.0 - 2f64.powi(j as i32 + 1 - s as i32)) * gamma_f64(s - j)
}

/// Expanded identity with every fermi moment by quadrature and `ζ(s)` from
/// [`zeta_series`].
fn expanded_by_quadrature(s: u32, tol: f64, fails: &mut Failures) -> Result<ExpandedIdentity, ZetaError> {
    let budget = 0.25 * tol;
    let g = gamma_f64(s);
    let zeta_term = g * zeta_series(s, budget / g)?;
    let even_js: Vec<u32> = (0..s).step_by(2).collect();
    let per_term = budget / even_js.len() as f64;
    let fermi_terms = even_js
        .into_iter()
        .map(|j| {
            let weight = fermi_weight(s, j);
            let moment = fails.check("F(j)", &fermi_moment(s, j, per_term / weight.abs()));
            FermiTerm { j, weight, moment }
        })
        .collect();
    let kw = kernel_weight(s);
    let kernel = if kw != 0.0 {
        fails.check("K(s)", &k_integral(s, budget / kw.abs())?)
    } else {
        0.0
    };
    Ok(ExpandedIdentity {
        s,
        zeta_term,
        fermi_terms,
        polynomial_term: polynomial_term(s),
        kernel_weight: kw,
        kernel,
    })
}

/// Expanded identity with closed-form fermi moments
/// `F(j) = (1 - 2^{j+1-s}) Γ(s-j) ζ(s-j)` from the supplied zeta values
/// (and `F(s-1) = ln 2`). `K(s)` is still a quadrature when needed.
pub fn expanded_with_zeta(
    s: u32,
    zeta: impl Fn(u32) -> Result<f64, ZetaError>,
    kernel_tol: f64,
) -> Result<ExpandedIdentity, ZetaError> {
    check_s(s)?;
    let zeta_term = gamma_f64(s) * zeta(s)?;
    let mut fermi_terms = Vec::new();
    for j in (0..s).step_by(2) {
        let moment = if j == s - 1 { LN_2 } else { eta_factor(s, j) * zeta(s - j)? };
        fermi_terms.push(FermiTerm {
            j,
            weight: fermi_weight(s, j),
            moment,
        });
    }
    let kw = kernel_weight(s);
    let kernel = if kw != 0.0 { k_integral(s, kernel_tol)?.into_value()? } else { 0.0 };
    Ok(ExpandedIdentity {
        s,
        zeta_term,
        fermi_terms,
        polynomial_term: polynomial_term(s),
        kernel_weight: kw,
        kernel,
    })
}

/// Real part of the contour identity with every piece computed numerically.
/// Tagged `EQ10_NUMERIC` for even `s`, `ODD_ZETA` for odd `s`.
pub fn expanded_real_identity(s: u32, tol: f64) -> Result<IdentityReport, ZetaError> {
    check_s(s)?;
    check_tol(tol)?;
    let mut fails = Failures::default();
    let e = expanded_by_quadrature(s, tol, &mut fails)?;
    let id = if s.is_multiple_of(2) { IdentityId::Eq10Numeric } else { IdentityId::OddZeta };
    Ok(IdentityReport::new(id, s, Value::Real(e.lhs()), Value::Real(e.rhs()), tol).with_failures(fails.0))
}

/// `ζ(2m)` as `f64` from the exact recursion.
pub fn zeta_even_exact_f64(m: u32) -> Result<f64, ZetaError> {
    let q = zeta_even_recursive(m as u64)?.coeff.to_f64();
    Ok(q * PI.powi(2 * m as i32))
}

/// Even `s = 2n` with the exact recursive `q_m` substituted: the residual is
/// the numeric shadow of the exact recursion.
pub fn eq10_shadow(n: u32, tol: f64) -> Result<IdentityReport, ZetaError> {
    if n == 0 {
        return Err(ZetaError::ZeroIndex);
    }
    check_tol(tol)?;
    let s = 2 * n;
    let e = expanded_with_zeta(s, |m| zeta_even_exact_f64(m / 2), tol)?;
    Ok(IdentityReport::new(IdentityId::Eq10Numeric, s, Value::Real(e.lhs()), Value::Real(e.rhs()), tol))
}

/// The even-s left side rebuilt from `α(n, k)` directly:
/// `Γ(2n) ζ(2n) + Σ_k α(n, k) ζ(2n - 2k)`.
pub fn eq10_lhs_from_alpha(n: u32) -> Result<f64, ZetaError> {
    let mut lhs = gamma_f64(2 * n) * zeta_even_exact_f64(n)?;
    for k in 0..n {
        let a = alpha_coeff(n as u64, k as i64)?.coeff.to_f64() * PI.powi(2 * k as i32);
        lhs += a * zeta_even_exact_f64(n - k)?;
    }
    Ok(lhs)
}

/// `ζ(s)` for odd `s >= 3`, solved from the real part of the contour
/// identity. Lower odd values `ζ(s - j)` come from the same extraction, so
/// the only transcendental inputs are `ln 2`, `π` and the integrals `K`.
pub fn odd_zeta_from_contour(s: u32, tol: f64) -> Result<f64, ZetaError> {
    if s < 3 || s.is_multiple_of(2) {
        return Err(ZetaError::Domain(format!("odd zeta extraction needs odd s >= 3, got {s}")));
    }
    check_tol(tol)?;
    // Γ(s) ζ(s) + F(0) = (2 - 2^{1-s}) Γ(s) ζ(s)
    let lead = (2.0 - 2f64.powi(1 - s as i32)) * gamma_f64(s);
    let kw = kernel_weight(s);
    let kernel = k_integral(s, 0.5 * tol * lead / kw.abs())?.into_value()?;
    let mut rest = polynomial_term(s) + kw * kernel;
    let inner: Vec<u32> = (2..s).step_by(2).collect();
    for &j in &inner {
        let weight = fermi_weight(s, j);
        let moment = if j == s - 1 {
            LN_2
        } else {
            let amp = (weight * eta_factor(s, j) / lead).abs();
            eta_factor(s, j) * odd_zeta_from_contour(s - j, 0.5 * tol / (amp * inner.len() as f64))?
        };
        rest -= weight * moment;
    }
    Ok(rest / lead)
}

/// Extracted `ζ(s)` against [`zeta_series`].
pub fn verify_odd_zeta(s: u32, tol: f64) -> Result<IdentityReport, ZetaError> {
    let extracted = odd_zeta_from_contour(s, 0.5 * tol)?;
    let series = zeta_series(s, 0.25 * tol)?;
    Ok(IdentityReport::new(IdentityId::OddZeta, s, Value::Real(extracted), Value::Real(series), tol))
}
