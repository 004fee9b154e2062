//! Decimal expansions of π and of `q · π^{2n}`.
//!
//! π comes from Machin's formula `π = 16 arctan(1/5) - 4 arctan(1/239)`
//! evaluated in fixed-point integer arithmetic. Each series term is a floor
//! division, so every term is off by less than 2 units in the last place and
//! the dropped tail is below one unit. The result is therefore an integer
//! interval `[lo, hi]` that provably contains `π · 10^D`.
//!
//! Decimal strings are *truncated*, never rounded. Guard digits are added
//! until both ends of the enclosing interval truncate to the same string;
//! the values involved are irrational, so this always terminates.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Pow, Signed, Zero};

use crate::error::ZetaError;
use crate::exact::ZetaEvenValue;

pub const MAX_PI_DIGITS: u64 = 100_000;

/// Guard digits used beyond the requested precision on the first attempt.
const MIN_GUARD_DIGITS: u64 = 10;

fn pow10(e: u64) -> BigInt {
    Pow::pow(BigInt::from(10u32), e as u32)
}

/// `Σ (-1)^k floor(floor(S / x^{2k+1}) / (2k+1))` together with the number
/// of terms summed.
fn arctan_inv(x: u32, scale: &BigInt) -> (BigInt, u64) {
    let x2 = BigInt::from(x) * BigInt::from(x);
    let mut power = scale / BigInt::from(x);
    let mut sum = BigInt::zero();
    let mut k: u64 = 0;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * k + 1);
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        k += 1;
    }
    (sum, k)
}

/// Integers `lo <= π · 10^scale_digits <= hi`.
pub fn pi_bounds(scale_digits: u64) -> (BigInt, BigInt) {
    let scale = pow10(scale_digits);
    let (a5, n5) = arctan_inv(5, &scale);
    let (a239, n239) = arctan_inv(239, &scale);
    let approx = BigInt::from(16) * a5 - BigInt::from(4) * a239;
    let err = BigInt::from(16 * (2 * n5 + 1) + 4 * (2 * n239 + 1));
    (&approx - &err, approx + err)
}

fn check_digits(d: u64) -> Result<(), ZetaError> {
    if d == 0 || d > MAX_PI_DIGITS {
        Err(ZetaError::DigitsOutOfRange(d))
    } else {
        Ok(())
    }
}

fn format_truncated(scaled: &BigInt, d: u64) -> String {
    let sign = if scaled.is_negative() { "-" } else { "" };
    let (int, frac) = scaled.abs().div_rem(&pow10(d));
    format!("{sign}{int}.{frac:0>width$}", width = d as usize)
}

/// π truncated to `d` digits after the decimal point, `1 <= d <= 100000`.
pub fn pi_digits(d: u64) -> Result<String, ZetaError> {
    check_digits(d)?;
    let mut guard = MIN_GUARD_DIGITS + digit_count(40 * d + 100);
    loop {
        let (lo, hi) = pi_bounds(d + guard);
        let cut = pow10(guard);
        let (tlo, thi) = (lo.div_floor(&cut), hi.div_floor(&cut));
        if tlo == thi {
            return Ok(format_truncated(&tlo, d));
        }
        guard += MIN_GUARD_DIGITS;
    }
}

fn digit_count(x: u64) -> u64 {
    x.to_string().len() as u64
}

/// Guard digits for rendering `q · π^{2n}`: `10 + ceil(2n · log10 π)`.
fn render_guard_digits(n: u64) -> u64 {
    MIN_GUARD_DIGITS + (2.0 * n as f64 * std::f64::consts::PI.log10()).ceil() as u64
}

/// `x^e` in fixed point with scale `10^digits`, each product rounded toward
/// `-inf` (`upper == false`) or `+inf` (`upper == true`). For non-negative
/// inputs this keeps a one-sided bound on the exact power.
fn fixed_pow(base: &BigInt, e: u64, scale: &BigInt, upper: bool) -> BigInt {
    let mul = |a: &BigInt, b: &BigInt| {
        let p = a * b;
        if upper {
            p.div_ceil(scale)
        } else {
            p.div_floor(scale)
        }
    };
    let mut result = scale.clone();
    let mut b = base.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = mul(&result, &b);
        }
        e >>= 1;
        if e > 0 {
            b = mul(&b, &b);
        }
    }
    result
}

/// Decimal expansion of `coeff · π^{2n}` truncated to `d` digits after the
/// point (absolute error below `10^-d`).
pub fn render_decimal(v: &ZetaEvenValue, d: u64) -> Result<String, ZetaError> {
    check_digits(d)?;
    let q = &v.coeff;
    let (p, r) = (q.numer().abs(), q.denom().clone());
    let sign = if q.is_negative() { "-" } else { "" };
    let mut guard = render_guard_digits(v.n);
    loop {
        let scale_digits = d + guard;
        check_digits(scale_digits)?;
        let scale = pow10(scale_digits);
        let (pi_lo, pi_hi) = pi_bounds(scale_digits);
        let lo = fixed_pow(&pi_lo, 2 * v.n, &scale, false);
        let hi = fixed_pow(&pi_hi, 2 * v.n, &scale, true);
        let v_lo = (&p * lo).div_floor(&r);
        let v_hi = (&p * hi).div_ceil(&r);
        let cut = pow10(guard);
        let (tlo, thi) = (v_lo.div_floor(&cut), v_hi.div_floor(&cut));
        if tlo == thi {
            let s = format_truncated(&tlo, d);
            return Ok(format!("{sign}{s}"));
        }
        guard += MIN_GUARD_DIGITS;
    }
}
