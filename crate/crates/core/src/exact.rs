//! Exact even zeta values.
//!
//! Every value here is a rational multiple of a power of π, so the module
//! only ever stores the rational coefficient. Two independent routes are
//! provided:
//!
//! * [`zeta_even_euler`]: the Bernoulli closed form
//!   `ζ(2n) = (2π)^{2n} (-1)^{n+1} B_{2n} / (2 (2n)!)`.
//! * [`zeta_even_recursive`]: the recursion obtained from the real part of
//!   the rectangle-contour identity,
//!   `Γ(2n) ζ(2n) + Σ_{k=0}^{n-1} α(n,k) ζ(2n-2k) = (-1)^{n-1} π^{2n} / (4n)`
//!   with `α(n,k) = (1 - 2^{1-2n+2k}) (-π²)^k C(2n-1, 2k) Γ(2n-2k)`.
//!
//! The `k = 0` term of that sum multiplies `ζ(2n)` itself, so the recursion
//! only becomes explicit after moving it to the left:
//!
//! ```text
//! (Γ(2n) + a(n,0)) q_n = (-1)^{n-1} / (4n) - Σ_{k=1}^{n-1} a(n,k) q_{n-k}
//! ```
//!
//! where `ζ(2m) = q_m π^{2m}` and `α(n,k) = a(n,k) π^{2k}`. Every term then
//! carries the same factor `π^{2n}`, which cancels.
//!
//! Both Bernoulli numbers and recursive zeta coefficients are memoized in
//! process-wide tables guarded by `RwLock`s; they are safe to read and extend
//! from any number of threads, and results do not depend on call order.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::ZetaError;
use crate::rational::Rational;

/// `ζ(2n) = coeff · π^{2n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaEvenValue {
    pub n: u64,
    pub coeff: Rational,
}

/// `α(n,k) = coeff · π^{2k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaCoeff {
    pub n: u64,
    pub k: u64,
    pub coeff: Rational,
}

/// Binomial coefficient; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 1..=k {
        // acc * (n - k + i) is always divisible by i at this point.
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    acc
}

/// `Γ(m) = (m - 1)!` for positive integers.
pub fn gamma_int(m: i64) -> Result<BigInt, ZetaError> {
    if m <= 0 {
        return Err(ZetaError::GammaDomain(m));
    }
    Ok(factorial((m - 1) as u64))
}

fn factorial_table() -> &'static RwLock<Vec<BigInt>> {
    static TABLE: OnceLock<RwLock<Vec<BigInt>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![BigInt::one()]))
}

/// `m!`, memoized.
pub(crate) fn factorial(m: u64) -> BigInt {
    let m = m as usize;
    {
        let table = factorial_table().read().unwrap();
        if let Some(v) = table.get(m) {
            return v.clone();
        }
    }
    let mut table = factorial_table().write().unwrap();
    while table.len() <= m {
        let i = table.len();
        let next = &table[i - 1] * BigInt::from(i);
        table.push(next);
    }
    table[m].clone()
}

fn bernoulli_table() -> &'static RwLock<Vec<Rational>> {
    static TABLE: OnceLock<RwLock<Vec<Rational>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![Rational::one()]))
}

/// `B_m` from `Σ_{k=0}^{m} C(m+1, k) B_k = 0`, `B_0 = 1` (so `B_1 = -1/2`).
///
/// Memoized: once `B_{m-1}` is known, `B_m` costs `O(m)` rational operations.
pub fn bernoulli(m: u64) -> Rational {
    let m = m as usize;
    {
        let table = bernoulli_table().read().unwrap();
        if let Some(b) = table.get(m) {
            return b.clone();
        }
    }
    let mut table = bernoulli_table().write().unwrap();
    while table.len() <= m {
        let next = next_bernoulli(&table);
        table.push(next);
    }
    table[m].clone()
}

fn next_bernoulli(known: &[Rational]) -> Rational {
    let m = known.len() as u64;
    let mut row = BigInt::one(); // C(m+1, 0)
    let mut sum = Rational::zero();
    for (k, b) in known.iter().enumerate() {
        let k = k as u64;
        if !b.is_zero() {
            sum = sum + b * Rational::from_integer(row.clone());
        }
        row = row * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
    }
    -(sum / Rational::from_integer(m + 1))
}

fn require_n(n: u64) -> Result<(), ZetaError> {
    if n == 0 {
        Err(ZetaError::ZeroIndex)
    } else {
        Ok(())
    }
}

/// Euler's closed form: `q_n = 2^{2n} (-1)^{n+1} B_{2n} / (2 (2n)!)`.
pub fn zeta_even_euler(n: u64) -> Result<ZetaEvenValue, ZetaError> {
    require_n(n)?;
    let b = bernoulli(2 * n);
    let sign = if n % 2 == 1 { Rational::one() } else { -Rational::one() };
    let num = Rational::pow2(2 * n as i64) * sign * b;
    let coeff = num / Rational::from_integer(BigInt::from(2) * factorial(2 * n));
    Ok(ZetaEvenValue { n, coeff })
}

/// `α(n,k)` as a rational multiple of `π^{2k}`:
/// `(1 - 2^{1-2n+2k}) (-1)^k C(2n-1, 2k) Γ(2n-2k)`.
pub fn alpha_coeff(n: u64, k: i64) -> Result<AlphaCoeff, ZetaError> {
    require_n(n)?;
    if k < 0 || k as u64 >= n {
        return Err(ZetaError::AlphaDomain { n, k });
    }
    let k = k as u64;
    let damping = Rational::one() - Rational::pow2(1 - 2 * n as i64 + 2 * k as i64);
    let sign = if k.is_multiple_of(2) { Rational::one() } else { -Rational::one() };
    let binom = Rational::from_integer(binomial(2 * n - 1, 2 * k));
    let gamma = Rational::from_integer(gamma_int((2 * n - 2 * k) as i64)?);
    Ok(AlphaCoeff {
        n,
        k,
        coeff: damping * sign * binom * gamma,
    })
}

/// Same value as [`alpha_coeff`], via `C(2n-1, 2k) (2n-2k-1)! = (2n-1)!/(2k)!`
/// and the memoized factorial table.
fn alpha_fast(n: u64, k: u64) -> Rational {
    let exp = 2 * (n - k) - 1;
    let damping = Rational::new((BigInt::one() << exp as usize) - 1, BigInt::one() << exp as usize)
        .expect("nonzero power of two");
    let ratio = Rational::new(factorial(2 * n - 1), factorial(2 * k)).expect("nonzero factorial");
    let term = damping * ratio;
    if k.is_multiple_of(2) {
        term
    } else {
        -term
    }
}

/// Left-hand factor `Γ(2n) + a(n,0)` of the rearranged recursion.
pub fn recursion_divisor(n: u64) -> Result<Rational, ZetaError> {
    require_n(n)?;
    Ok(Rational::from_integer(factorial(2 * n - 1)) + alpha_fast(n, 0))
}

/// Memo for the recursion, stored as `r_m = (2m)! q_m`; index 0 is unused.
fn zeta_recursive_table() -> &'static RwLock<Vec<Rational>> {
    static TABLE: OnceLock<RwLock<Vec<Rational>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![Rational::zero()]))
}

/// `q_n` from the contour recursion, solved exactly.
///
/// The table holds `r_m = (2m)! q_m`. Since `a(n,k) = (1 - 2^{-(2n-2k-1)})
/// (-1)^k (2n-1)!/(2k)!`, multiplying the rearranged recursion by `2n`
/// gives the same equation in a form whose denominators stay small:
///
/// ```text
/// (2 - 2^{1-2n}) r_n = (-1)^{n-1}/2 - Σ_{k=1}^{n-1} (-1)^k (1 - 2^{-(2n-2k-1)}) C(2n, 2k) r_{n-k}
/// ```
///
/// Memoized: computing `q_1..q_N` costs `O(N²)` rational operations.
pub fn zeta_even_recursive(n: u64) -> Result<ZetaEvenValue, ZetaError> {
    require_n(n)?;
    let scaled = {
        let table = zeta_recursive_table().read().unwrap();
        table.get(n as usize).cloned()
    };
    let scaled = match scaled {
        Some(r) => r,
        None => {
            let mut table = zeta_recursive_table().write().unwrap();
            while table.len() <= n as usize {
                let m = table.len() as u64;
                let r = next_scaled(m, &table);
                table.push(r);
            }
            table[n as usize].clone()
        }
    };
    let coeff = scaled / Rational::from_integer(factorial(2 * n));
    Ok(ZetaEvenValue { n, coeff })
}

fn next_scaled(n: u64, known: &[Rational]) -> Rational {
    // Every term has a small denominator (a power of two times the odd
    // primes of a Bernoulli denominator), so the sum is accumulated as one
    // integer over their lcm and reduced once at the end.
    let den_of = |k: u64| -> BigInt { known[(n - k) as usize].denom() << (2 * (n - k) - 1) as usize };
    let mut odd = BigInt::one();
    let mut twos = 1u64;
    for k in 1..n {
        let den = known[(n - k) as usize].denom();
        let tz = den.trailing_zeros().unwrap_or(0);
        twos = twos.max(tz + 2 * (n - k) - 1);
        odd = odd.lcm(&(den >> tz as usize));
    }
    let common = odd << twos as usize;
    let mut acc: BigInt = &common / 2u32;
    if n.is_multiple_of(2) {
        acc = -acc;
    }
    let mut binom = BigInt::one(); // C(2n, 2k), advanced two steps per k
    for k in 1..n {
        let top = 2 * n;
        binom = binom * BigInt::from(top - 2 * k + 2) / BigInt::from(2 * k - 1);
        binom = binom * BigInt::from(top - 2 * k + 1) / BigInt::from(2 * k);
        let exp = (2 * (n - k) - 1) as usize;
        let r = &known[(n - k) as usize];
        let term = ((BigInt::one() << exp) - 1u32) * (&common / den_of(k)) * &binom * r.numer();
        if k % 2 == 1 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    let rhs = Rational::new(acc, common).expect("nonzero lcm");
    let lead = Rational::from_integer(2) - Rational::pow2(1 - 2 * n as i64);
    rhs / lead
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q).unwrap()
    }

    #[test]
    fn binomial_small() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(7, 0), BigInt::from(1));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }

    #[test]
    fn binomial_matches_pascal_triangle() {
        // Oracle: build rows by addition only.
        let mut row = vec![BigInt::one()];
        for n in 1..=60u64 {
            let mut next = vec![BigInt::one(); n as usize + 1];
            for k in 1..n as usize {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
            for (k, v) in row.iter().enumerate() {
                assert_eq!(&binomial(n, k as u64), v, "C({n},{k})");
            }
        }
        assert_eq!(binomial(60, 30).to_string(), "118264581564861424");
    }

    #[test]
    fn gamma_at_integers() {
        assert_eq!(gamma_int(1).unwrap(), BigInt::from(1));
        assert_eq!(gamma_int(2).unwrap(), BigInt::from(1));
        assert_eq!(gamma_int(5).unwrap(), BigInt::from(24));
        assert!(matches!(gamma_int(0), Err(ZetaError::GammaDomain(0))));
        assert!(gamma_int(-3).is_err());
    }

    #[test]
    fn bernoulli_small() {
        assert_eq!(bernoulli(0), Rational::one());
        assert_eq!(bernoulli(1), r(-1, 2));
        assert_eq!(bernoulli(2), r(1, 6));
        assert_eq!(bernoulli(3), Rational::zero());
        assert_eq!(bernoulli(4), r(-1, 30));
        assert_eq!(bernoulli(6), r(1, 42));
        assert_eq!(bernoulli(12), r(-691, 2730));
    }

    #[test]
    fn odd_bernoulli_vanish() {
        for m in (3..=101).step_by(2) {
            assert!(bernoulli(m).is_zero(), "B_{m}");
        }
    }

    #[test]
    fn euler_small() {
        assert_eq!(zeta_even_euler(1).unwrap().coeff, r(1, 6));
        assert_eq!(zeta_even_euler(2).unwrap().coeff, r(1, 90));
        assert_eq!(zeta_even_euler(3).unwrap().coeff, r(1, 945));
        assert_eq!(zeta_even_euler(4).unwrap().coeff, r(1, 9450));
        assert!(zeta_even_euler(0).is_err());
    }

    #[test]
    fn alpha_small() {
        assert_eq!(alpha_coeff(1, 0).unwrap().coeff, r(1, 2));
        assert_eq!(alpha_coeff(2, 1).unwrap().coeff, r(-3, 2));
        assert_eq!(alpha_coeff(2, 0).unwrap().coeff, r(21, 4));
        assert!(matches!(alpha_coeff(2, 2), Err(ZetaError::AlphaDomain { .. })));
        assert!(alpha_coeff(2, -1).is_err());
        assert!(alpha_coeff(0, 0).is_err());
    }

    #[test]
    fn alpha_fast_agrees_with_definition() {
        for n in 1..=25 {
            for k in 0..n {
                assert_eq!(alpha_fast(n, k), alpha_coeff(n, k as i64).unwrap().coeff, "({n},{k})");
            }
        }
    }

    /// The recursion exactly as derived, without the `(2m)!` rescaling.
    fn unscaled_recursion(n_max: u64) -> Vec<Rational> {
        let mut q = vec![Rational::zero()];
        for n in 1..=n_max {
            let sign = if n % 2 == 1 { 1 } else { -1 };
            let mut rhs = Rational::new(sign, 4 * n as i64).unwrap();
            for k in 1..n {
                rhs = rhs - alpha_coeff(n, k as i64).unwrap().coeff * &q[(n - k) as usize];
            }
            q.push(rhs / recursion_divisor(n).unwrap());
        }
        q
    }

    #[test]
    fn scaled_recursion_matches_unscaled() {
        let q = unscaled_recursion(30);
        for n in 1..=30 {
            assert_eq!(zeta_even_recursive(n).unwrap().coeff, q[n as usize], "n = {n}");
        }
    }

    #[test]
    fn recursion_small() {
        // (1 + 1/2) q_1 = 1/4
        assert_eq!(recursion_divisor(1).unwrap(), r(3, 2));
        assert_eq!(zeta_even_recursive(1).unwrap().coeff, r(1, 6));
        // (6 + 21/4) q_2 = -1/8 + (3/2)(1/6)
        assert_eq!(recursion_divisor(2).unwrap(), r(45, 4));
        assert_eq!(zeta_even_recursive(2).unwrap().coeff, r(1, 90));
        assert_eq!(
            zeta_even_recursive(5).unwrap().coeff,
            zeta_even_euler(5).unwrap().coeff
        );
        assert!(zeta_even_recursive(0).is_err());
    }

    #[test]
    fn recursion_divisor_is_positive() {
        for n in 1..=1000 {
            assert!(recursion_divisor(n).unwrap().is_positive(), "n = {n}");
        }
    }

    #[test]
    fn recursion_equals_euler_through_50() {
        for n in 1..=50 {
            assert_eq!(
                zeta_even_recursive(n).unwrap().coeff,
                zeta_even_euler(n).unwrap().coeff,
                "n = {n}"
            );
        }
    }

    #[test]
    fn coefficients_positive_and_decreasing() {
        let mut prev: Option<Rational> = None;
        for n in 1..=50 {
            let q = zeta_even_euler(n).unwrap().coeff;
            assert!(q.is_positive());
            let b = bernoulli(2 * n);
            let signed = if n % 2 == 1 { b } else { -b };
            assert!(signed.is_positive(), "(-1)^(n+1) B_2n > 0 at n = {n}");
            if let Some(p) = prev {
                assert!(q < p, "q_{n} < q_{}", n - 1);
            }
            prev = Some(q);
        }
    }

    #[test]
    fn concurrent_memo_access_is_consistent() {
        let handles: Vec<_> = (0..4)
            .map(|t| std::thread::spawn(move || (1..=30).rev().map(|n| zeta_even_recursive(n + t).unwrap().coeff).collect::<Vec<_>>()))
            .collect();
        for (t, h) in handles.into_iter().enumerate() {
            let got = h.join().unwrap();
            for (i, q) in got.iter().enumerate() {
                let n = 30 - i as u64 + t as u64;
                assert_eq!(q, &zeta_even_euler(n).unwrap().coeff);
            }
        }
    }
}
