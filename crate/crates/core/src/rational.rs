//! Exact arbitrary-precision fractions.
//!
//! A [`Rational`] is always stored in canonical form: the denominator is
//! strictly positive and shares no factor with the numerator. Every
//! constructor and arithmetic operation re-establishes that form before
//! returning.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::ZetaError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rational {
    num: BigInt,
    den: BigInt,
}

/// gcd of two non-negative integers. num-bigint uses a binary gcd whose cost
/// is quadratic in the *larger* operand, so lopsided pairs are first reduced
/// with one division.
pub(crate) fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let (a, b) = (a.abs(), b.abs());
    let (big, small) = if a.bits() >= b.bits() { (a, b) } else { (b, a) };
    if small.is_zero() {
        return big;
    }
    if big.bits() > small.bits() + 64 {
        let r = &big % &small;
        r.gcd(&small)
    } else {
        big.gcd(&small)
    }
}

impl Rational {
    /// Builds `num/den` and reduces it. Fails on a zero denominator.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self, ZetaError> {
        let den = den.into();
        if den.is_zero() {
            return Err(ZetaError::DivisionByZero);
        }
        Ok(Self::normalized(num.into(), den))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational {
            num: n.into(),
            den: BigInt::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    fn normalized(mut num: BigInt, mut den: BigInt) -> Self {
        debug_assert!(!den.is_zero());
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        if num.is_zero() {
            return Self::zero();
        }
        let g = gcd(&num, &den);
        if !g.is_one() {
            num /= &g;
            den /= &g;
        }
        Rational { num, den }
    }

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.num.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn abs(&self) -> Self {
        Rational {
            num: self.num.abs(),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<Self, ZetaError> {
        if self.is_zero() {
            return Err(ZetaError::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self, ZetaError> {
        if rhs.is_zero() {
            return Err(ZetaError::DivisionByZero);
        }
        Ok(self.mul_ref(&rhs.recip()?))
    }

    /// Integer power; negative exponents invert first. `0^e` with `e < 0`
    /// is a division by zero.
    pub fn pow(&self, exp: i64) -> Result<Self, ZetaError> {
        let base = if exp < 0 { self.recip()? } else { self.clone() };
        let e = exp.unsigned_abs();
        let e: u32 = e.try_into().map_err(|_| ZetaError::ExponentTooLarge(exp))?;
        // Powers of a reduced fraction stay reduced.
        Ok(Rational {
            num: num_traits::pow::Pow::pow(&base.num, e),
            den: num_traits::pow::Pow::pow(&base.den, e),
        })
    }

    /// `2^e` for any signed exponent.
    pub fn pow2(exp: i64) -> Self {
        let shift = exp.unsigned_abs() as usize;
        let p = BigInt::one() << shift;
        if exp >= 0 {
            Self::from_integer(p)
        } else {
            Rational {
                num: BigInt::one(),
                den: p,
            }
        }
    }

    /// Nearest `f64` (within a couple of ulps), computed from the top bits of
    /// numerator and denominator so huge operands do not overflow.
    pub fn to_f64(&self) -> f64 {
        if self.num.is_zero() {
            return 0.0;
        }
        let nb = self.num.bits() as i64;
        let db = self.den.bits() as i64;
        // Keep 64 significant bits of each operand.
        let ns = (nb - 64).max(0);
        let ds = (db - 64).max(0);
        let n = (&self.num >> ns as usize).to_f64().unwrap_or(f64::NAN);
        let d = (&self.den >> ds as usize).to_f64().unwrap_or(f64::NAN);
        let e = ns - ds;
        let e = e.clamp(i32::MIN as i64, i32::MAX as i64) as i32;
        ldexp(n / d, e)
    }

    fn add_ref(&self, rhs: &Rational) -> Rational {
        // Knuth's formulation keeps the gcd work on the (typically small)
        // denominators.
        let g = gcd(&self.den, &rhs.den);
        if g.is_one() {
            let num = &self.num * &rhs.den + &rhs.num * &self.den;
            let den = &self.den * &rhs.den;
            return Self::normalized(num, den);
        }
        let bd = &self.den / &g;
        let dd = &rhs.den / &g;
        let t = &self.num * &dd + &rhs.num * &bd;
        if t.is_zero() {
            return Self::zero();
        }
        let g2 = gcd(&t, &g);
        let num = t / &g2;
        let den = bd * (&rhs.den / &g2);
        Rational { num, den }
    }

    fn mul_ref(&self, rhs: &Rational) -> Rational {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        let num = (&self.num / &g1) * (&rhs.num / &g2);
        let den = (&self.den / &g2) * (&rhs.den / &g1);
        Self::normalized(num, den)
    }

    /// True when `gcd(|num|, den) == 1` and `den > 0`.
    pub fn is_canonical(&self) -> bool {
        self.den.is_positive() && (self.num.is_zero() && self.den.is_one() || gcd(&self.num, &self.den).is_one())
    }
}

fn ldexp(x: f64, e: i32) -> f64 {
    // Split the scaling so intermediate factors stay finite.
    let mut x = x;
    let mut e = e;
    while e > 1000 {
        x *= 2f64.powi(1000);
        e -= 1000;
    }
    while e < -1000 {
        x *= 2f64.powi(-1000);
        e += 1000;
    }
    x * 2f64.powi(e)
}

impl Default for Rational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Self::from_integer(n)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

/// `p/q` with the sign on `p`; integers print without a denominator.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Rational {
    type Err = ZetaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ZetaError::ParseRational(s.to_string());
        match s.split_once('/') {
            Some((p, q)) => {
                let p = BigInt::from_str(p).map_err(|_| bad())?;
                let q = BigInt::from_str(q).map_err(|_| bad())?;
                if q.sign() != Sign::Plus {
                    return Err(bad());
                }
                Rational::new(p, q)
            }
            None => Ok(Rational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
        }
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -self.clone()
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                $body(self, rhs)
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $body(&self, &rhs)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                $body(&self, rhs)
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &Rational, b: &Rational| a.add_ref(b));
forward_binop!(Sub, sub, |a: &Rational, b: &Rational| a.add_ref(&-b));
forward_binop!(Mul, mul, |a: &Rational, b: &Rational| a.mul_ref(b));
// Panics on a zero divisor, like integer division; use `checked_div` to
// get an error instead.
forward_binop!(Div, div, |a: &Rational, b: &Rational| a
    .checked_div(b)
    .expect("rational division by zero"));

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q).unwrap()
    }

    #[test]
    fn reduces_on_construction() {
        let x = r(6, -4);
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
        assert!(x.is_canonical());
        assert_eq!(r(0, -7), Rational::zero());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(matches!(Rational::new(1, 0), Err(ZetaError::DivisionByZero)));
        assert!(Rational::zero().recip().is_err());
        assert!(Rational::zero().pow(-1).is_err());
    }

    #[test]
    fn arithmetic() {
        assert_eq!(r(1, 6) + r(1, 3), r(1, 2));
        assert_eq!(r(1, 6) - r(1, 3), r(-1, 6));
        assert_eq!(r(2, 3) * r(9, 4), r(3, 2));
        assert_eq!(r(2, 3) / r(4, 9), r(3, 2));
        assert_eq!(r(1, 2) + r(-1, 2), Rational::zero());
    }

    #[test]
    fn powers() {
        assert_eq!(r(2, 3).pow(3).unwrap(), r(8, 27));
        assert_eq!(r(2, 3).pow(-2).unwrap(), r(9, 4));
        assert_eq!(r(-2, 3).pow(-3).unwrap(), r(-27, 8));
        assert_eq!(r(5, 7).pow(0).unwrap(), Rational::one());
        assert_eq!(Rational::pow2(-3), r(1, 8));
        assert_eq!(Rational::pow2(4), r(16, 1));
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(r(-691, 2730).to_string(), "-691/2730");
        assert_eq!(r(4, 2).to_string(), "2");
        assert_eq!("-691/2730".parse::<Rational>().unwrap(), r(-691, 2730));
        assert_eq!("12".parse::<Rational>().unwrap(), r(12, 1));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("1/-2".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn ordering() {
        assert!(r(1, 90) < r(1, 6));
        assert!(r(-1, 2) < r(1, 3));
    }

    #[test]
    fn to_f64_handles_huge_operands() {
        assert_eq!(r(1, 4).to_f64(), 0.25);
        let big = Rational::pow2(3000) / Rational::pow2(2999);
        assert_eq!(big.to_f64(), 2.0);
        let x = Rational::new(BigInt::from(10).pow(400), BigInt::from(3) * BigInt::from(10).pow(400)).unwrap();
        assert!((x.to_f64() - 1.0 / 3.0).abs() < 1e-16);
    }
}
