//! Exact rational numbers.
//!
//! Arithmetic is delegated to `num-rational`'s `BigRational`, which keeps
//! every value reduced (gcd 1) with a positive denominator. The helpers here
//! cover the conversions the rest of the crate needs.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact rational number with arbitrary-precision numerator and denominator.
pub type Rational = num_rational::BigRational;

/// Rational from a machine integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational from an arbitrary-precision integer.
pub fn rat_big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Rational `n/d`. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer value of `r`, if `r` is an integer.
pub fn to_integer(r: &Rational) -> Option<BigInt> {
    if r.denom().is_one() {
        Some(r.numer().clone())
    } else {
        None
    }
}

/// Smallest integer `>= r`.
pub fn ceil_to_int(r: &Rational) -> BigInt {
    r.ceil().to_integer()
}

/// Exact factorial as an arbitrary-precision integer.
pub fn factorial(k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=k as u64 {
        acc *= i;
    }
    acc
}

/// Generalized binomial coefficient `C(m, k)` for integer `m` (possibly
/// negative): the product `m (m-1) ... (m-k+1) / k!`.
pub fn binomial(m: i64, k: u32) -> BigInt {
    let mut num = BigInt::one();
    for j in 0..k as i64 {
        num *= BigInt::from(m - j);
    }
    num / factorial(k)
}

/// Binomial coefficient with an arbitrary-precision upper argument.
pub fn binomial_big(m: &BigInt, k: u32) -> BigInt {
    let mut num = BigInt::one();
    for j in 0..k as i64 {
        num *= m - BigInt::from(j);
    }
    num / factorial(k)
}

/// True if `r` is negative.
pub fn is_negative(r: &Rational) -> bool {
    r.is_negative()
}

/// `0` as a rational.
pub fn zero() -> Rational {
    Rational::zero()
}

/// `1` as a rational.
pub fn one() -> Rational {
    Rational::one()
}
