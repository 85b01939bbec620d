//! Exact rational scalars and small integer helpers.
//!
//! Every coefficient in this crate is a [`Rat`]: an arbitrary-precision
//! rational kept in lowest terms with a positive denominator. No floating
//! point appears anywhere; all arithmetic is exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number, always reduced, denominator > 0.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational n/d (reduced on construction).
pub fn frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// n! as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Falling factorial n(n-1)...(n-k+1); equals 0 when k > n and 1 when k = 0.
pub fn falling_factorial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
    }
    acc
}

/// Generalized binomial coefficient d(d-1)...(d-r+1)/r! for integer d of
/// either sign. This is the coefficient of w^r in (1+w)^d.
pub fn binomial_general(d: i64, r: u64) -> Rat {
    let mut num = BigInt::one();
    for i in 0..r {
        num *= BigInt::from(d) - BigInt::from(i);
    }
    Rat::new(num, factorial(r))
}

/// base^exp for a rational base and nonnegative integer exponent.
pub fn rat_pow(base: &Rat, exp: u64) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// True if `r` is an integer (denominator 1).
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// True if `r` is a nonnegative integer.
pub fn is_nonnegative_integer(r: &Rat) -> bool {
    is_integer(r) && !r.is_negative()
}
