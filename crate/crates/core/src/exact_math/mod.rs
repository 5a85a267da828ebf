//! Exact scalar substrate: big integers and rationals, combinatorial
//! primitives, dense rational polynomials and terminating hypergeometric sums.
//!
//! Integers and rationals are `num-bigint` / `num-rational` values. A
//! `BigRational` is always kept in lowest terms with a positive denominator,
//! so equality on [`ExactRational`] is structural equality of reduced
//! fractions.

mod hypergeometric;
mod polynomial;

pub use hypergeometric::terminating_hypergeometric;
pub use polynomial::{lagrange_interpolate, RationalPolynomial};

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type ExactInteger = BigInt;
pub type ExactRational = BigRational;

/// `n` as an exact integer.
pub fn int(n: i64) -> ExactInteger {
    BigInt::from(n)
}

/// The integer `n` as an exact rational.
pub fn rat_int(n: i64) -> ExactRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `num / den` reduced. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> ExactRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn to_rational(n: &ExactInteger) -> ExactRational {
    BigRational::from_integer(n.clone())
}

/// The integer value of `r`, or an error when `r` has a nontrivial denominator.
pub fn to_integer(r: &ExactRational) -> Result<ExactInteger> {
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        Err(Error::NotIntegral(r.to_string()))
    }
}

/// Nearest `f64` to `r`. This is the only rational-to-float conversion the
/// crate uses.
pub fn to_f64(r: &ExactRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Ratio::to_f64 can only fail on overflow of both parts.
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// `(-1)^k` as a rational.
pub fn sign_power(k: i64) -> ExactRational {
    if k.rem_euclid(2) == 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

/// `2^k` for any integer `k` (negative exponents give reciprocals).
pub fn pow2(k: i64) -> ExactRational {
    let p = BigInt::one() << k.unsigned_abs();
    if k >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

/// Shifted factorial `(a)_k = a (a+1) ... (a+k-1)`, with `(a)_0 = 1`.
pub fn shifted_factorial(a: &ExactRational, k: u32) -> ExactRational {
    let mut acc = BigRational::one();
    let mut factor = a.clone();
    for _ in 0..k {
        if factor.is_zero() {
            return BigRational::zero();
        }
        acc *= &factor;
        factor += BigInt::one();
    }
    acc
}

pub fn factorial(n: u32) -> ExactInteger {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `1 / x!`, taken as zero for negative `x`.
pub fn reciprocal_factorial(x: i64) -> ExactRational {
    if x < 0 {
        BigRational::zero()
    } else {
        BigRational::new(BigInt::one(), factorial(x as u32))
    }
}

/// `x!` for `x >= 0` as a rational; panics on negative input.
pub fn factorial_rat(x: i64) -> ExactRational {
    assert!(x >= 0, "factorial of negative integer {x}");
    BigRational::from_integer(factorial(x as u32))
}

/// Binomial coefficient with the polynomial extension to negative `n`:
/// `n (n-1) ... (n-k+1) / k!` for `k >= 0`, zero for `k < 0`.
pub fn binomial(n: &ExactInteger, k: i64) -> ExactInteger {
    if k < 0 {
        return BigInt::zero();
    }
    if !n.is_negative() && BigInt::from(k) > *n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        // after this step acc = binom(n, i+1), always integral
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `binomial` for machine-sized arguments.
pub fn binom(n: i64, k: i64) -> ExactInteger {
    binomial(&BigInt::from(n), k)
}

/// `n!! = n (n-2) ... 1` for odd `n >= 1`, with `(-1)!! = 1`.
pub fn double_factorial(n: i64) -> Result<ExactInteger> {
    if n < -1 || n.rem_euclid(2) == 0 {
        return Err(Error::DoubleFactorialDomain(n));
    }
    let mut acc = BigInt::one();
    let mut k = n;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    Ok(acc)
}
