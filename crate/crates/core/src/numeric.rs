//! Exact integers, exact rationals and binomial coefficients.
//!
//! Every count in the crate is an [`ExactInt`]; probabilities and series
//! coefficients are [`ExactRational`], which is kept in lowest terms with a
//! positive denominator by construction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type ExactInt = BigInt;
pub type ExactRational = BigRational;

/// Reduced rational `num / den`. Panics when `den` is zero.
pub fn ratio(num: impl Into<ExactInt>, den: impl Into<ExactInt>) -> ExactRational {
    BigRational::new(num.into(), den.into())
}

pub fn int(v: i64) -> ExactInt {
    ExactInt::from(v)
}

pub fn rat(v: impl Into<ExactInt>) -> ExactRational {
    BigRational::from_integer(v.into())
}

/// Convert a rational that must be integral, failing loudly otherwise.
pub fn expect_integer(value: ExactRational, context: &str) -> Result<ExactInt> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::NonIntegral {
            context: context.to_string(),
            value: value.to_string(),
        })
    }
}

/// Standard binomial coefficient: zero when `k < 0`, `k > n` or `n < 0`.
pub fn binomial(n: i64, k: i64) -> ExactInt {
    if n < 0 || k < 0 || k > n {
        return ExactInt::zero();
    }
    let k = k.min(n - k);
    // acc = binom(n - k + i, i) after step i; each division is exact.
    let mut acc = ExactInt::one();
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// Falling-factorial binomial `a(a-1)...(a-b+1) / b!`, defined for any
/// integer `a`.
pub fn binomial_falling(a: i64, b: i64) -> Result<ExactInt> {
    if b < 0 {
        return Err(Error::Domain(format!(
            "falling binomial needs a non-negative lower index, got {b}"
        )));
    }
    if a >= 0 {
        return Ok(binomial(a, b));
    }
    // a < 0: binom(a, b) = (-1)^b binom(b - a - 1, b)
    let magnitude = binomial(b - a - 1, b);
    Ok(if b.is_odd() { -magnitude } else { magnitude })
}

/// 2^e as an exact integer.
pub fn pow2(e: u64) -> ExactInt {
    ExactInt::one() << e
}

pub fn factorial(n: u64) -> ExactInt {
    (1..=n).fold(ExactInt::one(), |acc, i| acc * i)
}
