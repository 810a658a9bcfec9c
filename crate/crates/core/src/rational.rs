//! Exact rational scalars and the handful of combinatorial helpers the rest
//! of the crate leans on.
//!
//! `Rat` is `num_rational::BigRational`: always reduced, denominator always
//! positive, so equality is plain structural equality. Display and FromStr
//! already use the "p/q" (or bare "p") form the CLI serializes.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

pub type Rat = num_rational::BigRational;

/// p/q as a reduced rational. Panics on q = 0.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Integer as a rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses "p/q" or "p". Rejects zero denominators and junk.
pub fn parse_rat(s: &str) -> Result<Rat> {
    Rat::from_str(s.trim())
        .map_err(|e| Error::InvalidArgument(format!("cannot parse rational {s:?}: {e}")))
}

/// n! as a big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// n! as a rational.
pub fn factorial_rat(n: usize) -> Rat {
    Rat::from_integer(factorial(n))
}

/// Binomial coefficient C(n, k) for integer arguments, 0 when k > n.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn binomial_rat(n: usize, k: usize) -> Rat {
    Rat::from_integer(binomial(n, k))
}

/// Generalized binomial C(x, k) = x(x-1)...(x-k+1)/k! for rational x.
pub fn gen_binomial(x: &Rat, k: usize) -> Rat {
    let mut num = Rat::one();
    for i in 0..k {
        num *= x - int(i as i64);
    }
    num / factorial_rat(k)
}

/// Rising factorial start(start+1)...(start+len-1); empty product for len 0.
pub fn rising_factorial(start: &Rat, len: usize) -> Rat {
    let mut acc = Rat::one();
    for i in 0..len {
        acc *= start + int(i as i64);
    }
    acc
}

/// base^e for possibly negative e. Panics when base = 0 and e < 0.
pub fn pow_i64(base: &Rat, e: i64) -> Rat {
    if e >= 0 {
        return base.pow(e as i32);
    }
    assert!(!base.is_zero(), "negative power of zero");
    base.pow(e as i32)
}

/// 2^e, any sign of e.
pub fn two_pow(e: i64) -> Rat {
    pow_i64(&int(2), e)
}

/// Integer power n^e for usize base with possibly negative exponent.
pub fn int_pow(n: u64, e: i64) -> Rat {
    pow_i64(&int(n as i64), e)
}

/// |x| as a rational (used by residual diagnostics).
pub fn abs(x: &Rat) -> Rat {
    x.abs()
}
