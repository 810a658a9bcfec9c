//! Bernstein-type basis values from the generating function
//!
//!   ( 2^{1-k} x^k t^k / (1+ax)^k )^m * phi * exp( t (1+bx)/(1+ax) )
//!     = sum_n p_n^{(a,b)}(x; k, m) t^n / n!
//!
//! The printed normalization "1/mk!" is ambiguous; both groupings are
//! implemented and selected by `FactorialMode`. The connection identity that
//! consumes this basis carries the same factor on its right-hand side, so the
//! two modes turn out to be indistinguishable there; MK_FACT is the default.

use crate::error::{Error, Result};
use crate::rational::{factorial_rat, int, pow_i64, two_pow, Rat};
use crate::series::{Ring, TSeries};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FactorialMode {
    /// 1 / (m*k)!
    #[default]
    MkFact,
    /// 1 / (m * k!)
    MTimesKFact,
}

impl FactorialMode {
    pub fn factor(&self, m: u32, k: u32) -> Rat {
        match self {
            FactorialMode::MkFact => factorial_rat((m * k) as usize).recip(),
            FactorialMode::MTimesKFact => (int(m as i64) * factorial_rat(k as usize)).recip(),
        }
    }
}

impl fmt::Display for FactorialMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorialMode::MkFact => write!(f, "mk-fact"),
            FactorialMode::MTimesKFact => write!(f, "m-times-kfact"),
        }
    }
}

impl FromStr for FactorialMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mk-fact" => Ok(FactorialMode::MkFact),
            "m-times-kfact" => Ok(FactorialMode::MTimesKFact),
            other => Err(Error::InvalidArgument(format!(
                "unknown factorial mode {other:?} (expected mk-fact or m-times-kfact)"
            ))),
        }
    }
}

/// p_0..p_order at the rational point x. Requires m >= 1 and 1 + a x != 0.
pub fn bbh_basis(
    x: &Rat,
    a: &Rat,
    b: &Rat,
    k: u32,
    m: u32,
    order: usize,
    mode: FactorialMode,
) -> Result<Vec<Rat>> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    let denom = int(1) + a * x;
    if Ring::is_zero(&denom) {
        return Err(Error::Singular(format!("1 + a x vanishes at x={x}, a={a}")));
    }
    let km = (k * m) as usize;
    let scale = two_pow((m as i64) * (1 - k as i64))
        * pow_i64(&(x / &denom), km as i64)
        * mode.factor(m, k);
    let y = (int(1) + b * x) / &denom;
    let gf = TSeries::<Rat>::t_power(km, order)
        .mul(&TSeries::exp_linear(&y, order))
        .mul_rat(&scale);
    Ok((0..=order)
        .map(|n| gf.coeff(n) * factorial_rat(n))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn first_nonzero_values_match_hand_expansion() {
        // k=1, m=1, a=1, b=2, x=1: (t/2) e^{3t/2}
        let p = bbh_basis(&int(1), &int(1), &int(2), 1, 1, 3, FactorialMode::MkFact).unwrap();
        assert_eq!(p[0], int(0));
        assert_eq!(p[1], rat(1, 2));
        assert_eq!(p[2], rat(3, 2));
        assert_eq!(p[3], rat(27, 8)); // 3! * (1/2) * (3/2)^2 / 2!
    }

    #[test]
    fn modes_coincide_when_groupings_agree() {
        // k=2, m=1: (mk)! = 2 = m * k!, so both give p_2 = 9/2.
        for mode in [FactorialMode::MkFact, FactorialMode::MTimesKFact] {
            let p = bbh_basis(&int(3), &int(0), &int(1), 2, 1, 4, mode).unwrap();
            assert_eq!(p[0], int(0));
            assert_eq!(p[1], int(0));
            assert_eq!(p[2], rat(9, 2));
        }
    }

    #[test]
    fn modes_differ_when_groupings_differ() {
        // k=2, m=2: (mk)! = 24 vs m k! = 4.
        let x = rat(1, 2);
        let p1 = bbh_basis(&x, &int(1), &int(1), 2, 2, 6, FactorialMode::MkFact).unwrap();
        let p2 = bbh_basis(&x, &int(1), &int(1), 2, 2, 6, FactorialMode::MTimesKFact).unwrap();
        assert_eq!(&p1[4] * int(6), p2[4]);
    }

    #[test]
    fn degenerate_prefix_cases() {
        // k=0, m=1, a=b=0: plain 2 e^t, so every p_n = 2.
        let p = bbh_basis(&int(0), &int(0), &int(0), 0, 1, 5, FactorialMode::MkFact).unwrap();
        assert!(p.iter().all(|v| v == &int(2)));
        // x=0 with k >= 1 kills the prefactor.
        let p = bbh_basis(&int(0), &int(2), &int(3), 1, 2, 4, FactorialMode::MkFact).unwrap();
        assert!(p.iter().all(|v| v == &Rat::zero()));
    }

    #[test]
    fn closed_form_oracle() {
        // p_n = n! 2^{m(1-k)} X^{km} phi Y^{n-km}/(n-km)! for n >= km.
        let (x, a, b, k, m) = (rat(2, 3), rat(1, 2), int(-1), 2u32, 2u32);
        let order = 8;
        let p = bbh_basis(&x, &a, &b, k, m, order, FactorialMode::MkFact).unwrap();
        let denom = int(1) + &a * &x;
        let xx = &x / &denom;
        let y = (int(1) + &b * &x) / &denom;
        let km = (k * m) as usize;
        for n in 0..=order {
            let expect = if n < km {
                Rat::zero()
            } else {
                factorial_rat(n)
                    * two_pow(m as i64 * (1 - k as i64))
                    * xx.pow(km as i32)
                    * FactorialMode::MkFact.factor(m, k)
                    * y.pow((n - km) as i32)
                    / factorial_rat(n - km)
            };
            assert_eq!(p[n], expect, "n={n}");
        }
    }

    #[test]
    fn singular_and_invalid_arguments() {
        assert!(matches!(
            bbh_basis(&int(-1), &int(1), &int(0), 1, 1, 3, FactorialMode::MkFact),
            Err(Error::Singular(_))
        ));
        assert!(matches!(
            bbh_basis(&int(1), &int(1), &int(0), 1, 0, 3, FactorialMode::MkFact),
            Err(Error::InvalidArgument(_))
        ));
    }
}
