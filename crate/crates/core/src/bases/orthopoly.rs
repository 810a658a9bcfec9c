//! Hermite, generalized Laguerre and Jacobi polynomials with exact rational
//! parameters, via their three-term recurrences.

use crate::error::{Error, Result};
use crate::poly::XPoly;
use crate::rational::{int, Rat};
use num_traits::Zero;

/// Physicists' Hermite: H_0 = 1, H_1 = 2x, H_{n+1} = 2x H_n - 2n H_{n-1}.
pub fn hermite(n: usize) -> XPoly {
    let two_x = XPoly::from_i64(&[0, 2]);
    let mut prev = XPoly::one();
    if n == 0 {
        return prev;
    }
    let mut cur = two_x.clone();
    for i in 1..n {
        let next = &(&two_x * &cur) - &prev.mul_rat(&int(2 * i as i64));
        prev = cur;
        cur = next;
    }
    cur
}

/// Generalized Laguerre:
/// (n+1) L_{n+1} = (2n + 1 + alpha - x) L_n - (n + alpha) L_{n-1}.
pub fn laguerre(n: usize, alpha: &Rat) -> XPoly {
    let mut prev = XPoly::one();
    if n == 0 {
        return prev;
    }
    // L_1 = 1 + alpha - x
    let mut cur = XPoly::new(vec![alpha + int(1), int(-1)]);
    for i in 1..n {
        let i_r = int(i as i64);
        let lin = XPoly::new(vec![&i_r * int(2) + int(1) + alpha, int(-1)]);
        let next =
            (&(&lin * &cur) - &prev.mul_rat(&(&i_r + alpha))).mul_rat(&(&i_r + int(1)).recip());
        prev = cur;
        cur = next;
    }
    cur
}

/// Jacobi P^(alpha,beta)_n in its natural variable y:
///
///   2n(n+a+b)(2n+a+b-2) P_n =
///     (2n+a+b-1)[(2n+a+b)(2n+a+b-2) y + a^2 - b^2] P_{n-1}
///     - 2(n+a-1)(n+b-1)(2n+a+b) P_{n-2}
///
/// Fails when the leading recurrence coefficient vanishes, which happens for
/// negative-integer-like alpha+beta values.
pub fn jacobi(n: usize, alpha: &Rat, beta: &Rat) -> Result<XPoly> {
    let mut prev = XPoly::one();
    if n == 0 {
        return Ok(prev);
    }
    let ab = alpha + beta;
    // P_1 = (alpha - beta)/2 + (alpha + beta + 2)/2 * y
    let mut cur = XPoly::new(vec![(alpha - beta) / int(2), (&ab + int(2)) / int(2)]);
    for i in 2..=n {
        let i_r = int(i as i64);
        let s = &i_r * int(2) + &ab; // 2n + a + b
        let lead = &i_r * int(2) * (&i_r + &ab) * (&s - int(2));
        if lead.is_zero() {
            return Err(Error::Singular(format!(
                "Jacobi recurrence degenerates at n={i} for alpha+beta={ab}"
            )));
        }
        let lin = XPoly::new(vec![alpha * alpha - beta * beta, &s * (&s - int(2))])
            .mul_rat(&(&s - int(1)));
        let tail = prev.mul_rat(&(int(2) * (&i_r + alpha - int(1)) * (&i_r + beta - int(1)) * &s));
        let next = (&(&lin * &cur) - &tail).mul_rat(&lead.recip());
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Value at the right endpoint: P^(a,b)_n(1) = C(n+a, n).
pub fn jacobi_at_one(n: usize, alpha: &Rat) -> Rat {
    crate::rational::gen_binomial(&(alpha + int(n as i64)), n)
}
