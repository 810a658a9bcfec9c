//! Connection coefficients between reciprocal falling factorials:
//!
//!   1/(y; a*)_r = sum_{m >= r} C(m, r; a*, b*) / (y; b*)_m.
//!
//! Working in u = 1/y, both sides become power series with valuations r and m
//! and unit leading coefficients, so the C(m, r) solve by forward elimination
//! and the remainder must cancel exactly through the truncation order.

use crate::error::{Error, Result};
use crate::rational::{int, Rat};
use crate::series::{Ring, TSeries};

/// u^r / prod_{i<r} (1 - nodes[i] u), the expansion of 1/(y; nodes)_r at
/// infinity, through u^order.
fn reciprocal_ff_series(nodes: &[Rat], r: usize, order: usize) -> TSeries<Rat> {
    let mut den = TSeries::<Rat>::one(order);
    for node in &nodes[..r] {
        den = den.mul(&TSeries::new(
            (0..=order)
                .map(|j| match j {
                    0 => int(1),
                    1 => -node,
                    _ => Rat::zero(),
                })
                .collect(),
        ));
    }
    TSeries::t_power(r, order)
        .div(&den)
        .expect("denominator has unit constant term")
}

/// C(m, r; alpha_star, beta_star) for m = r..=m_max (index m - r).
///
/// `alpha_star` supplies the r source nodes, `beta_star` at least m_max
/// target nodes. C(r, r) is always 1.
pub fn gen_lah(r: usize, alpha_star: &[Rat], beta_star: &[Rat], m_max: usize) -> Result<Vec<Rat>> {
    if alpha_star.len() < r {
        return Err(Error::InvalidArgument(format!(
            "need {r} source nodes, got {}",
            alpha_star.len()
        )));
    }
    if beta_star.len() < m_max {
        return Err(Error::InvalidArgument(format!(
            "need {m_max} target nodes, got {}",
            beta_star.len()
        )));
    }
    if m_max < r {
        return Err(Error::InvalidArgument(format!(
            "truncation {m_max} below source size {r}"
        )));
    }
    let mut rem = reciprocal_ff_series(alpha_star, r, m_max);
    // everything below u^r must already be absent
    debug_assert!(rem.valuation().is_none_or(|v| v >= r));
    let mut coeffs = Vec::with_capacity(m_max - r + 1);
    for m in r..=m_max {
        let c = rem.coeff(m).clone();
        if !Ring::is_zero(&c) {
            rem = rem.sub(&reciprocal_ff_series(beta_star, m, m_max).mul_rat(&c));
        }
        coeffs.push(c);
    }
    assert!(rem.is_zero(), "forward elimination must cancel exactly");
    Ok(coeffs)
}
