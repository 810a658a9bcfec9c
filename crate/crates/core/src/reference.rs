//! Reference polynomial families built directly from their own generating
//! functions.
//!
//! These are the comparison targets for the reduction-table checks, so they
//! deliberately avoid the unified engine: each family forms its single-factor
//! quotient first and then raises it to the order power, instead of expanding
//! a product denominator and dividing once.
//!
//! The Euler-type generating functions are implemented with the standard
//! constant 2 in the numerator (2/(lambda b^t + a^t))^alpha c^{xt}; the source
//! material prints a spurious t there, under which none of the Euler
//! reductions (nor E_0 = 1) would hold.

use crate::error::Result;
use crate::poly::XPoly;
use crate::rational::{int, Rat};
use crate::series::{extract_poly, partial_exp_sum, Ring, TSeries};

#[derive(Debug, Clone, PartialEq)]
pub enum ReferenceKind {
    /// (t/(e^t - 1))^order e^{xt}
    ClassicalBernoulli { order: u32 },
    /// (2/(e^t + 1))^order e^{xt}
    ClassicalEuler { order: u32 },
    /// (t/(lambda e^t - 1))^order e^{xt}
    ApostolBernoulli { order: u32, lambda: Rat },
    /// (2/(lambda e^t + 1))^order e^{xt}
    ApostolEuler { order: u32, lambda: Rat },
    /// t^m e^{xt} / (e^t - sum_{l<m} t^l/l!)
    NataliniBernoulli { m: u32 },
    /// (t^m/(lambda e^t - sum_{l<m} t^l/l!))^order e^{xt}
    TremblayBernoulli { m: u32, order: u32, lambda: Rat },
    /// (t/(lambda b^t - a^t))^order c^{xt}
    SrivastavaBernoulli {
        order: u32,
        lambda: Rat,
        log_a: Rat,
        log_b: Rat,
        log_c: Rat,
    },
    /// (2/(lambda b^t + a^t))^order c^{xt}
    SrivastavaEuler {
        order: u32,
        lambda: Rat,
        log_a: Rat,
        log_b: Rat,
        log_c: Rat,
    },
}

/// Degree-n members (n! times the t^n coefficient) of the chosen family,
/// n = 0..=order_n.
pub fn reference_family(kind: &ReferenceKind, order_n: usize) -> Result<Vec<XPoly>> {
    use ReferenceKind::*;
    match kind {
        ClassicalBernoulli { order } => {
            srivastava_bernoulli(*order, &int(1), &int(0), &int(1), &int(1), order_n)
        }
        ClassicalEuler { order } => {
            srivastava_euler(*order, &int(1), &int(0), &int(1), &int(1), order_n)
        }
        ApostolBernoulli { order, lambda } => {
            srivastava_bernoulli(*order, lambda, &int(0), &int(1), &int(1), order_n)
        }
        ApostolEuler { order, lambda } => {
            srivastava_euler(*order, lambda, &int(0), &int(1), &int(1), order_n)
        }
        NataliniBernoulli { m } => tremblay_bernoulli(*m, 1, &int(1), order_n),
        TremblayBernoulli { m, order, lambda } => tremblay_bernoulli(*m, *order, lambda, order_n),
        SrivastavaBernoulli {
            order,
            lambda,
            log_a,
            log_b,
            log_c,
        } => srivastava_bernoulli(*order, lambda, log_a, log_b, log_c, order_n),
        SrivastavaEuler {
            order,
            lambda,
            log_a,
            log_b,
            log_c,
        } => srivastava_euler(*order, lambda, log_a, log_b, log_c, order_n),
    }
}

fn members(gf: &TSeries<XPoly>, order_n: usize) -> Vec<XPoly> {
    (0..=order_n).map(|n| extract_poly(gf, n)).collect()
}

fn carrier(log_c: &Rat, order: usize) -> TSeries<XPoly> {
    TSeries::exp_linear(&XPoly::new(vec![Rat::zero(), log_c.clone()]), order)
}

fn srivastava_bernoulli(
    alpha: u32,
    lambda: &Rat,
    log_a: &Rat,
    log_b: &Rat,
    log_c: &Rat,
    n: usize,
) -> Result<Vec<XPoly>> {
    let internal = n + 1;
    let den = TSeries::exp_linear(log_b, internal)
        .mul_rat(lambda)
        .sub(&TSeries::exp_linear(log_a, internal));
    let base = TSeries::t_power(1, internal).div(&den)?.truncate(n);
    let gf = base.pow(alpha).lift().mul(&carrier(log_c, n));
    Ok(members(&gf, n))
}

fn srivastava_euler(
    alpha: u32,
    lambda: &Rat,
    log_a: &Rat,
    log_b: &Rat,
    log_c: &Rat,
    n: usize,
) -> Result<Vec<XPoly>> {
    let den = TSeries::exp_linear(log_b, n)
        .mul_rat(lambda)
        .add(&TSeries::exp_linear(log_a, n));
    let base = TSeries::one(n).mul_rat(&int(2)).div(&den)?;
    let gf = base.pow(alpha).lift().mul(&carrier(log_c, n));
    Ok(members(&gf, n))
}

fn tremblay_bernoulli(m: u32, alpha: u32, lambda: &Rat, n: usize) -> Result<Vec<XPoly>> {
    let internal = n + m as usize;
    let den = TSeries::exp_linear(&int(1), internal)
        .mul_rat(lambda)
        .sub(&partial_exp_sum(m, internal));
    let base = TSeries::t_power(m as usize, internal)
        .div(&den)?
        .truncate(n);
    let gf = base.pow(alpha).lift().mul(&carrier(&int(1), n));
    Ok(members(&gf, n))
}

/// Classical Genocchi polynomials, 2t e^{xt}/(e^t + 1).
pub fn genocchi_polynomials(n: usize) -> Vec<XPoly> {
    let internal = n + 1;
    let den = TSeries::exp_linear(&int(1), internal).add(&TSeries::one(internal));
    let base = TSeries::t_power(1, internal)
        .mul_rat(&int(2))
        .div(&den)
        .expect("denominator has a unit constant term")
        .truncate(n);
    let gf = base.lift().mul(&carrier(&int(1), n));
    members(&gf, n)
}

/// The single-parameter predecessor family
/// t^{rk} 2^{r(1-k)} e^{xt} / prod_{i<r} (alpha_i e^t - 1):
/// the m = 1, a = 1, b = c = e slice rebuilt without the unified engine.
pub fn desouky_family(alphas: &[Rat], k: u32, n: usize) -> Result<Vec<XPoly>> {
    let r = alphas.len();
    let internal = n + r * k as usize;
    let exp_t = TSeries::exp_linear(&int(1), internal);
    let mut den = TSeries::<Rat>::one(internal);
    for alpha in alphas {
        den = den.mul(&exp_t.mul_rat(alpha).sub(&TSeries::one(internal)));
    }
    let num = TSeries::<Rat>::t_power(r * k as usize, internal)
        .mul_rat(&crate::rational::two_pow(r as i64 * (1 - k as i64)));
    let scalar = num.div(&den)?.truncate(n);
    let gf = scalar.lift().mul(&carrier(&int(1), n));
    Ok(members(&gf, n))
}
