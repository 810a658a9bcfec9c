//! The unified polynomial family engine.
//!
//! Members M_n(x) are read off the generating function
//!
//! ```text
//!   t^{rkm} 2^{rm(1-k)} c^{xt}
//!   --------------------------------------------------  = sum_n M_n(x) t^n/n!
//!   prod_{i<r} ( alpha_i b^t - a^t sum_{l<m} t^l/l! )
//! ```
//!
//! with a, b, c entering through exact rational logarithms. Everything runs
//! at an internal order high enough to absorb the denominator valuation, so
//! the returned series carries exactly the requested coefficients.

use crate::error::{Error, Result};
use crate::poly::XPoly;
use crate::rational::{factorial_rat, two_pow, Rat};
use crate::series::{extract_poly, partial_exp_sum, Ring, TSeries};

/// Parameters (k, m, alphas, log a, log b, log c); r is the alpha count.
/// r = 0 is allowed and means the empty denominator product, leaving the
/// bare numerator series (the degenerate end of the convolution identity).
#[derive(Debug, Clone, PartialEq)]
pub struct FamilyParams {
    pub k: u32,
    pub m: u32,
    pub alphas: Vec<Rat>,
    pub log_a: Rat,
    pub log_b: Rat,
    pub log_c: Rat,
}

impl FamilyParams {
    pub fn new(
        k: u32,
        m: u32,
        alphas: Vec<Rat>,
        log_a: Rat,
        log_b: Rat,
        log_c: Rat,
    ) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidArgument("m must be at least 1".into()));
        }
        Ok(FamilyParams {
            k,
            m,
            alphas,
            log_a,
            log_b,
            log_c,
        })
    }

    pub fn r(&self) -> usize {
        self.alphas.len()
    }

    /// a = b collapses the two exponential bases; legal but degenerate.
    pub fn base_collision(&self) -> bool {
        self.log_a == self.log_b
    }

    /// Exponent of t in the numerator: r * k * m.
    fn t_exponent(&self) -> usize {
        self.r() * (self.k as usize) * (self.m as usize)
    }

    /// Exponent of 2 in the numerator: r * m * (1 - k), possibly negative.
    fn two_exponent(&self) -> i64 {
        (self.r() as i64) * (self.m as i64) * (1 - self.k as i64)
    }

    fn describe(&self) -> String {
        let alphas: Vec<String> = self.alphas.iter().map(|a| a.to_string()).collect();
        format!(
            "k={} m={} alphas=({}) logs=({},{},{})",
            self.k,
            self.m,
            alphas.join(","),
            self.log_a,
            self.log_b,
            self.log_c
        )
    }
}

impl std::fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.describe())
    }
}

/// A computed prefix M_0..M_N of the family, with the parameters it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct PolySequence {
    pub params: FamilyParams,
    pub polys: Vec<XPoly>,
}

impl PolySequence {
    pub fn order(&self) -> usize {
        self.polys.len() - 1
    }

    pub fn poly(&self, n: usize) -> &XPoly {
        &self.polys[n]
    }

    pub fn eval(&self, n: usize, x: &Rat) -> Rat {
        self.polys[n].eval(x)
    }
}

/// Engine configuration. The one knob is a deliberate fault injection used by
/// the verification suite to prove its checks are not tautologies: dropping
/// the (1-k) from the two-power rescales every member by 2^{rmk}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum TwoPower {
    Standard,
    DroppedK,
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Engine {
    two_power: TwoPower,
}

impl Engine {
    pub(crate) fn standard() -> Self {
        Engine {
            two_power: TwoPower::Standard,
        }
    }

    pub(crate) fn faulty() -> Self {
        Engine {
            two_power: TwoPower::DroppedK,
        }
    }

    fn two_exponent(&self, p: &FamilyParams) -> i64 {
        match self.two_power {
            TwoPower::Standard => p.two_exponent(),
            TwoPower::DroppedK => (p.r() as i64) * (p.m as i64),
        }
    }

    /// Generating-function coefficients up to t^order, polynomial in x.
    pub(crate) fn series(&self, p: &FamilyParams, order: usize) -> Result<TSeries<XPoly>> {
        let internal = order + p.t_exponent();
        let den = denominator_series(p, internal)?;
        let carrier =
            TSeries::exp_linear(&XPoly::new(vec![Rat::zero(), p.log_c.clone()]), internal);
        let num = TSeries::<XPoly>::t_power(p.t_exponent(), internal)
            .mul(&carrier)
            .mul_rat(&two_pow(self.two_exponent(p)));
        let q = num.div(&den.lift())?;
        Ok(q.truncate(order))
    }

    pub(crate) fn polynomials(&self, p: &FamilyParams, order: usize) -> Result<PolySequence> {
        let f = self.series(p, order)?;
        let polys = (0..=order).map(|n| extract_poly(&f, n)).collect();
        Ok(PolySequence {
            params: p.clone(),
            polys,
        })
    }

    /// Numbers M_n(0) via the scalar pipeline (the carrier drops out at x=0).
    pub(crate) fn numbers(&self, p: &FamilyParams, order: usize) -> Result<Vec<Rat>> {
        let internal = order + p.t_exponent();
        let den = denominator_series(p, internal)?;
        let num = TSeries::<Rat>::t_power(p.t_exponent(), internal)
            .mul_rat(&two_pow(self.two_exponent(p)));
        let q = num.div(&den)?.truncate(order);
        Ok((0..=order).map(|n| q.coeff(n) * factorial_rat(n)).collect())
    }
}

/// prod_{i<r} (alpha_i b^t - a^t sum_{l<m} t^l/l!) up to t^order.
/// The empty product (r = 0) is the constant series 1.
pub fn denominator_series(p: &FamilyParams, order: usize) -> Result<TSeries<Rat>> {
    let exp_b = TSeries::exp_linear(&p.log_b, order);
    let exp_a_partial = TSeries::exp_linear(&p.log_a, order).mul(&partial_exp_sum(p.m, order));
    let mut acc = TSeries::<Rat>::one(order);
    for alpha in &p.alphas {
        let factor = exp_b.mul_rat(alpha).sub(&exp_a_partial);
        acc = acc.mul(&factor);
    }
    Ok(acc)
}

/// Generating-function coefficients F_0..F_order with F_n = M_n(x)/n!.
///
/// Fails with the pole order when the numerator power t^{rkm} cannot absorb
/// the denominator valuation, and with a zero-denominator error when the
/// product vanishes identically at this order.
pub fn family_series(p: &FamilyParams, order: usize) -> Result<TSeries<XPoly>> {
    Engine::standard().series(p, order)
}

/// M_0(x)..M_order(x).
pub fn family_polynomials(p: &FamilyParams, order: usize) -> Result<PolySequence> {
    Engine::standard().polynomials(p, order)
}

/// M_0(0)..M_order(0), computed on the scalar path (no polynomial carrier).
pub fn family_numbers(p: &FamilyParams, order: usize) -> Result<Vec<Rat>> {
    Engine::standard().numbers(p, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{binomial_rat, int, rat};

    pub(crate) fn bernoulli_params() -> FamilyParams {
        FamilyParams::new(1, 1, vec![int(1)], int(0), int(1), int(1)).unwrap()
    }

    /// Independent Bernoulli polynomials: numbers by the C(n+1,j) recurrence,
    /// polynomials by the binomial shift.
    fn bernoulli_poly_oracle(n_max: usize) -> Vec<XPoly> {
        let mut numbers: Vec<Rat> = vec![int(1)];
        for n in 1..=n_max {
            let mut acc = Rat::zero();
            for (j, bj) in numbers.iter().enumerate() {
                acc += binomial_rat(n + 1, j) * bj;
            }
            numbers.push(-acc / binomial_rat(n + 1, n));
        }
        (0..=n_max)
            .map(|n| {
                let mut coeffs = vec![Rat::zero(); n + 1];
                for (k, bk) in numbers.iter().take(n + 1).enumerate() {
                    coeffs[n - k] = binomial_rat(n, k) * bk;
                }
                XPoly::new(coeffs)
            })
            .collect()
    }

    #[test]
    fn denominator_examples() {
        // e^t - 1
        let p = bernoulli_params();
        let d = denominator_series(&p, 4).unwrap();
        assert_eq!(
            d.coeffs().to_vec(),
            vec![int(0), int(1), rat(1, 2), rat(1, 6), rat(1, 24)]
        );
        // e^t - 1 - t (m = 2)
        let p = FamilyParams::new(1, 2, vec![int(1)], int(0), int(1), int(1)).unwrap();
        let d = denominator_series(&p, 4).unwrap();
        assert_eq!(
            d.coeffs().to_vec(),
            vec![int(0), int(0), rat(1, 2), rat(1, 6), rat(1, 24)]
        );
        // (e^t - 1)^2 starts 0, 0, 1, 1, 7/12
        let p = FamilyParams::new(1, 1, vec![int(1), int(1)], int(0), int(1), int(1)).unwrap();
        let d = denominator_series(&p, 4).unwrap();
        assert_eq!(
            d.coeffs().to_vec(),
            vec![int(0), int(0), int(1), int(1), rat(7, 12)]
        );
    }

    #[test]
    fn bernoulli_polynomials_match_recurrence_oracle() {
        let n = 12;
        let seq = family_polynomials(&bernoulli_params(), n).unwrap();
        let oracle = bernoulli_poly_oracle(n);
        for i in 0..=n {
            assert_eq!(seq.poly(i), &oracle[i], "B_{i}");
        }
    }

    #[test]
    fn series_coefficients_are_members_over_factorials() {
        let f = family_series(&bernoulli_params(), 2).unwrap();
        assert_eq!(f.coeff(0), &XPoly::one());
        assert_eq!(f.coeff(1), &XPoly::new(vec![rat(-1, 2), int(1)]));
        assert_eq!(
            f.coeff(2),
            &XPoly::new(vec![rat(1, 12), rat(-1, 2), rat(1, 2)])
        );
    }

    #[test]
    fn truncated_denominator_family_has_constant_term_m_factorial() {
        // m = 2: denominator t^2/2 + ..., numerator t^2, so M_0 = 2.
        let p = FamilyParams::new(1, 2, vec![int(1)], int(0), int(1), int(1)).unwrap();
        let f = family_series(&p, 3).unwrap();
        assert_eq!(f.coeff(0), &XPoly::constant(int(2)));
    }

    #[test]
    fn pole_is_reported_with_its_order() {
        // k = 0 strips the t power while the denominator still vanishes at 0.
        let p = FamilyParams::new(0, 1, vec![int(1)], int(0), int(1), int(1)).unwrap();
        assert_eq!(family_series(&p, 4), Err(Error::Pole { order: 1 }));
        // alpha = 1 with log a = log b kills the factor identically.
        let p = FamilyParams::new(1, 1, vec![int(1)], int(1), int(1), int(1)).unwrap();
        assert_eq!(family_series(&p, 4), Err(Error::ZeroDenominator));
    }

    #[test]
    fn euler_type_member_and_sign() {
        // k=0, alpha=(-1): 2 e^{xt}/(-e^t - 1) = -(2/(e^t+1)) e^{xt},
        // so M_1(x) = -(x - 1/2).
        let p = FamilyParams::new(0, 1, vec![int(-1)], int(0), int(1), int(1)).unwrap();
        let seq = family_polynomials(&p, 3).unwrap();
        assert_eq!(seq.poly(0), &XPoly::constant(int(-1)));
        assert_eq!(seq.poly(1), &XPoly::new(vec![rat(1, 2), int(-1)]));
    }

    #[test]
    fn numbers_agree_with_polynomials_at_zero_and_ignore_log_c() {
        let samples = [
            FamilyParams::new(1, 2, vec![int(2), rat(1, 2)], int(0), int(1), rat(3, 2)).unwrap(),
            FamilyParams::new(0, 1, vec![int(-1), int(3)], int(1), int(-1), int(2)).unwrap(),
            FamilyParams::new(2, 1, vec![int(1)], rat(1, 2), int(1), int(1)).unwrap(),
        ];
        for p in &samples {
            let numbers = family_numbers(p, 8).unwrap();
            let seq = family_polynomials(p, 8).unwrap();
            for n in 0..=8 {
                assert_eq!(numbers[n], seq.eval(n, &Rat::zero()), "{p} at n={n}");
            }
            let mut q = p.clone();
            q.log_c = rat(-7, 3);
            assert_eq!(
                family_numbers(&q, 8).unwrap(),
                numbers,
                "log c must not matter"
            );
        }
    }

    #[test]
    fn empty_alpha_list_gives_bare_numerator() {
        let p = FamilyParams::new(1, 2, vec![], int(0), int(1), int(1)).unwrap();
        let numbers = family_numbers(&p, 4).unwrap();
        assert_eq!(numbers, vec![int(1), int(0), int(0), int(0), int(0)]);
        let seq = family_polynomials(&p, 3).unwrap();
        // pure carrier: M_n(x) = (x log c)^n
        assert_eq!(
            seq.poly(3),
            &XPoly::new(vec![int(0), int(0), int(0), int(1)])
        );
    }

    #[test]
    fn degree_bound_and_degree_growth() {
        let p = FamilyParams::new(1, 2, vec![int(2), int(1)], int(0), int(1), rat(2, 3)).unwrap();
        let seq = family_polynomials(&p, 10).unwrap();
        for n in 0..=10 {
            assert!(seq.poly(n).degree().unwrap_or(0) <= n);
            if n > 0 && !p.log_c.is_zero() {
                let d = seq.poly(n).degree().unwrap_or(0) as i64;
                let d_prev = seq.poly(n - 1).degree().unwrap_or(0) as i64;
                assert!(d - d_prev <= 1);
            }
        }
        // log c = 0 collapses every member to a constant.
        let mut q = p.clone();
        q.log_c = Rat::zero();
        let seq = family_polynomials(&q, 6).unwrap();
        for n in 0..=6 {
            assert!(seq.poly(n).degree().unwrap_or(0) == 0 || seq.poly(n).is_zero());
        }
    }

    #[test]
    fn x_derivative_ladders_down_with_log_c() {
        let samples = [
            FamilyParams::new(1, 1, vec![int(1)], int(0), int(1), int(1)).unwrap(),
            FamilyParams::new(1, 2, vec![int(3), rat(-1, 2)], rat(1, 2), int(1), rat(5, 3))
                .unwrap(),
            FamilyParams::new(0, 2, vec![int(2), int(-2)], int(0), int(2), int(-1)).unwrap(),
        ];
        for p in &samples {
            let seq = family_polynomials(p, 9).unwrap();
            for n in 1..=9 {
                let lhs = seq.poly(n).derivative();
                let rhs = seq.poly(n - 1).mul_rat(&(&p.log_c * int(n as i64)));
                assert_eq!(lhs, rhs, "{p} at n={n}");
            }
        }
    }

    #[test]
    fn faulty_engine_rescales_by_two_pow_rmk() {
        let p = bernoulli_params();
        let good = Engine::standard().polynomials(&p, 4).unwrap();
        let bad = Engine::faulty().polynomials(&p, 4).unwrap();
        for n in 0..=4 {
            assert_eq!(bad.poly(n), &good.poly(n).mul_rat(&int(2)));
        }
    }

    #[test]
    fn base_collision_is_flagged_not_fatal() {
        let p = FamilyParams::new(1, 1, vec![int(2)], int(1), int(1), int(1)).unwrap();
        assert!(p.base_collision());
        assert!(family_polynomials(&p, 4).is_ok());
    }
}
