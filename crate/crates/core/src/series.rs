//! Formal truncated power series with exact coefficients.
//!
//! A `TSeries` of order N keeps exactly the coefficients of t^0..t^N
//! (inclusive, so N+1 entries). Binary operations require equal orders and
//! never re-truncate silently; callers pick orders up front. Division is the
//! only fallible operation: it strips the common valuation and reports a pole
//! when the numerator vanishes to lower order than the denominator.

use crate::error::{Error, Result};
use crate::poly::XPoly;
use crate::rational::{factorial_rat, int, Rat};

/// Coefficient ring for series: exact rationals or polynomials in x.
pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Scalar action of the rationals.
    fn mul_rat(&self, s: &Rat) -> Self;
    /// Multiplicative inverse where it exists in the ring.
    fn inv(&self) -> Option<Self>;
}

impl Ring for Rat {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn mul_rat(&self, s: &Rat) -> Self {
        self * s
    }
    fn inv(&self) -> Option<Self> {
        if num_traits::Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Ring for XPoly {
    fn zero() -> Self {
        XPoly::zero()
    }
    fn one() -> Self {
        XPoly::one()
    }
    fn is_zero(&self) -> bool {
        XPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn mul_rat(&self, s: &Rat) -> Self {
        XPoly::mul_rat(self, s)
    }
    /// Only nonzero constants are invertible.
    fn inv(&self) -> Option<Self> {
        match self.degree() {
            Some(0) => Some(XPoly::constant(self.coeff(0).recip())),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TSeries<C: Ring> {
    coeffs: Vec<C>,
}

impl<C: Ring> TSeries<C> {
    /// Wraps coefficients t^0..t^N; the vector length fixes the order.
    pub fn new(coeffs: Vec<C>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "series needs at least the t^0 coefficient"
        );
        TSeries { coeffs }
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize) -> C) -> Self {
        TSeries::new((0..=order).map(&mut f).collect())
    }

    pub fn zero(order: usize) -> Self {
        TSeries::from_fn(order, |_| C::zero())
    }

    pub fn one(order: usize) -> Self {
        TSeries::from_fn(order, |j| if j == 0 { C::one() } else { C::zero() })
    }

    /// t^d truncated at `order` (identically zero when d > order).
    pub fn t_power(d: usize, order: usize) -> Self {
        TSeries::from_fn(order, |j| if j == d { C::one() } else { C::zero() })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, j: usize) -> &C {
        &self.coeffs[j]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Index of the first nonzero coefficient; None when all retained
    /// coefficients vanish.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    fn assert_same_order(&self, other: &Self, op: &str) {
        assert_eq!(
            self.order(),
            other.order(),
            "series {op} requires equal orders"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_order(other, "addition");
        TSeries::from_fn(self.order(), |j| self.coeffs[j].add(&other.coeffs[j]))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_order(other, "subtraction");
        TSeries::from_fn(self.order(), |j| self.coeffs[j].sub(&other.coeffs[j]))
    }

    pub fn neg(&self) -> Self {
        TSeries::from_fn(self.order(), |j| self.coeffs[j].neg())
    }

    /// Cauchy product at the shared order.
    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_order(other, "multiplication");
        let n = self.order();
        let mut out = vec![C::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        TSeries::new(out)
    }

    pub fn mul_rat(&self, s: &Rat) -> Self {
        TSeries::from_fn(self.order(), |j| self.coeffs[j].mul_rat(s))
    }

    /// a(t) -> a(sigma * t): coefficient j picks up sigma^j.
    pub fn scale_var(&self, sigma: &Rat) -> Self {
        let mut power = Rat::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c.mul_rat(&power));
            power *= sigma;
        }
        TSeries::new(out)
    }

    /// Quotient with valuation handling. The result order drops by the
    /// denominator valuation v; the numerator must vanish at least to order v
    /// or the pole order is reported.
    pub fn div(&self, den: &Self) -> Result<Self> {
        self.assert_same_order(den, "division");
        let v = den.valuation().ok_or(Error::ZeroDenominator)?;
        let num_val = self.valuation().unwrap_or(self.order() + 1);
        if num_val < v {
            return Err(Error::Pole { order: v - num_val });
        }
        let n = self.order() - v;
        let lead_inv = den.coeffs[v].inv().ok_or_else(|| {
            Error::Singular("leading denominator coefficient not invertible".into())
        })?;
        let mut q: Vec<C> = Vec::with_capacity(n + 1);
        for j in 0..=n {
            let mut acc = self.coeffs[v + j].clone();
            for (i, qi) in q.iter().enumerate() {
                acc = acc.sub(&den.coeffs[v + j - i].mul(qi));
            }
            q.push(acc.mul(&lead_inv));
        }
        Ok(TSeries::new(q))
    }

    /// Repeated-multiplication power at fixed order.
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = TSeries::one(self.order());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot truncate upward");
        TSeries::new(self.coeffs[..=order].to_vec())
    }

    /// exp(lambda * t) = sum lambda^j t^j / j!.
    pub fn exp_linear(lambda: &C, order: usize) -> Self {
        let mut out = Vec::with_capacity(order + 1);
        out.push(C::one());
        for j in 1..=order {
            let prev = &out[j - 1];
            out.push(prev.mul(lambda).mul_rat(&int(j as i64).recip()));
        }
        TSeries::new(out)
    }
}

impl TSeries<Rat> {
    /// Lifts scalar coefficients to constant polynomials.
    pub fn lift(&self) -> TSeries<XPoly> {
        TSeries::from_fn(self.order(), |j| XPoly::constant(self.coeffs[j].clone()))
    }
}

/// n! times the t^n coefficient: the degree-n member of the polynomial family
/// generated by `f`.
pub fn extract_poly(f: &TSeries<XPoly>, n: usize) -> XPoly {
    assert!(n <= f.order(), "coefficient index beyond series order");
    f.coeff(n).mul_rat(&factorial_rat(n))
}

/// sum_{l < m} t^l / l!, the truncated exponential the family denominators
/// subtract.
pub fn partial_exp_sum(m: u32, order: usize) -> TSeries<Rat> {
    TSeries::from_fn(order, |j| {
        if (j as u32) < m {
            factorial_rat(j).recip()
        } else {
            Rat::zero()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, two_pow};

    fn exp_t(order: usize) -> TSeries<Rat> {
        TSeries::exp_linear(&int(1), order)
    }

    /// Independent Bernoulli numbers from sum_{j<=n} C(n+1,j) B_j = [n=0].
    fn bernoulli_numbers(n_max: usize) -> Vec<Rat> {
        let mut b: Vec<Rat> = vec![Rat::one()];
        for n in 1..=n_max {
            let mut acc = Rat::zero();
            for (j, bj) in b.iter().enumerate() {
                acc += crate::rational::binomial_rat(n + 1, j) * bj;
            }
            b.push(-acc / crate::rational::binomial_rat(n + 1, n));
        }
        b
    }

    #[test]
    fn mul_matches_truncation() {
        let a = TSeries::new(vec![int(1), int(1), int(0), int(0)]); // 1 + t
        let b = TSeries::new(vec![int(1), int(-1), int(0), int(0)]); // 1 - t
        assert_eq!(
            a.mul(&b),
            TSeries::new(vec![int(1), int(0), int(-1), int(0)])
        );
    }

    #[test]
    fn exp_times_exp_negative_is_one() {
        let e = exp_t(6);
        let e_neg = TSeries::exp_linear(&int(-1), 6);
        assert_eq!(e.mul(&e_neg), TSeries::one(6));
    }

    #[test]
    #[should_panic(expected = "equal orders")]
    fn mixed_orders_panic() {
        let a = TSeries::<Rat>::one(3);
        let b = TSeries::<Rat>::one(4);
        let _ = a.add(&b);
    }

    #[test]
    fn division_strips_valuation_and_matches_bernoulli_oracle() {
        let n = 8;
        let num = TSeries::<Rat>::t_power(1, n);
        let den = exp_t(n).sub(&TSeries::one(n));
        let q = num.div(&den).unwrap();
        assert_eq!(q.order(), n - 1);
        let b = bernoulli_numbers(n - 1);
        for (j, bj) in b.iter().enumerate() {
            assert_eq!(q.coeff(j), &(bj / factorial_rat(j)), "t^{j} coefficient");
        }
    }

    #[test]
    fn division_reports_poles_and_zero_denominators() {
        let one = TSeries::<Rat>::one(5);
        let den = exp_t(5).sub(&TSeries::one(5)); // valuation 1
        assert_eq!(one.div(&den), Err(Error::Pole { order: 1 }));
        assert_eq!(one.div(&TSeries::zero(5)), Err(Error::ZeroDenominator));
        // 0 / anything-nonzero is fine and drops order by the valuation
        let z = TSeries::<Rat>::zero(5).div(&den).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.order(), 4);
    }

    #[test]
    fn exp_linear_examples() {
        let s = TSeries::<Rat>::exp_linear(&int(-2), 2);
        assert_eq!(s, TSeries::new(vec![int(1), int(-2), int(2)]));
        assert_eq!(TSeries::<Rat>::exp_linear(&int(0), 3), TSeries::one(3));
    }

    #[test]
    fn scale_var_scales_coefficients_geometrically() {
        let e = exp_t(5);
        assert_eq!(e.scale_var(&int(2)), TSeries::exp_linear(&int(2), 5));
        assert_eq!(e.scale_var(&int(0)), TSeries::one(5));
        // 2^j on coefficient j
        let s = TSeries::new(vec![int(3), int(5), int(7)]);
        assert_eq!(
            s.scale_var(&int(2)).coeffs().to_vec(),
            vec![int(3), int(10), int(28)]
        );
        let _ = two_pow(0);
    }

    #[test]
    fn extract_poly_recovers_family_members() {
        // t e^{xt} / (e^t - 1) at n = 1 gives B_1(x) = x - 1/2.
        let n = 5;
        let num = TSeries::<XPoly>::t_power(1, n).mul(&TSeries::exp_linear(&XPoly::x(), n));
        let den = exp_t(n).sub(&TSeries::one(n)).lift();
        let f = num.div(&den).unwrap();
        assert_eq!(extract_poly(&f, 1), XPoly::new(vec![rat(-1, 2), int(1)]));
    }

    #[test]
    fn partial_exp_sum_truncates_exponential() {
        let s = partial_exp_sum(3, 5);
        assert_eq!(
            s.coeffs().to_vec(),
            vec![int(1), int(1), rat(1, 2), int(0), int(0), int(0)]
        );
        assert_eq!(partial_exp_sum(1, 3), TSeries::one(3));
    }

    #[test]
    fn polynomial_coefficient_division() {
        // (x * t) / (x + t) should fail: leading coefficient x is not a unit.
        let num = TSeries::new(vec![XPoly::zero(), XPoly::x(), XPoly::zero()]);
        let den = TSeries::new(vec![XPoly::x(), XPoly::one(), XPoly::zero()]);
        assert!(matches!(num.div(&den), Err(Error::Singular(_))));
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_rat() -> impl Strategy<Value = Rat> {
            (-9i64..=9, 1i64..=9).prop_map(|(p, q)| rat(p, q))
        }

        fn arb_series(order: usize) -> impl Strategy<Value = TSeries<Rat>> {
            proptest::collection::vec(arb_rat(), order + 1).prop_map(TSeries::new)
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn ring_axioms(a in arb_series(9), b in arb_series(9), c in arb_series(9)) {
                prop_assert_eq!(a.add(&b), b.add(&a));
                prop_assert_eq!(a.mul(&b), b.mul(&a));
                prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
                prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
                prop_assert_eq!(a.add(&a.neg()), TSeries::zero(9));
                prop_assert_eq!(a.mul(&TSeries::one(9)), a.clone());
            }

            #[test]
            fn division_round_trips(q0 in arb_series(8), den in arb_series(8), v in 0usize..3) {
                // force valuation exactly v with a unit there
                let den = TSeries::from_fn(8, |j| {
                    if j < v { Rat::zero() }
                    else if j == v && den.coeff(j).is_zero() { Rat::one() }
                    else { den.coeff(j).clone() }
                });
                prop_assume!(den.valuation() == Some(v));
                let num = q0.mul(&den);
                let q = num.div(&den).unwrap();
                prop_assert_eq!(q, q0.truncate(8 - v));
            }

            #[test]
            fn scale_var_round_trips(a in arb_series(8), p in 1i64..=9, q in 1i64..=9) {
                let sigma = rat(p, q);
                prop_assert_eq!(a.scale_var(&sigma).scale_var(&sigma.recip()), a.clone());
            }

            #[test]
            fn exp_law(l1 in arb_rat(), l2 in arb_rat()) {
                let lhs = TSeries::<Rat>::exp_linear(&l1, 10).mul(&TSeries::exp_linear(&l2, 10));
                let rhs = TSeries::<Rat>::exp_linear(&(l1 + l2), 10);
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
