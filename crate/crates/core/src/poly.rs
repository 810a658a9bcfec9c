//! Dense univariate polynomials over exact rationals.
//!
//! Coefficients are stored lowest degree first with no trailing zeros, so the
//! zero polynomial is the empty vector and equality is structural.

use crate::rational::{int, Rat};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XPoly {
    coeffs: Vec<Rat>,
}

impl XPoly {
    /// Builds from lowest-first coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    pub fn zero() -> Self {
        XPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        XPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        XPoly::new(vec![c])
    }

    /// The monomial x.
    pub fn x() -> Self {
        XPoly::monomial(1)
    }

    /// The monomial x^d.
    pub fn monomial(d: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); d + 1];
        coeffs[d] = Rat::one();
        XPoly { coeffs }
    }

    /// Integer coefficients, lowest degree first (test and CLI convenience).
    pub fn from_i64(coeffs: &[i64]) -> Self {
        XPoly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of x^i, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn mul_rat(&self, s: &Rat) -> XPoly {
        if s.is_zero() {
            return XPoly::zero();
        }
        XPoly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// p(c0 + c1 x), by Horner over polynomials.
    pub fn substitute_linear(&self, c0: &Rat, c1: &Rat) -> XPoly {
        let arg = XPoly::new(vec![c0.clone(), c1.clone()]);
        let mut acc = XPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &arg) + &XPoly::constant(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> XPoly {
        if self.coeffs.len() <= 1 {
            return XPoly::zero();
        }
        XPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * int(i as i64 + 1))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> XPoly {
        let mut acc = XPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl<'a> Add for &'a XPoly {
    type Output = XPoly;
    fn add(self, rhs: &'a XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub for &'a XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &'a XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Mul for &'a XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &'a XPoly) -> XPoly {
        if self.is_zero() || rhs.is_zero() {
            return XPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        XPoly::new(coeffs)
    }
}

impl fmt::Display for XPoly {
    /// Ascending-degree rendering: "1/6 - x + x^2"; zero prints "0".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = if c < &Rat::zero() { -c } else { c.clone() };
            if first {
                if c < &Rat::zero() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < &Rat::zero() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_mag = mag.is_one();
            if i == 0 || !unit_mag {
                write!(f, "{mag}")?;
            }
            if i == 1 {
                write!(f, "x")?;
            } else if i > 1 {
                write!(f, "x^{i}")?;
            }
        }
        Ok(())
    }
}
