//! Exact-arithmetic engine for unified multiparameter Apostol-type polynomial
//! families, together with the combinatorial bases (generalized Stirling, Lah,
//! classical orthogonal polynomials) and identity checkers built on top of it.
//!
//! Everything is computed over arbitrary-precision rationals; an identity
//! either holds to exact zero residual at the requested truncation order or
//! the first mismatching coefficient is reported. Floating point appears
//! nowhere.
//!
//! The family is parameterized by (k, m, r, alphas, log a, log b, log c) where
//! the exponential bases a, b, c enter only through their formal logarithms,
//! kept as exact rationals (a = 1 maps to log 0, b = e to log 1). Rational
//! bases such as a = 2 are deliberately out of scope.

// The checkers are index-heavy double sums; keeping the loop variable in
// binomial(n, l) etc. mirrors the formulas better than iterator chains.
#![allow(clippy::needless_range_loop)]

pub mod bases;
pub mod error;
pub mod family;
pub mod identities;
pub mod poly;
pub mod rational;
pub mod reductions;
pub mod reference;
pub mod report;
pub mod series;

pub use error::{Error, Result};
pub use poly::XPoly;
pub use rational::Rat;
pub use series::TSeries;
