//! Polynomial bases used by the connection formulas: Newton-type falling
//! factorials over arbitrary rational nodes, the classical orthogonal
//! families, and the expansion of plain monomials in each of them.

pub mod bbh;
pub mod lah;
pub mod orthopoly;
pub mod stirling;

use crate::error::{Error, Result};
use crate::poly::XPoly;
use crate::rational::{
    binomial_rat, factorial_rat, gen_binomial, int, rising_factorial, two_pow, Rat,
};
use num_traits::Zero;

/// (x; nodes)_j = prod_{i<j} (x - nodes[i]); the empty product is 1.
pub fn falling_factorial_poly(nodes: &[Rat], j: usize) -> XPoly {
    assert!(j <= nodes.len(), "falling factorial needs {j} nodes");
    let mut acc = XPoly::one();
    for node in &nodes[..j] {
        acc = &acc * &XPoly::new(vec![-node, int(1)]);
    }
    acc
}

/// Nodes 0, 1, 2, ... giving the ordinary falling factorial.
pub fn integer_nodes(len: usize) -> Vec<Rat> {
    (0..len).map(|i| int(i as i64)).collect()
}

/// A target basis for expanding monomials.
#[derive(Debug, Clone, PartialEq)]
pub enum MonomialBasis {
    /// Newton falling factorials over the given nodes.
    GenFalling(Vec<Rat>),
    /// Ordinary falling factorials (nodes 0,1,2,...).
    Falling,
    /// Generalized Laguerre L^(alpha).
    Laguerre(Rat),
    /// Jacobi P^(alpha,beta) evaluated at 1 - 2x.
    Jacobi(Rat, Rat),
    /// Physicists' Hermite.
    Hermite,
}

/// The basis element of index j, in the variable x (Jacobi already shifted).
pub fn basis_poly(basis: &MonomialBasis, j: usize) -> Result<XPoly> {
    match basis {
        MonomialBasis::GenFalling(nodes) => {
            if j > nodes.len() {
                return Err(Error::InvalidArgument(format!(
                    "need {j} nodes, got {}",
                    nodes.len()
                )));
            }
            Ok(falling_factorial_poly(nodes, j))
        }
        MonomialBasis::Falling => Ok(falling_factorial_poly(&integer_nodes(j), j)),
        MonomialBasis::Laguerre(alpha) => Ok(orthopoly::laguerre(j, alpha)),
        MonomialBasis::Jacobi(alpha, beta) => {
            Ok(orthopoly::jacobi(j, alpha, beta)?.substitute_linear(&int(1), &int(-2)))
        }
        MonomialBasis::Hermite => Ok(orthopoly::hermite(j)),
    }
}

/// Coefficients d_0..d_l with x^l = sum_j d_j * basis_j(x), each from the
/// closed form for its basis (not by linear solving), so the reconstruction
/// identity is a genuine check.
pub fn monomial_expand(l: usize, basis: &MonomialBasis) -> Result<Vec<Rat>> {
    match basis {
        MonomialBasis::GenFalling(nodes) => {
            if l > nodes.len() {
                return Err(Error::InvalidArgument(format!(
                    "need {l} nodes, got {}",
                    nodes.len()
                )));
            }
            Ok(stirling::gen_stirling2_row(l, nodes))
        }
        MonomialBasis::Falling => Ok(stirling::gen_stirling2_row(l, &integer_nodes(l))),
        MonomialBasis::Laguerre(alpha) => {
            let lf = factorial_rat(l);
            Ok((0..=l)
                .map(|j| {
                    let sign = if j % 2 == 0 { int(1) } else { int(-1) };
                    sign * &lf * gen_binomial(&(alpha + int(l as i64)), l - j)
                })
                .collect())
        }
        MonomialBasis::Jacobi(alpha, beta) => {
            let lf = factorial_rat(l);
            let ab = alpha + beta;
            (0..=l)
                .map(|j| {
                    let rising = rising_factorial(&(&ab + int(j as i64 + 1)), l + 1);
                    if rising.is_zero() {
                        return Err(Error::Singular(format!(
                            "vanishing Pochhammer factor at alpha+beta={ab}, j={j}, l={l}"
                        )));
                    }
                    let sign = if j % 2 == 0 { int(1) } else { int(-1) };
                    Ok(sign
                        * &lf
                        * gen_binomial(&(alpha + int(l as i64)), l - j)
                        * (&ab + int(2 * j as i64 + 1))
                        / rising)
                })
                .collect()
        }
        MonomialBasis::Hermite => {
            let mut d = vec![Rat::zero(); l + 1];
            for i in 0..=(l / 2) {
                let j = l - 2 * i;
                d[j] = two_pow(-(l as i64)) * binomial_rat(l, 2 * i) * factorial_rat(2 * i)
                    / factorial_rat(i);
            }
            Ok(d)
        }
    }
}
