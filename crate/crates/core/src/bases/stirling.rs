//! Stirling numbers over arbitrary rational nodes.
//!
//! Second kind: x^n = sum_k S(n,k; nodes) (x; nodes)_k, obtained by exact
//! triangular conversion into the Newton basis (monic leading terms make the
//! system unit-triangular). First kind: (x; nodes)_n = sum_k s(n,k; nodes) x^k,
//! read off by expanding the product. Integer nodes 0,1,2,... recover the
//! ordinary (signed) Stirling numbers.

use super::{falling_factorial_poly, integer_nodes};
use crate::poly::XPoly;
use crate::rational::Rat;
use num_traits::Zero;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StirlingKind {
    FirstSigned,
    Second,
}

/// S(n, k; nodes) for k = 0..=n. Needs at least n nodes.
pub fn gen_stirling2_row(n: usize, nodes: &[Rat]) -> Vec<Rat> {
    assert!(nodes.len() >= n, "need {n} nodes, got {}", nodes.len());
    let mut coeffs = vec![Rat::zero(); n + 1];
    let mut rem = XPoly::monomial(n);
    for k in (0..=n).rev() {
        let c = rem.coeff(k);
        if !c.is_zero() {
            rem = &rem - &falling_factorial_poly(nodes, k).mul_rat(&c);
        }
        coeffs[k] = c;
    }
    debug_assert!(rem.is_zero(), "basis conversion must terminate exactly");
    coeffs
}

/// s(n, k; nodes) for k = 0..=n: coefficients of (x; nodes)_n.
pub fn gen_stirling1_row(n: usize, nodes: &[Rat]) -> Vec<Rat> {
    assert!(nodes.len() >= n, "need {n} nodes, got {}", nodes.len());
    let p = falling_factorial_poly(nodes, n);
    (0..=n).map(|k| p.coeff(k)).collect()
}

/// Single generalized Stirling number of either kind.
pub fn gen_stirling(kind: StirlingKind, n: usize, k: usize, nodes: &[Rat]) -> Rat {
    if k > n {
        return Rat::zero();
    }
    match kind {
        StirlingKind::Second => gen_stirling2_row(n, nodes).swap_remove(k),
        StirlingKind::FirstSigned => gen_stirling1_row(n, nodes).swap_remove(k),
    }
}

/// Ordinary Stirling number (signed for the first kind).
pub fn stirling(kind: StirlingKind, n: usize, k: usize) -> Rat {
    gen_stirling(kind, n, k, &integer_nodes(n))
}

/// Rows 0..=n of the ordinary triangle, row n listing k = 0..=n.
pub fn stirling_triangle(kind: StirlingKind, n: usize) -> Vec<Vec<Rat>> {
    let nodes = integer_nodes(n);
    (0..=n)
        .map(|i| match kind {
            StirlingKind::Second => gen_stirling2_row(i, &nodes[..i]),
            StirlingKind::FirstSigned => gen_stirling1_row(i, &nodes[..i]),
        })
        .collect()
}
