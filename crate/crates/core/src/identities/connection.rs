//! Connection formulas re-expanding the family over classical bases: Newton
//! falling factorials over arbitrary nodes (generalized Stirling numbers),
//! ordinary falling factorials, generalized Laguerre, Jacobi and Hermite
//! polynomials, and the Bleimann-Butzer-Hahn basis.
//!
//! Every formula is the monomial expansion of the family composed with the
//! expansion of x^l over the target basis, so the right sides are assembled
//! from the family numbers and the independently coded basis polynomials and
//! must reproduce the engine's polynomials exactly.

use crate::bases::bbh::{bbh_basis, FactorialMode};
use crate::bases::stirling::{gen_stirling1_row, gen_stirling2_row};
use crate::bases::{basis_poly, falling_factorial_poly, integer_nodes, MonomialBasis};
use crate::error::{Error, Result};
use crate::family::{Engine, FamilyParams};
use crate::poly::XPoly;
use crate::rational::{
    binomial_rat, factorial_rat, gen_binomial, int, pow_i64, rising_factorial, two_pow, Rat,
};
use crate::report::{compare_poly_members, compare_scalar_members, IdentityId, IdentityReport};

/// The degree-indexed expansion weights C(n, n-l) (log c)^l M_{n-l} shared by
/// every connection formula.
fn degree_weights(numbers: &[Rat], log_c: &Rat, n: usize) -> Vec<Rat> {
    (0..=n)
        .map(|l| binomial_rat(n, n - l) * pow_i64(log_c, l as i64) * &numbers[n - l])
        .collect()
}

/// Expansion over Newton falling factorials built on `nodes`:
///
///   M_n(x) = sum_j (x; nodes)_j
///            sum_{l=j}^n C(n, n-l) (log c)^l S(l, j; nodes) M_{n-l}.
///
/// The node sequence is free; any choice with at least `order` nodes works.
pub fn gen_stirling_22(
    params: &FamilyParams,
    nodes: &[Rat],
    order: usize,
) -> Result<IdentityReport> {
    gen_stirling_22_with(&Engine::standard(), params, nodes, order)
}

pub(crate) fn gen_stirling_22_with(
    eng: &Engine,
    params: &FamilyParams,
    nodes: &[Rat],
    order: usize,
) -> Result<IdentityReport> {
    if nodes.len() < order {
        return Err(Error::InvalidArgument(format!(
            "need at least {order} nodes, got {}",
            nodes.len()
        )));
    }
    let residual = stirling_residual(eng, params, nodes, order)?;
    let shown: Vec<String> = nodes.iter().take(4).map(|v| v.to_string()).collect();
    Ok(IdentityReport::from_residual(
        IdentityId::GenStirling22,
        format!("{params} nodes=({},...)", shown.join(",")),
        order,
        residual,
        vec![],
    ))
}

/// The same expansion over ordinary falling factorials (nodes 0, 1, 2, ...).
pub fn stirling_23(params: &FamilyParams, order: usize) -> Result<IdentityReport> {
    stirling_23_with(&Engine::standard(), params, order)
}

pub(crate) fn stirling_23_with(
    eng: &Engine,
    params: &FamilyParams,
    order: usize,
) -> Result<IdentityReport> {
    let residual = stirling_residual(eng, params, &integer_nodes(order), order)?;
    Ok(IdentityReport::from_residual(
        IdentityId::Stirling23,
        params.to_string(),
        order,
        residual,
        vec![],
    ))
}

fn stirling_residual(
    eng: &Engine,
    params: &FamilyParams,
    nodes: &[Rat],
    order: usize,
) -> Result<crate::report::Residual> {
    let seq = eng.polynomials(params, order)?;
    let numbers = eng.numbers(params, order)?;
    let stirling_rows: Vec<Vec<Rat>> = (0..=order).map(|l| gen_stirling2_row(l, nodes)).collect();
    let falling: Vec<XPoly> = (0..=order)
        .map(|j| falling_factorial_poly(nodes, j))
        .collect();
    let mut rhs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let w = degree_weights(&numbers, &params.log_c, n);
        let mut acc = XPoly::zero();
        for j in 0..=n {
            let mut inner = int(0);
            for l in j..=n {
                inner += &w[l] * &stirling_rows[l][j];
            }
            acc = &acc + &falling[j].mul_rat(&inner);
        }
        rhs.push(acc);
    }
    Ok(compare_poly_members(&seq.polys, &rhs))
}

/// Expansion over generalized Laguerre polynomials:
///
///   M_n(x) = sum_j sum_{l=j}^n (-1)^j l! C(n, n-l) (log c)^l
///            C(l+alpha, l-j) L_j^{(alpha)}(x) M_{n-l}.
pub fn laguerre_24(params: &FamilyParams, alpha: &Rat, order: usize) -> Result<IdentityReport> {
    laguerre_24_with(&Engine::standard(), params, alpha, order)
}

pub(crate) fn laguerre_24_with(
    eng: &Engine,
    params: &FamilyParams,
    alpha: &Rat,
    order: usize,
) -> Result<IdentityReport> {
    let seq = eng.polynomials(params, order)?;
    let numbers = eng.numbers(params, order)?;
    let basis: Vec<XPoly> = (0..=order)
        .map(|j| basis_poly(&MonomialBasis::Laguerre(alpha.clone()), j))
        .collect::<Result<_>>()?;
    let mut rhs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let w = degree_weights(&numbers, &params.log_c, n);
        let mut acc = XPoly::zero();
        for j in 0..=n {
            let sign = if j % 2 == 0 { int(1) } else { int(-1) };
            let mut inner = int(0);
            for l in j..=n {
                inner += &w[l] * factorial_rat(l) * gen_binomial(&(int(l as i64) + alpha), l - j);
            }
            acc = &acc + &basis[j].mul_rat(&(sign * inner));
        }
        rhs.push(acc);
    }
    let residual = compare_poly_members(&seq.polys, &rhs);
    Ok(IdentityReport::from_residual(
        IdentityId::Laguerre24,
        format!("{params} alpha={alpha}"),
        order,
        residual,
        vec![],
    ))
}

/// Expansion over Jacobi polynomials at the argument 1 - 2x:
///
///   M_n(x) = sum_j sum_{l=j}^n (-1)^j l! C(n, n-l) (log c)^l C(l+alpha, l-j)
///            (alpha+beta+2j+1) / (alpha+beta+j+1)_{l+1}
///            P_j^{(alpha,beta)}(1-2x) M_{n-l}.
pub fn jacobi_25(
    params: &FamilyParams,
    alpha: &Rat,
    beta: &Rat,
    order: usize,
) -> Result<IdentityReport> {
    jacobi_25_with(&Engine::standard(), params, alpha, beta, order)
}

pub(crate) fn jacobi_25_with(
    eng: &Engine,
    params: &FamilyParams,
    alpha: &Rat,
    beta: &Rat,
    order: usize,
) -> Result<IdentityReport> {
    let seq = eng.polynomials(params, order)?;
    let numbers = eng.numbers(params, order)?;
    let basis: Vec<XPoly> = (0..=order)
        .map(|j| basis_poly(&MonomialBasis::Jacobi(alpha.clone(), beta.clone()), j))
        .collect::<Result<_>>()?;
    let mut rhs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let w = degree_weights(&numbers, &params.log_c, n);
        let mut acc = XPoly::zero();
        for j in 0..=n {
            let sign = if j % 2 == 0 { int(1) } else { int(-1) };
            let front = alpha + beta + int(2 * j as i64 + 1);
            let mut inner = int(0);
            for l in j..=n {
                let pochhammer = rising_factorial(&(alpha + beta + int(j as i64 + 1)), l + 1);
                if num_traits::Zero::is_zero(&pochhammer) {
                    return Err(Error::Singular(format!(
                        "the Pochhammer factor (alpha+beta+j+1)_(l+1) vanishes at j={j}, l={l}"
                    )));
                }
                inner += &w[l] * factorial_rat(l) * gen_binomial(&(int(l as i64) + alpha), l - j)
                    / pochhammer;
            }
            acc = &acc + &basis[j].mul_rat(&(sign * &front * inner));
        }
        rhs.push(acc);
    }
    let residual = compare_poly_members(&seq.polys, &rhs);
    Ok(IdentityReport::from_residual(
        IdentityId::Jacobi25,
        format!("{params} alpha={alpha} beta={beta}"),
        order,
        residual,
        vec![],
    ))
}

/// Expansion over Hermite polynomials:
///
///   M_n(x) = sum_{j=0}^{[n/2]} sum_{l=2j}^n 2^{-l} C(n, n-l) C(l, 2j)
///            (2j)!/j! (log c)^l H_{l-2j}(x) M_{n-l}.
pub fn hermite_26(params: &FamilyParams, order: usize) -> Result<IdentityReport> {
    hermite_26_with(&Engine::standard(), params, order)
}

pub(crate) fn hermite_26_with(
    eng: &Engine,
    params: &FamilyParams,
    order: usize,
) -> Result<IdentityReport> {
    let seq = eng.polynomials(params, order)?;
    let numbers = eng.numbers(params, order)?;
    let basis: Vec<XPoly> = (0..=order)
        .map(|d| basis_poly(&MonomialBasis::Hermite, d))
        .collect::<Result<_>>()?;
    let mut rhs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let w = degree_weights(&numbers, &params.log_c, n);
        let mut acc = XPoly::zero();
        for j in 0..=n / 2 {
            let front = factorial_rat(2 * j) / factorial_rat(j);
            for l in 2 * j..=n {
                let c = &w[l] * two_pow(-(l as i64)) * binomial_rat(l, 2 * j) * &front;
                acc = &acc + &basis[l - 2 * j].mul_rat(&c);
            }
        }
        rhs.push(acc);
    }
    let residual = compare_poly_members(&seq.polys, &rhs);
    Ok(IdentityReport::from_residual(
        IdentityId::Hermite26,
        params.to_string(),
        order,
        residual,
        vec![],
    ))
}

/// Bleimann-Butzer-Hahn values from the m = 1, natural-base family:
///
///   p_n(x; k, r) = phi prod(alphas) X^{rk}
///                  sum_j s(r, j; 1/alphas) sum_l C(n,l) j^{n-l} M_l(Y),
///
/// with X = x/(1+ax), Y = (1+bx)/(1+ax) and phi the factorial normalization
/// shared with the basis itself. The identity holds under either reading of
/// the printed "1/rk!" as long as both sides use the same one, which is why
/// the mode is a parameter here.
#[allow(clippy::too_many_arguments)]
pub fn bbh_28(
    x: &Rat,
    a: &Rat,
    b: &Rat,
    k: u32,
    alphas: &[Rat],
    order: usize,
    mode: FactorialMode,
) -> Result<IdentityReport> {
    bbh_28_with(&Engine::standard(), x, a, b, k, alphas, order, mode)
}

#[allow(clippy::too_many_arguments)]
pub(crate) fn bbh_28_with(
    eng: &Engine,
    x: &Rat,
    a: &Rat,
    b: &Rat,
    k: u32,
    alphas: &[Rat],
    order: usize,
    mode: FactorialMode,
) -> Result<IdentityReport> {
    if alphas.is_empty() {
        return Err(Error::InvalidArgument(
            "the basis connection needs r >= 1".into(),
        ));
    }
    if alphas.iter().any(num_traits::Zero::is_zero) {
        return Err(Error::InvalidArgument(
            "the basis connection needs invertible alphas".into(),
        ));
    }
    let r = alphas.len();
    let lhs = bbh_basis(x, a, b, k, r as u32, order, mode)?;
    let denom = int(1) + a * x;
    if num_traits::Zero::is_zero(&denom) {
        return Err(Error::Singular(format!("1 + a x vanishes at x={x}, a={a}")));
    }
    let cap_x = x / &denom;
    let y = (int(1) + b * x) / &denom;
    let recip: Vec<Rat> = alphas.iter().map(|v| int(1) / v).collect();
    let srow = gen_stirling1_row(r, &recip);
    let params = FamilyParams::new(k, 1, alphas.to_vec(), int(0), int(1), int(1))?;
    let m_at_y: Vec<Rat> = eng
        .polynomials(&params, order)?
        .polys
        .iter()
        .map(|p| p.eval(&y))
        .collect();
    let alpha_prod = alphas.iter().fold(int(1), |acc, v| acc * v);
    let scale = mode.factor(r as u32, k) * alpha_prod * pow_i64(&cap_x, (r * k as usize) as i64);
    let mut rhs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut acc = int(0);
        for (j, s) in srow.iter().enumerate() {
            let mut inner = int(0);
            for l in 0..=n {
                inner += binomial_rat(n, l) * pow_i64(&int(j as i64), (n - l) as i64) * &m_at_y[l];
            }
            acc += s * inner;
        }
        rhs.push(acc * &scale);
    }
    let residual = compare_scalar_members(&lhs, &rhs);
    let alphas_shown: Vec<String> = alphas.iter().map(|v| v.to_string()).collect();
    Ok(IdentityReport::from_residual(
        IdentityId::Bbh28,
        format!(
            "x={x} a={a} b={b} k={k} alphas=({}) mode={mode}",
            alphas_shown.join(",")
        ),
        order,
        residual,
        vec![format!("factorial normalization: {mode} on both sides")],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::report::Verdict;

    fn pass(report: &IdentityReport) {
        assert_eq!(report.verdict, Verdict::Pass, "{}", report.render_line());
    }

    fn sample_params() -> FamilyParams {
        FamilyParams::new(1, 2, vec![int(2), rat(-1, 2)], int(0), int(1), int(1)).unwrap()
    }

    #[test]
    fn newton_expansion_over_fractional_nodes() {
        let nodes: Vec<Rat> = (0..8).map(|i| rat(i - 3, 2)).collect();
        pass(&gen_stirling_22(&sample_params(), &nodes, 7).unwrap());
    }

    #[test]
    fn newton_expansion_over_repeated_nodes() {
        let nodes = vec![int(1); 8];
        pass(&gen_stirling_22(&sample_params(), &nodes, 6).unwrap());
    }

    #[test]
    fn newton_expansion_needs_enough_nodes() {
        let nodes = vec![int(0); 3];
        assert!(matches!(
            gen_stirling_22(&sample_params(), &nodes, 6),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn ordinary_stirling_expansion() {
        pass(&stirling_23(&sample_params(), 8).unwrap());
        let p = FamilyParams::new(0, 1, vec![int(-2)], rat(1, 2), int(2), rat(3, 2)).unwrap();
        pass(&stirling_23(&p, 8).unwrap());
    }

    #[test]
    fn laguerre_expansion_at_two_weights() {
        pass(&laguerre_24(&sample_params(), &int(0), 7).unwrap());
        pass(&laguerre_24(&sample_params(), &rat(1, 2), 7).unwrap());
    }

    #[test]
    fn jacobi_expansion_at_two_weight_pairs() {
        pass(&jacobi_25(&sample_params(), &int(0), &int(0), 6).unwrap());
        pass(&jacobi_25(&sample_params(), &rat(1, 2), &rat(1, 3), 6).unwrap());
    }

    #[test]
    fn jacobi_rejects_a_vanishing_pochhammer() {
        // alpha + beta + j + 1 = 0 at j = 0 makes the 0th factor vanish.
        let err = jacobi_25(&sample_params(), &int(-3), &int(2), 4);
        assert!(matches!(err, Err(Error::Singular(_))));
    }

    #[test]
    fn hermite_expansion() {
        pass(&hermite_26(&sample_params(), 8).unwrap());
        let p = FamilyParams::new(2, 1, vec![int(3)], int(0), int(1), int(2)).unwrap();
        pass(&hermite_26(&p, 8).unwrap());
    }

    #[test]
    fn bbh_connection_in_both_modes() {
        let alphas = [int(2), int(-3)];
        for mode in [FactorialMode::MkFact, FactorialMode::MTimesKFact] {
            let report = bbh_28(&rat(1, 2), &int(1), &int(2), 2, &alphas, 6, mode).unwrap();
            pass(&report);
        }
    }

    #[test]
    fn bbh_connection_at_k_zero_and_one() {
        pass(
            &bbh_28(
                &int(1),
                &int(1),
                &int(1),
                1,
                &[int(2)],
                6,
                FactorialMode::MkFact,
            )
            .unwrap(),
        );
        pass(
            &bbh_28(
                &rat(2, 3),
                &rat(1, 2),
                &int(-1),
                0,
                &[int(-2)],
                6,
                FactorialMode::MkFact,
            )
            .unwrap(),
        );
    }

    #[test]
    fn bbh_connection_validates_input() {
        assert!(matches!(
            bbh_28(&int(1), &int(1), &int(1), 1, &[], 4, FactorialMode::MkFact),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            bbh_28(
                &int(1),
                &int(1),
                &int(1),
                1,
                &[int(0)],
                4,
                FactorialMode::MkFact
            ),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            bbh_28(
                &int(-1),
                &int(1),
                &int(1),
                1,
                &[int(2)],
                4,
                FactorialMode::MkFact
            ),
            Err(Error::Singular(_))
        ));
    }
}
