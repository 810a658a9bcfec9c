//! Structural identities in the polynomial argument: argument addition, the
//! shift that folds c into the bases, the monomial expansion over the family
//! numbers, reflection through reciprocal alphas, and the convolution /
//! multinomial laws that split the alpha list.
//!
//! The left side of every check is the engine family with an exact argument
//! substitution; the right side is rebuilt from scratch out of binomials,
//! powers of log c and other engine runs with different parameters, so a
//! bookkeeping error in any one ingredient surfaces as a nonzero residual.

use crate::error::{Error, Result};
use crate::family::{Engine, FamilyParams};
use crate::poly::XPoly;
use crate::rational::{binomial_rat, factorial_rat, int, pow_i64, Rat};
use crate::report::{
    compare_poly_members, compare_scalar_members, IdentityId, IdentityReport, Residual,
};

/// M_n(x + y) = sum_l C(n,l) x^{n-l} (log c)^{n-l} M_l(y).
pub fn add_11(params: &FamilyParams, y: &Rat, order: usize) -> Result<IdentityReport> {
    add_11_with(&Engine::standard(), params, y, order)
}

pub(crate) fn add_11_with(
    eng: &Engine,
    params: &FamilyParams,
    y: &Rat,
    order: usize,
) -> Result<IdentityReport> {
    let seq = eng.polynomials(params, order)?;
    let lhs: Vec<XPoly> = seq
        .polys
        .iter()
        .map(|p| p.substitute_linear(y, &int(1)))
        .collect();
    let at_y: Vec<Rat> = seq.polys.iter().map(|p| p.eval(y)).collect();
    let mut rhs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut acc = XPoly::zero();
        for l in 0..=n {
            let c = binomial_rat(n, l) * pow_i64(&params.log_c, (n - l) as i64) * &at_y[l];
            acc = &acc + &XPoly::monomial(n - l).mul_rat(&c);
        }
        rhs.push(acc);
    }
    let residual = compare_poly_members(&lhs, &rhs);
    Ok(IdentityReport::from_residual(
        IdentityId::Add11,
        format!("{params} y={y}"),
        order,
        residual,
        vec![],
    ))
}

/// M_n(x + r) for bases (a, b, c) equals M_n(x) for bases (a/c, b/c, c):
/// the carrier surplus c^{rt} cancels one power of c^t in every denominator
/// factor.
pub fn shift_12(params: &FamilyParams, order: usize) -> Result<IdentityReport> {
    shift_12_with(&Engine::standard(), params, order)
}

pub(crate) fn shift_12_with(
    eng: &Engine,
    params: &FamilyParams,
    order: usize,
) -> Result<IdentityReport> {
    let r = int(params.r() as i64);
    let seq = eng.polynomials(params, order)?;
    let lhs: Vec<XPoly> = seq
        .polys
        .iter()
        .map(|p| p.substitute_linear(&r, &int(1)))
        .collect();
    let shifted = FamilyParams::new(
        params.k,
        params.m,
        params.alphas.clone(),
        &params.log_a - &params.log_c,
        &params.log_b - &params.log_c,
        params.log_c.clone(),
    )?;
    let rhs = eng.polynomials(&shifted, order)?;
    let residual = compare_poly_members(&lhs, &rhs.polys);
    Ok(IdentityReport::from_residual(
        IdentityId::Shift12,
        params.to_string(),
        order,
        residual,
        vec![],
    ))
}

/// M_n(x) = sum_l C(n,l) x^{n-l} (log c)^{n-l} M_l, in both printed index
/// orders (summing over the member index and over the monomial degree).
/// The numbers come off the scalar pipeline, so this also ties the two
/// engine paths together.
pub fn expand_13_14(params: &FamilyParams, order: usize) -> Result<IdentityReport> {
    expand_13_14_with(&Engine::standard(), params, order)
}

pub(crate) fn expand_13_14_with(
    eng: &Engine,
    params: &FamilyParams,
    order: usize,
) -> Result<IdentityReport> {
    let seq = eng.polynomials(params, order)?;
    let numbers = eng.numbers(params, order)?;
    let mut first = Vec::with_capacity(order + 1);
    let mut second = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut by_member = XPoly::zero();
        for l in 0..=n {
            let c = binomial_rat(n, l) * pow_i64(&params.log_c, (n - l) as i64) * &numbers[l];
            by_member = &by_member + &XPoly::monomial(n - l).mul_rat(&c);
        }
        first.push(by_member);
        let mut by_degree = XPoly::zero();
        for l in 0..=n {
            let c = binomial_rat(n, n - l) * pow_i64(&params.log_c, l as i64) * &numbers[n - l];
            by_degree = &by_degree + &XPoly::monomial(l).mul_rat(&c);
        }
        second.push(by_degree);
    }
    let mut residual = compare_poly_members(&seq.polys, &first);
    if matches!(residual, Residual::ExactZero) {
        residual = compare_poly_members(&seq.polys, &second);
    }
    Ok(IdentityReport::from_residual(
        IdentityId::Expand1314,
        params.to_string(),
        order,
        residual,
        vec!["both index orders checked against the scalar-pipeline numbers".into()],
    ))
}

/// Reflection, in the m = 1 slice:
///
///   M_n(r - x; alphas) = (-1)^{r(1-k)+n} / prod(alphas)
///                        * sum_j C(n,j) (r log(ab/c))^{n-j} M_j(x; 1/alphas).
pub fn reflect_15(params: &FamilyParams, order: usize) -> Result<IdentityReport> {
    reflect_15_with(&Engine::standard(), params, order)
}

pub(crate) fn reflect_15_with(
    eng: &Engine,
    params: &FamilyParams,
    order: usize,
) -> Result<IdentityReport> {
    if params.m != 1 {
        return Err(Error::InvalidArgument(
            "the reflection identity lives in the m=1 slice".into(),
        ));
    }
    if params.alphas.iter().any(num_traits::Zero::is_zero) {
        return Err(Error::InvalidArgument(
            "reflection needs invertible alphas".into(),
        ));
    }
    let r = params.r() as i64;
    let seq = eng.polynomials(params, order)?;
    let lhs: Vec<XPoly> = seq
        .polys
        .iter()
        .map(|p| p.substitute_linear(&int(r), &int(-1)))
        .collect();
    let recip = FamilyParams::new(
        params.k,
        1,
        params.alphas.iter().map(|a| int(1) / a).collect(),
        params.log_a.clone(),
        params.log_b.clone(),
        params.log_c.clone(),
    )?;
    let mirror = eng.polynomials(&recip, order)?;
    let alpha_prod = params.alphas.iter().fold(int(1), |acc, a| acc * a);
    let shift = int(r) * (&params.log_a + &params.log_b - &params.log_c);
    let mut rhs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut acc = XPoly::zero();
        for j in 0..=n {
            let c = binomial_rat(n, j) * pow_i64(&shift, (n - j) as i64);
            acc = &acc + &mirror.polys[j].mul_rat(&c);
        }
        let sign = if (r * (1 - params.k as i64) + n as i64).rem_euclid(2) == 0 {
            int(1)
        } else {
            int(-1)
        };
        rhs.push(acc.mul_rat(&(sign / &alpha_prod)));
    }
    let residual = compare_poly_members(&lhs, &rhs);
    Ok(IdentityReport::from_residual(
        IdentityId::Reflect15,
        params.to_string(),
        order,
        residual,
        vec![],
    ))
}

/// Convolution over a split of the alpha list, at every split point:
///
///   M_n(x + y; alphas) = sum_l C(n,l) M_l(x; front) M_{n-l}(y; back),
///
/// symbolic in x, sampled in y. The split at 0 or r exercises the r = 0
/// degenerate family, whose members are the bare carrier powers (x log c)^n.
pub fn conv_16(params: &FamilyParams, y: &Rat, order: usize) -> Result<IdentityReport> {
    conv_16_with(&Engine::standard(), params, y, order)
}

pub(crate) fn conv_16_with(
    eng: &Engine,
    params: &FamilyParams,
    y: &Rat,
    order: usize,
) -> Result<IdentityReport> {
    let whole = eng.polynomials(params, order)?;
    let lhs: Vec<XPoly> = whole
        .polys
        .iter()
        .map(|p| p.substitute_linear(y, &int(1)))
        .collect();
    let mut residual = Residual::ExactZero;
    let mut notes = vec![format!("all {} split points checked", params.r() + 1)];
    for split in 0..=params.r() {
        let front = FamilyParams::new(
            params.k,
            params.m,
            params.alphas[..split].to_vec(),
            params.log_a.clone(),
            params.log_b.clone(),
            params.log_c.clone(),
        )?;
        let back = FamilyParams::new(
            params.k,
            params.m,
            params.alphas[split..].to_vec(),
            params.log_a.clone(),
            params.log_b.clone(),
            params.log_c.clone(),
        )?;
        let front_seq = eng.polynomials(&front, order)?;
        let back_at_y: Vec<Rat> = eng
            .polynomials(&back, order)?
            .polys
            .iter()
            .map(|p| p.eval(y))
            .collect();
        let mut rhs = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = XPoly::zero();
            for l in 0..=n {
                let c = binomial_rat(n, l) * &back_at_y[n - l];
                acc = &acc + &front_seq.polys[l].mul_rat(&c);
            }
            rhs.push(acc);
        }
        residual = compare_poly_members(&lhs, &rhs);
        if !matches!(residual, Residual::ExactZero) {
            notes.push(format!("first failure at split {split}"));
            break;
        }
    }
    Ok(IdentityReport::from_residual(
        IdentityId::Conv16,
        format!("{params} y={y}"),
        order,
        residual,
        notes,
    ))
}

/// Multinomial law over a partition of the alpha list into consecutive
/// blocks, fully scalar:
///
///   M_n(x_1 + ... + x_p; alphas) =
///     sum_{j_1+...+j_p = n} n!/(j_1! ... j_p!) prod_i M_{j_i}(x_i; block_i).
pub fn multinomial_17(
    params: &FamilyParams,
    blocks: &[(usize, Rat)],
    order: usize,
) -> Result<IdentityReport> {
    multinomial_17_with(&Engine::standard(), params, blocks, order)
}

pub(crate) fn multinomial_17_with(
    eng: &Engine,
    params: &FamilyParams,
    blocks: &[(usize, Rat)],
    order: usize,
) -> Result<IdentityReport> {
    if blocks.is_empty() {
        return Err(Error::InvalidArgument(
            "the multinomial law needs at least one block".into(),
        ));
    }
    if blocks.iter().map(|(size, _)| size).sum::<usize>() != params.r() {
        return Err(Error::InvalidArgument(format!(
            "block sizes must partition the {} alphas",
            params.r()
        )));
    }
    let whole = eng.polynomials(params, order)?;
    let total: Rat = blocks.iter().fold(int(0), |acc, (_, x)| acc + x);
    let lhs: Vec<Rat> = (0..=order).map(|n| whole.eval(n, &total)).collect();

    let mut block_vals = Vec::with_capacity(blocks.len());
    let mut start = 0;
    for (size, x) in blocks {
        let p = FamilyParams::new(
            params.k,
            params.m,
            params.alphas[start..start + size].to_vec(),
            params.log_a.clone(),
            params.log_b.clone(),
            params.log_c.clone(),
        )?;
        let seq = eng.polynomials(&p, order)?;
        block_vals.push((0..=order).map(|j| seq.eval(j, x)).collect::<Vec<Rat>>());
        start += size;
    }

    let mut rhs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut acc = int(0);
        for_each_composition(n, blocks.len(), &mut |parts| {
            let mut term = factorial_rat(n);
            for (i, &j) in parts.iter().enumerate() {
                term = term / factorial_rat(j) * &block_vals[i][j];
            }
            acc += term;
        });
        rhs.push(acc);
    }
    let residual = compare_scalar_members(&lhs, &rhs);
    let shape: Vec<String> = blocks.iter().map(|(s, x)| format!("{s}@{x}")).collect();
    Ok(IdentityReport::from_residual(
        IdentityId::Multinomial17,
        format!("{params} blocks=({})", shape.join(",")),
        order,
        residual,
        vec![],
    ))
}

/// Calls `f` with every ordered composition of `total` into `parts`
/// nonnegative summands.
fn for_each_composition(total: usize, parts: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(remaining: usize, parts: usize, scratch: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if scratch.len() + 1 == parts {
            scratch.push(remaining);
            f(scratch);
            scratch.pop();
            return;
        }
        for take in 0..=remaining {
            scratch.push(take);
            rec(remaining - take, parts, scratch, f);
            scratch.pop();
        }
    }
    assert!(parts >= 1, "a composition needs at least one part");
    rec(total, parts, &mut Vec::with_capacity(parts), f);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::report::Verdict;
    use proptest::prelude::*;

    fn sample_params() -> FamilyParams {
        FamilyParams::new(1, 2, vec![int(2), rat(-1, 2)], int(0), int(1), int(1)).unwrap()
    }

    fn pass(report: &IdentityReport) {
        assert_eq!(report.verdict, Verdict::Pass, "{}", report.render_line());
    }

    #[test]
    fn addition_holds_at_a_fractional_shift() {
        pass(&add_11(&sample_params(), &rat(3, 7), 8).unwrap());
    }

    #[test]
    fn addition_with_a_nonunit_carrier_base() {
        let p = FamilyParams::new(0, 1, vec![int(3)], rat(1, 2), int(2), rat(-1, 3)).unwrap();
        pass(&add_11(&p, &int(-2), 8).unwrap());
    }

    #[test]
    fn shift_folds_the_carrier_into_the_bases() {
        pass(&shift_12(&sample_params(), 8).unwrap());
        let p = FamilyParams::new(2, 1, vec![rat(5, 2)], int(-1), int(2), rat(3, 2)).unwrap();
        pass(&shift_12(&p, 8).unwrap());
    }

    #[test]
    fn expansion_recovers_polynomials_from_numbers() {
        pass(&expand_13_14(&sample_params(), 8).unwrap());
    }

    #[test]
    fn reflection_through_reciprocal_alphas() {
        let p = FamilyParams::new(1, 1, vec![int(2), int(-3)], int(0), int(1), int(1)).unwrap();
        pass(&reflect_15(&p, 8).unwrap());
        let p = FamilyParams::new(0, 1, vec![rat(2, 3)], rat(1, 2), int(2), int(1)).unwrap();
        pass(&reflect_15(&p, 8).unwrap());
    }

    #[test]
    fn reflection_applied_twice_returns_the_original() {
        // The identity sends (alphas, x) to (1/alphas, r - x); running the
        // checker on the image family verifies the map is an involution.
        let p = FamilyParams::new(1, 1, vec![int(2), rat(1, 2)], int(0), int(1), int(1)).unwrap();
        pass(&reflect_15(&p, 6).unwrap());
        let image =
            FamilyParams::new(1, 1, vec![rat(1, 2), int(2)], int(0), int(1), int(1)).unwrap();
        pass(&reflect_15(&image, 6).unwrap());
    }

    #[test]
    fn reflection_rejects_bad_slices() {
        let p = FamilyParams::new(1, 2, vec![int(2)], int(0), int(1), int(1)).unwrap();
        assert!(matches!(reflect_15(&p, 4), Err(Error::InvalidArgument(_))));
        let p = FamilyParams::new(1, 1, vec![int(0)], int(0), int(1), int(1)).unwrap();
        assert!(matches!(reflect_15(&p, 4), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn convolution_over_every_split() {
        let report = conv_16(&sample_params(), &rat(1, 3), 8).unwrap();
        pass(&report);
        assert!(report.notes[0].contains("3 split points"));
    }

    #[test]
    fn multinomial_with_three_blocks() {
        let p = FamilyParams::new(
            1,
            1,
            vec![int(2), int(-3), rat(1, 2)],
            int(0),
            int(1),
            int(1),
        )
        .unwrap();
        let blocks = [(1, int(1)), (1, rat(-1, 2)), (1, rat(2, 5))];
        pass(&multinomial_17(&p, &blocks, 7).unwrap());
    }

    #[test]
    fn multinomial_with_a_single_block_is_the_identity() {
        let p = sample_params();
        let blocks = [(2, rat(3, 4))];
        pass(&multinomial_17(&p, &blocks, 7).unwrap());
    }

    #[test]
    fn multinomial_rejects_a_bad_partition() {
        let blocks = [(1, int(1))];
        assert!(matches!(
            multinomial_17(&sample_params(), &blocks, 4),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            multinomial_17(&sample_params(), &[], 4),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn compositions_enumerate_the_simplex() {
        let mut seen = Vec::new();
        for_each_composition(3, 2, &mut |parts| seen.push(parts.to_vec()));
        assert_eq!(seen, vec![vec![0, 3], vec![1, 2], vec![2, 1], vec![3, 0]]);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]

        #[test]
        fn addition_holds_for_random_small_families(
            k in 0u32..3,
            m in 1u32..3,
            a_num in -3i64..4,
            y_num in -5i64..6,
        ) {
            prop_assume!(a_num != 0);
            prop_assume!(k >= 1 || a_num != 1);
            let p = FamilyParams::new(k, m, vec![int(a_num)], int(0), int(1), int(1)).unwrap();
            let report = add_11(&p, &rat(y_num, 3), 6).unwrap();
            prop_assert_eq!(report.verdict, Verdict::Pass);
        }

        #[test]
        fn convolution_holds_for_random_pairs(
            k in 0u32..2,
            a_num in 2i64..5,
            b_num in -4i64..-1,
            y_num in -4i64..5,
        ) {
            let p = FamilyParams::new(
                k, 1, vec![int(a_num), int(b_num)], int(0), int(1), int(1),
            ).unwrap();
            let report = conv_16(&p, &rat(y_num, 2), 6).unwrap();
            prop_assert_eq!(report.verdict, Verdict::Pass);
        }
    }
}
