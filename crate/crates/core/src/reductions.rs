//! The thirteen parameter reductions mapping the unified family onto the
//! classical and generalized families it specializes to.
//!
//! Rows whose target family has an independently coded generating function
//! (rows 1, 2, 6, 11) are compared against it exactly. The remaining rows
//! name external families whose generators are not available here; each such
//! row is treated as the definition of its target, and the check validates
//! cross-consistency: the definition must collapse to a coded reference at
//! an anchor point (m = 1, r = 1, or lambda = 1), and the engine must match
//! an explicitly built series everywhere else. Row 13 is checked under both
//! readings of its sign; see `row13`.

use crate::error::{Error, Result};
use crate::family::{Engine, FamilyParams};
use crate::poly::XPoly;
use crate::rational::{int, rat, Rat};
use crate::reference::{desouky_family, genocchi_polynomials, reference_family, ReferenceKind};
use crate::report::{compare_poly_members, IdentityId, IdentityReport, Residual};
use crate::series::{extract_poly, partial_exp_sum, Ring, TSeries};

/// Free parameters a reduction row can draw on. Each row reads only the
/// fields its setting mentions and ignores the rest: `lambda` doubles as the
/// beta of row 3, `sigma` is the exact stand-in for the log of the rescaling
/// base in rows 4 and 5, and `alphas` feeds row 13 alone.
#[derive(Debug, Clone)]
pub struct RowSample {
    pub r: u32,
    pub m: u32,
    pub k: u32,
    pub lambda: Rat,
    pub sigma: Rat,
    pub log_a: Rat,
    pub log_b: Rat,
    pub log_c: Rat,
    pub alphas: Vec<Rat>,
}

impl Default for RowSample {
    fn default() -> Self {
        RowSample {
            r: 2,
            m: 2,
            k: 1,
            lambda: int(2),
            sigma: int(2),
            log_a: int(0),
            log_b: int(1),
            log_c: int(1),
            alphas: vec![int(2), rat(1, 2)],
        }
    }
}

/// Check one reduction row at one sample, to member order `order`.
pub fn table1_check(row: u8, sample: &RowSample, order: usize) -> Result<IdentityReport> {
    table1_check_with(&Engine::standard(), row, sample, order)
}

/// All thirteen rows at one sample.
pub fn table1_all(sample: &RowSample, order: usize) -> Result<Vec<IdentityReport>> {
    (1..=13)
        .map(|row| table1_check(row, sample, order))
        .collect()
}

/// Engine-parameterized body, so the fault-injection battery can route every
/// row through a deliberately broken engine. The reference side never goes
/// through the engine: each row compares two independent code paths.
pub(crate) fn table1_check_with(
    eng: &Engine,
    row: u8,
    sample: &RowSample,
    order: usize,
) -> Result<IdentityReport> {
    if sample.r == 0 {
        return Err(Error::InvalidArgument(
            "reduction rows require r >= 1".into(),
        ));
    }
    match row {
        1 => row1(eng, sample, order),
        2 => row2(eng, sample, order),
        3 => row3(eng, sample, order),
        4 => row4(eng, sample, order),
        5 => row5(eng, sample, order),
        6 => row6(eng, sample, order),
        7 => row7(eng, sample, order),
        8 => row8(eng, sample, order),
        9 => row9(eng, sample, order),
        10 => row10(eng, sample, order),
        11 => row11(eng, sample, order),
        12 => row12(eng, sample, order),
        13 => row13(eng, sample, order),
        other => Err(Error::InvalidArgument(format!(
            "no reduction row {other}; rows run 1..=13"
        ))),
    }
}

fn seal(
    row: u8,
    params: String,
    order: usize,
    residual: Residual,
    notes: Vec<String>,
) -> IdentityReport {
    IdentityReport::from_residual(IdentityId::Table1Row(row), params, order, residual, notes)
}

fn repeat_alpha(alpha: &Rat, r: u32) -> Vec<Rat> {
    vec![alpha.clone(); r as usize]
}

fn scale_members(polys: &[XPoly], s: &Rat) -> Vec<XPoly> {
    polys.iter().map(|p| p.mul_rat(s)).collect()
}

fn alternating_sign(r: u32) -> Rat {
    if r.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

/// k=1, m=1, every alpha = lambda: the order-r two-base Bernoulli family
/// (reference SrivastavaBernoulli), compared directly.
fn row1(eng: &Engine, s: &RowSample, n: usize) -> Result<IdentityReport> {
    let p = FamilyParams::new(
        1,
        1,
        repeat_alpha(&s.lambda, s.r),
        s.log_a.clone(),
        s.log_b.clone(),
        s.log_c.clone(),
    )?;
    let lhs = eng.polynomials(&p, n)?;
    let rhs = reference_family(
        &ReferenceKind::SrivastavaBernoulli {
            order: s.r,
            lambda: s.lambda.clone(),
            log_a: s.log_a.clone(),
            log_b: s.log_b.clone(),
            log_c: s.log_c.clone(),
        },
        n,
    )?;
    let residual = compare_poly_members(&lhs.polys, &rhs);
    let params = format!(
        "r={} lambda={} logs=({},{},{})",
        s.r, s.lambda, s.log_a, s.log_b, s.log_c
    );
    Ok(seal(
        1,
        params,
        n,
        residual,
        vec!["direct: reference SrivastavaBernoulli".into()],
    ))
}

/// k=0, m=1, every alpha = -lambda: (-1)^r times the order-r two-base Euler
/// family (reference SrivastavaEuler), compared directly.
fn row2(eng: &Engine, s: &RowSample, n: usize) -> Result<IdentityReport> {
    let p = FamilyParams::new(
        0,
        1,
        repeat_alpha(&-s.lambda.clone(), s.r),
        s.log_a.clone(),
        s.log_b.clone(),
        s.log_c.clone(),
    )?;
    let lhs = eng.polynomials(&p, n)?;
    let euler = reference_family(
        &ReferenceKind::SrivastavaEuler {
            order: s.r,
            lambda: s.lambda.clone(),
            log_a: s.log_a.clone(),
            log_b: s.log_b.clone(),
            log_c: s.log_c.clone(),
        },
        n,
    )?;
    let rhs = scale_members(&euler, &alternating_sign(s.r));
    let residual = compare_poly_members(&lhs.polys, &rhs);
    let params = format!(
        "r={} lambda={} logs=({},{},{})",
        s.r, s.lambda, s.log_a, s.log_b, s.log_c
    );
    Ok(seal(
        2,
        params,
        n,
        residual,
        vec!["direct: (-1)^r * reference SrivastavaEuler".into()],
    ))
}

/// Every alpha = beta, c = b, m = 1. The target is external, so the row is
/// its definition; the check pins it to rows 1 and 2 with the bases tied.
fn row3(eng: &Engine, s: &RowSample, n: usize) -> Result<IdentityReport> {
    let beta = &s.lambda;
    let mut notes = Vec::new();
    let mut residual;
    {
        let p = FamilyParams::new(
            1,
            1,
            repeat_alpha(beta, s.r),
            s.log_a.clone(),
            s.log_b.clone(),
            s.log_b.clone(),
        )?;
        let lhs = eng.polynomials(&p, n)?;
        let rhs = reference_family(
            &ReferenceKind::SrivastavaBernoulli {
                order: s.r,
                lambda: beta.clone(),
                log_a: s.log_a.clone(),
                log_b: s.log_b.clone(),
                log_c: s.log_b.clone(),
            },
            n,
        )?;
        residual = compare_poly_members(&lhs.polys, &rhs);
        notes.push("k=1 branch: SrivastavaBernoulli with c=b".into());
    }
    if *beta == int(1) {
        notes.push(
            "k=0 branch skipped: beta=1 puts a zero at t=0 in that branch's denominator".into(),
        );
    } else if matches!(residual, Residual::ExactZero) {
        let p = FamilyParams::new(
            0,
            1,
            repeat_alpha(beta, s.r),
            s.log_a.clone(),
            s.log_b.clone(),
            s.log_b.clone(),
        )?;
        let lhs = eng.polynomials(&p, n)?;
        let euler = reference_family(
            &ReferenceKind::SrivastavaEuler {
                order: s.r,
                lambda: -beta.clone(),
                log_a: s.log_a.clone(),
                log_b: s.log_b.clone(),
                log_c: s.log_b.clone(),
            },
            n,
        )?;
        let rhs = scale_members(&euler, &alternating_sign(s.r));
        residual = compare_poly_members(&lhs.polys, &rhs);
        notes.push("k=0 branch: (-1)^r * SrivastavaEuler at -beta with c=b".into());
    }
    let params = format!(
        "r={} beta={} logs=({},{},{})",
        s.r, beta, s.log_a, s.log_b, s.log_b
    );
    Ok(seal(3, params, n, residual, notes))
}

/// Rows 4 and 5 claim the family with logs (0, logC/sigma, logC) turns into
/// an external two-base family under t -> sigma*t, x -> x/sigma. The right
/// side here is the series that substitution actually produces, built
/// explicitly: the external generator is not available, so this validates
/// the substitution mechanics and the printed scale factor.
fn substituted_rhs(
    k_is_one: bool,
    m: u32,
    r: u32,
    lambda: &Rat,
    sigma: &Rat,
    log_c: &Rat,
    n: usize,
) -> Result<Vec<XPoly>> {
    let rm = (r * m) as usize;
    let internal = n + rm;
    let exp_c = TSeries::exp_linear(log_c, internal);
    let shifted_sum = partial_exp_sum(m, internal).scale_var(sigma);
    let den = if k_is_one {
        exp_c.mul_rat(lambda).sub(&shifted_sum).pow(r)
    } else {
        exp_c.mul_rat(lambda).add(&shifted_sum).pow(r)
    };
    let num = if k_is_one {
        TSeries::t_power(rm, internal)
    } else {
        TSeries::one(internal).mul_rat(&crate::rational::two_pow(rm as i64))
    };
    let carrier = TSeries::exp_linear(&XPoly::new(vec![Rat::zero(), log_c.clone()]), internal);
    let gf = num.lift().mul(&carrier).div(&den.lift())?.truncate(n);
    Ok((0..=n).map(|j| extract_poly(&gf, j)).collect())
}

/// sigma^n * M_n(x/sigma) for the engine family with logs (0, logC/sigma, logC).
fn substituted_lhs(
    eng: &Engine,
    k: u32,
    m: u32,
    alphas: Vec<Rat>,
    sigma: &Rat,
    log_c: &Rat,
    n: usize,
) -> Result<Vec<XPoly>> {
    let p = FamilyParams::new(k, m, alphas, int(0), log_c / sigma, log_c.clone())?;
    let seq = eng.polynomials(&p, n)?;
    let inv_sigma = int(1) / sigma;
    let mut power = int(1);
    let mut out = Vec::with_capacity(n + 1);
    for member in &seq.polys {
        out.push(
            member
                .substitute_linear(&int(0), &inv_sigma)
                .mul_rat(&power),
        );
        power *= sigma;
    }
    Ok(out)
}

fn check_sigma(s: &RowSample) -> Result<()> {
    if s.sigma.is_zero() {
        return Err(Error::InvalidArgument(
            "rows 4 and 5 need a nonzero sigma".into(),
        ));
    }
    Ok(())
}

/// k=1 rescaling row: sigma^n M_n(x/sigma) against sigma^{rm} times the
/// explicitly substituted series.
fn row4(eng: &Engine, s: &RowSample, n: usize) -> Result<IdentityReport> {
    check_sigma(s)?;
    let lhs = substituted_lhs(
        eng,
        1,
        s.m,
        repeat_alpha(&s.lambda, s.r),
        &s.sigma,
        &s.log_c,
        n,
    )?;
    let raw = substituted_rhs(true, s.m, s.r, &s.lambda, &s.sigma, &s.log_c, n)?;
    let scale = crate::rational::pow_i64(&s.sigma, (s.r * s.m) as i64);
    let rhs = scale_members(&raw, &scale);
    let residual = compare_poly_members(&lhs, &rhs);
    let params = format!(
        "r={} m={} lambda={} sigma={} logC={}",
        s.r, s.m, s.lambda, s.sigma, s.log_c
    );
    Ok(seal(
        4,
        params,
        n,
        residual,
        vec![
            "definitional: right side is the substituted series built explicitly".into(),
            "validates t -> sigma*t, x -> x/sigma and the sigma^{rm} scale".into(),
        ],
    ))
}

/// k=0 rescaling row: the same substitution with the (-1)^r sign and no
/// power of sigma (the numerator carries no power of t at k=0; the printed
/// scale factor belongs to the external family's own normalization).
fn row5(eng: &Engine, s: &RowSample, n: usize) -> Result<IdentityReport> {
    check_sigma(s)?;
    let lhs = substituted_lhs(
        eng,
        0,
        s.m,
        repeat_alpha(&-s.lambda.clone(), s.r),
        &s.sigma,
        &s.log_c,
        n,
    )?;
    let raw = substituted_rhs(false, s.m, s.r, &s.lambda, &s.sigma, &s.log_c, n)?;
    let rhs = scale_members(&raw, &alternating_sign(s.r));
    let residual = compare_poly_members(&lhs, &rhs);
    let params = format!(
        "r={} m={} lambda={} sigma={} logC={}",
        s.r, s.m, s.lambda, s.sigma, s.log_c
    );
    Ok(seal(
        5,
        params,
        n,
        residual,
        vec![
            "definitional: right side is the substituted series built explicitly".into(),
            "validates t -> sigma*t, x -> x/sigma and the (-1)^r sign; the printed scale is absorbed by the external normalization".into(),
        ],
    ))
}

/// k=1, r=1, alpha=1, logs (0,1,1): the higher-m Bernoulli family
/// (reference NataliniBernoulli), compared directly.
fn row6(eng: &Engine, s: &RowSample, n: usize) -> Result<IdentityReport> {
    let p = FamilyParams::new(1, s.m, vec![int(1)], int(0), int(1), int(1))?;
    let lhs = eng.polynomials(&p, n)?;
    let rhs = reference_family(&ReferenceKind::NataliniBernoulli { m: s.m }, n)?;
    let residual = compare_poly_members(&lhs.polys, &rhs);
    Ok(seal(
        6,
        format!("m={}", s.m),
        n,
        residual,
        vec!["direct: reference NataliniBernoulli".into()],
    ))
}

/// 2^{rm} e^{xt} / (lambda e^t + s_m(t))^r: the Euler-type analogue of the
/// higher-m Bernoulli generator. Rows 7, 9 and 12 name external families of
/// exactly this shape; this series serves as their working definition and is
/// anchored below to the coded references at m=1.
fn euler_type_definition(m: u32, r: u32, lambda: &Rat, n: usize) -> Result<Vec<XPoly>> {
    let den = TSeries::exp_linear(&int(1), n)
        .mul_rat(lambda)
        .add(&partial_exp_sum(m, n))
        .pow(r);
    let num = TSeries::one(n).mul_rat(&crate::rational::two_pow((r * m) as i64));
    let carrier = TSeries::exp_linear(&XPoly::new(vec![Rat::zero(), int(1)]), n);
    let gf = num.lift().mul(&carrier).div(&den.lift())?;
    Ok((0..=n).map(|j| extract_poly(&gf, j)).collect())
}

/// Shared body of rows 7, 9 and 12: engine at k=0, alphas = -lambda, logs
/// (0,1,1) against (-1)^r times the Euler-type definition, with the m=1
/// instance of that definition anchored to the coded Euler reference.
fn euler_type_row(
    eng: &Engine,
    row: u8,
    r: u32,
    m: u32,
    lambda: &Rat,
    n: usize,
) -> Result<IdentityReport> {
    let mut notes = Vec::new();
    let anchor = euler_type_definition(1, r, lambda, n)?;
    let reference = reference_family(
        &ReferenceKind::SrivastavaEuler {
            order: r,
            lambda: lambda.clone(),
            log_a: int(0),
            log_b: int(1),
            log_c: int(1),
        },
        n,
    )?;
    let mut residual = compare_poly_members(&anchor, &reference);
    notes.push("anchor: the defining series at m=1 is the coded SrivastavaEuler reference".into());
    if matches!(residual, Residual::ExactZero) {
        let p = FamilyParams::new(
            0,
            m,
            repeat_alpha(&-lambda.clone(), r),
            int(0),
            int(1),
            int(1),
        )?;
        let lhs = eng.polynomials(&p, n)?;
        let rhs = scale_members(
            &euler_type_definition(m, r, lambda, n)?,
            &alternating_sign(r),
        );
        residual = compare_poly_members(&lhs.polys, &rhs);
        notes.push("engine vs (-1)^r * the defining series at the sampled m".into());
    }
    Ok(seal(
        row,
        format!("r={r} m={m} lambda={lambda}"),
        n,
        residual,
        notes,
    ))
}

/// k=0, r=1, alpha=-1, logs (0,1,1): minus the higher-m Euler family
/// (external; defined by the Euler-type series, anchored classically).
fn row7(eng: &Engine, s: &RowSample, n: usize) -> Result<IdentityReport> {
    euler_type_row(eng, 7, 1, s.m, &int(1), n)
}

/// k=1, every alpha=1, logs (0,1,1): the higher-m order-r Bernoulli family.
/// Its generator is the coded TremblayBernoulli at lambda=1; the m=1 slice
/// must also land on the order-r two-base family with unit bases.
fn row8(eng: &Engine, s: &RowSample, n: usize) -> Result<IdentityReport> {
    let mut notes = Vec::new();
    let p = FamilyParams::new(1, s.m, repeat_alpha(&int(1), s.r), int(0), int(1), int(1))?;
    let lhs = eng.polynomials(&p, n)?;
    let rhs = reference_family(
        &ReferenceKind::TremblayBernoulli {
            m: s.m,
            order: s.r,
            lambda: int(1),
        },
        n,
    )?;
    let mut residual = compare_poly_members(&lhs.polys, &rhs);
    notes.push("direct: reference TremblayBernoulli at lambda=1".into());
    if matches!(residual, Residual::ExactZero) {
        let p1 = FamilyParams::new(1, 1, repeat_alpha(&int(1), s.r), int(0), int(1), int(1))?;
        let m1 = eng.polynomials(&p1, n)?;
        let anchor = reference_family(
            &ReferenceKind::SrivastavaBernoulli {
                order: s.r,
                lambda: int(1),
                log_a: int(0),
                log_b: int(1),
                log_c: int(1),
            },
            n,
        )?;
        residual = compare_poly_members(&m1.polys, &anchor);
        notes.push("anchor: m=1 slice equals SrivastavaBernoulli at lambda=1, logs (0,1,1)".into());
    }
    Ok(seal(8, format!("r={} m={}", s.r, s.m), n, residual, notes))
}

/// k=0, every alpha=-1, logs (0,1,1): (-1)^r times the higher-m order-r
/// Euler family (external; Euler-type definition at lambda=1).
fn row9(eng: &Engine, s: &RowSample, n: usize) -> Result<IdentityReport> {
    euler_type_row(eng, 9, s.r, s.m, &int(1), n)
}

/// (2^m t^m / (e^t + s_m(t)))^r e^{xt}: the Genocchi-type series the row-10
/// target must generate; at r=m=1 it is the classical Genocchi generator.
fn genocchi_type_definition(m: u32, r: u32, n: usize) -> Result<Vec<XPoly>> {
    let rm = (r * m) as usize;
    let internal = n + rm;
    let den = TSeries::exp_linear(&int(1), internal)
        .add(&partial_exp_sum(m, internal))
        .pow(r);
    let num = TSeries::t_power(rm, internal).mul_rat(&crate::rational::two_pow(rm as i64));
    let carrier = TSeries::exp_linear(&XPoly::new(vec![Rat::zero(), int(1)]), internal);
    let gf = num.lift().mul(&carrier).div(&den.lift())?.truncate(n);
    Ok((0..=n).map(|j| extract_poly(&gf, j)).collect())
}

/// k=1, every alpha=-1, logs (0,1,1): (-1)^r (1/2)^{rm} times the higher-m
/// order-r Genocchi family (external). Anchored at r=m=1 to the classical
/// Genocchi generator with literal number spot-checks.
fn row10(eng: &Engine, s: &RowSample, n: usize) -> Result<IdentityReport> {
    let mut notes = Vec::new();
    let anchor_order = n.max(4);
    let p1 = FamilyParams::new(1, 1, vec![int(-1)], int(0), int(1), int(1))?;
    let m1 = eng.polynomials(&p1, anchor_order)?;
    let genocchi = genocchi_polynomials(anchor_order);
    let half_neg = scale_members(&genocchi, &rat(-1, 2));
    let mut residual = compare_poly_members(&m1.polys, &half_neg);
    notes.push("anchor: r=m=1 engine equals -1/2 * classical Genocchi".into());
    if matches!(residual, Residual::ExactZero) {
        let numbers = eng.numbers(&p1, anchor_order)?;
        let spots = [(1usize, rat(-1, 2)), (2, rat(1, 2)), (4, rat(-1, 2))];
        for (idx, expected) in spots {
            if numbers[idx] != expected {
                residual = Residual::FirstMismatch {
                    n: idx,
                    power: 0,
                    lhs: numbers[idx].clone(),
                    rhs: expected,
                };
                break;
            }
        }
        notes.push("literal spots: M_1(0)=-1/2, M_2(0)=1/2, M_4(0)=-1/2".into());
    }
    if matches!(residual, Residual::ExactZero) {
        let p = FamilyParams::new(1, s.m, repeat_alpha(&int(-1), s.r), int(0), int(1), int(1))?;
        let lhs = eng.polynomials(&p, n)?;
        let scale = alternating_sign(s.r) * crate::rational::two_pow(-((s.r * s.m) as i64));
        let rhs = scale_members(&genocchi_type_definition(s.m, s.r, n)?, &scale);
        residual = compare_poly_members(&lhs.polys, &rhs);
        notes.push("engine vs (-1)^r (1/2)^{rm} * the defining series at the sampled r, m".into());
    }
    Ok(seal(10, format!("r={} m={}", s.r, s.m), n, residual, notes))
}

/// k=1, every alpha=lambda, logs (0,1,1): the higher-m order-r Apostol-type
/// Bernoulli family (reference TremblayBernoulli), compared directly.
fn row11(eng: &Engine, s: &RowSample, n: usize) -> Result<IdentityReport> {
    let p = FamilyParams::new(1, s.m, repeat_alpha(&s.lambda, s.r), int(0), int(1), int(1))?;
    let lhs = eng.polynomials(&p, n)?;
    let rhs = reference_family(
        &ReferenceKind::TremblayBernoulli {
            m: s.m,
            order: s.r,
            lambda: s.lambda.clone(),
        },
        n,
    )?;
    let residual = compare_poly_members(&lhs.polys, &rhs);
    let params = format!("r={} m={} lambda={}", s.r, s.m, s.lambda);
    Ok(seal(
        11,
        params,
        n,
        residual,
        vec!["direct: reference TremblayBernoulli".into()],
    ))
}

/// k=0, every alpha=-lambda, logs (0,1,1): (-1)^r times the higher-m order-r
/// Apostol-type Euler family (external; Euler-type definition).
fn row12(eng: &Engine, s: &RowSample, n: usize) -> Result<IdentityReport> {
    euler_type_row(eng, 12, s.r, s.m, &s.lambda, n)
}

/// m=1, logs (0,1,1): the one-base unified family. The printed row negates
/// the alphas on the way in; the generator in this corpus has no such flip.
/// Both readings are evaluated: the corrected one decides the verdict, the
/// as-printed result is recorded in the notes.
fn row13(eng: &Engine, s: &RowSample, n: usize) -> Result<IdentityReport> {
    if s.alphas.is_empty() {
        return Err(Error::InvalidArgument(
            "row 13 needs at least one alpha".into(),
        ));
    }
    let target = desouky_family(&s.alphas, s.k, n)?;
    let corrected = FamilyParams::new(s.k, 1, s.alphas.clone(), int(0), int(1), int(1))?;
    let residual = compare_poly_members(&eng.polynomials(&corrected, n)?.polys, &target);
    let mut notes = vec![match residual {
        Residual::ExactZero => "with the sign dropped (alphas taken as given): PASS, exact".into(),
        ref mismatch => format!("with the sign dropped (alphas taken as given): FAIL, {mismatch}"),
    }];
    let negated: Vec<Rat> = s.alphas.iter().map(|a| -a.clone()).collect();
    let printed = FamilyParams::new(s.k, 1, negated, int(0), int(1), int(1))?;
    match eng.polynomials(&printed, n) {
        Ok(seq) => {
            let printed_residual = compare_poly_members(&seq.polys, &target);
            notes.push(match printed_residual {
                Residual::ExactZero => "as printed (alphas negated): PASS, exact".into(),
                mismatch => format!("as printed (alphas negated): FAIL, {mismatch}"),
            });
        }
        Err(e) => notes.push(format!("as printed (alphas negated): not computable, {e}")),
    }
    let alphas: Vec<String> = s.alphas.iter().map(|a| a.to_string()).collect();
    let params = format!("k={} alphas=({})", s.k, alphas.join(","));
    Ok(seal(13, params, n, residual, notes))
}
