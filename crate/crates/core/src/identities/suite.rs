//! Seeded random verification runs and the fault-injection smoke check.
//!
//! A suite draws family parameters and sample points from small rational
//! pools with a `ChaCha8` stream, so a (suite, order, samples, seed) tuple
//! always reproduces the same reports byte for byte. Draws that land on a
//! genuine domain edge (a pole, a vanishing Pochhammer) are logged and
//! skipped rather than counted as passes.
//!
//! The pools are shaped so that skips are the exception: alphas avoid the
//! unit values that put a zero at t = 0 for k = 0, the two exponential
//! bases are always distinct, and the Apostol parameter avoids the one
//! value whose negation is a pole.

use crate::bases::bbh::FactorialMode;
use crate::error::{Error, Result};
use crate::family::{Engine, FamilyParams};
use crate::identities::connection::{
    bbh_28_with, gen_stirling_22_with, hermite_26_with, jacobi_25_with, laguerre_24_with,
    stirling_23_with,
};
use crate::identities::lah_check::check_lah_with;
use crate::identities::multiplication::{
    carlitz_20_with, carlitz_21_with, norlund_18_with, norlund_19_with,
};
use crate::identities::structural::{
    add_11_with, conv_16_with, expand_13_14_with, multinomial_17_with, reflect_15_with,
    shift_12_with,
};
use crate::rational::{int, rat, Rat};
use crate::reductions::{table1_check_with, RowSample};
use crate::report::{IdentityId, IdentityReport, Verdict};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::str::FromStr;

/// Which identity group a run covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Structural,
    Multiplication,
    Connection,
    Table1,
    Lah,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = [
        "structural",
        "multiplication",
        "connection",
        "table1",
        "lah",
        "all",
    ];

    fn name(&self) -> &'static str {
        match self {
            Suite::Structural => "structural",
            Suite::Multiplication => "multiplication",
            Suite::Connection => "connection",
            Suite::Table1 => "table1",
            Suite::Lah => "lah",
            Suite::All => "all",
        }
    }

    fn includes(&self, other: Suite) -> bool {
        *self == Suite::All || *self == other
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "structural" => Ok(Suite::Structural),
            "multiplication" => Ok(Suite::Multiplication),
            "connection" => Ok(Suite::Connection),
            "table1" => Ok(Suite::Table1),
            "lah" => Ok(Suite::Lah),
            "all" => Ok(Suite::All),
            other => Err(Error::InvalidArgument(format!(
                "unknown suite '{other}' (expected one of {})",
                Suite::NAMES.join(", ")
            ))),
        }
    }
}

/// Knobs for one run: the group, the member order checked, how many
/// parameter draws to make, and the stream seed.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub order: usize,
    pub samples: usize,
    pub seed: u64,
}

/// Reports from a run, sorted by identity, plus one line per skipped check.
#[derive(Debug)]
pub struct SuiteOutcome {
    pub reports: Vec<IdentityReport>,
    pub skipped: Vec<String>,
}

impl SuiteOutcome {
    /// (passed, failed, inconclusive) tallies over the finished reports.
    pub fn counts(&self) -> (usize, usize, usize) {
        let mut tally = (0, 0, 0);
        for report in &self.reports {
            match report.verdict {
                Verdict::Pass => tally.0 += 1,
                Verdict::Fail => tally.1 += 1,
                Verdict::Inconclusive => tally.2 += 1,
            }
        }
        tally
    }
}

struct Sampler {
    rng: ChaCha8Rng,
    scalars: Vec<Rat>,
    alphas: Vec<Rat>,
    logs: Vec<Rat>,
}

impl Sampler {
    fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            scalars: vec![
                int(0),
                int(1),
                int(-1),
                rat(1, 2),
                rat(-1, 2),
                int(2),
                rat(1, 3),
                rat(-2, 3),
                rat(3, 4),
                int(3),
                rat(2, 5),
                rat(-5, 4),
                rat(1, 7),
                int(5),
            ],
            // Nonzero and off the unit circle, so alphas and their integer
            // powers never collide with the k = 0 pole at alpha = 1, and
            // the Apostol rows never see the pole at -lambda = 1.
            alphas: vec![
                int(2),
                int(-2),
                rat(1, 2),
                rat(-1, 2),
                int(3),
                rat(2, 3),
                rat(-3, 2),
                int(5),
                rat(5, 3),
                rat(-1, 3),
                rat(3, 4),
                int(-4),
            ],
            logs: vec![
                int(0),
                int(1),
                int(-1),
                rat(1, 2),
                int(2),
                rat(-1, 2),
                rat(1, 3),
                rat(3, 2),
                int(-2),
            ],
        }
    }

    fn index(&mut self, len: usize) -> usize {
        assert!(len > 0, "draw from an empty pool");
        (self.rng.next_u64() % len as u64) as usize
    }

    /// Inclusive range draw.
    fn range(&mut self, lo: usize, hi: usize) -> usize {
        lo + self.index(hi - lo + 1)
    }

    fn pick(&mut self, pool: &[Rat]) -> Rat {
        pool[self.index(pool.len())].clone()
    }

    fn scalar(&mut self) -> Rat {
        let pool = self.scalars.clone();
        self.pick(&pool)
    }

    fn alpha(&mut self) -> Rat {
        let pool = self.alphas.clone();
        self.pick(&pool)
    }

    fn alphas(&mut self, r: usize) -> Vec<Rat> {
        (0..r).map(|_| self.alpha()).collect()
    }

    fn log(&mut self) -> Rat {
        let pool = self.logs.clone();
        self.pick(&pool)
    }

    /// Two distinct exponential-base logarithms.
    fn log_pair(&mut self) -> (Rat, Rat) {
        let a = self.log();
        loop {
            let b = self.log();
            if b != a {
                return (a, b);
            }
        }
    }

    fn family(&mut self, k_max: u32, r_max: usize, m_max: u32) -> FamilyParams {
        let k = self.range(0, k_max as usize) as u32;
        let m = self.range(1, m_max as usize) as u32;
        let r = self.range(1, r_max);
        let alphas = self.alphas(r);
        let (log_a, log_b) = self.log_pair();
        let log_c = self.log();
        FamilyParams::new(k, m, alphas, log_a, log_b, log_c).expect("m is at least 1")
    }

    /// A composition of r into one block (r = 1) or two (r >= 2), paired
    /// with distinct sample arguments.
    fn blocks(&mut self, r: usize) -> Vec<(usize, Rat)> {
        if r == 1 {
            return vec![(1, self.scalar())];
        }
        let split = self.range(1, r - 1);
        vec![(split, self.scalar()), (r - split, self.scalar())]
    }
}

fn record(out: &mut SuiteOutcome, id: IdentityId, sample: usize, result: Result<IdentityReport>) {
    match result {
        Ok(report) => out.reports.push(report),
        Err(e) => out.skipped.push(format!("{id} sample {sample}: {e}")),
    }
}

fn structural_sample(
    eng: &Engine,
    s: &mut Sampler,
    order: usize,
    sample: usize,
    out: &mut SuiteOutcome,
) {
    let params = s.family(2, 3, 3);
    let y = s.scalar();
    record(
        out,
        IdentityId::Add11,
        sample,
        add_11_with(eng, &params, &y, order),
    );
    record(
        out,
        IdentityId::Shift12,
        sample,
        shift_12_with(eng, &params, order),
    );
    record(
        out,
        IdentityId::Expand1314,
        sample,
        expand_13_14_with(eng, &params, order),
    );
    let mut flat = params.clone();
    flat.m = 1;
    record(
        out,
        IdentityId::Reflect15,
        sample,
        reflect_15_with(eng, &flat, order),
    );
    let y2 = s.scalar();
    record(
        out,
        IdentityId::Conv16,
        sample,
        conv_16_with(eng, &params, &y2, order),
    );
    let blocks = s.blocks(params.r());
    record(
        out,
        IdentityId::Multinomial17,
        sample,
        multinomial_17_with(eng, &params, &blocks, order),
    );
}

fn multiplication_sample(
    eng: &Engine,
    s: &mut Sampler,
    order: usize,
    sample: usize,
    out: &mut SuiteOutcome,
) {
    let r = s.range(1, 2);
    let alphas = s.alphas(r);
    let k = s.range(0, 2) as u32;
    let k_low = s.range(1, 2) as u32;
    let n_mod = s.range(2, 3) as u32;
    let m_mod = s.range(2, 3) as u32;
    let ell = order.min(6);
    record(
        out,
        IdentityId::Norlund18,
        sample,
        norlund_18_with(eng, &alphas, k, n_mod, ell),
    );
    record(
        out,
        IdentityId::Norlund19,
        sample,
        norlund_19_with(eng, &alphas, k_low, n_mod, ell),
    );
    record(
        out,
        IdentityId::Carlitz20,
        sample,
        carlitz_20_with(eng, &alphas, k, n_mod, m_mod, ell),
    );
    record(
        out,
        IdentityId::Carlitz21,
        sample,
        carlitz_21_with(eng, &alphas, k_low, n_mod, m_mod, ell),
    );
}

fn connection_sample(
    eng: &Engine,
    s: &mut Sampler,
    order: usize,
    sample: usize,
    out: &mut SuiteOutcome,
) {
    let params = s.family(2, 2, 2);
    let nodes: Vec<Rat> = (0..order).map(|_| s.scalar()).collect();
    record(
        out,
        IdentityId::GenStirling22,
        sample,
        gen_stirling_22_with(eng, &params, &nodes, order),
    );
    record(
        out,
        IdentityId::Stirling23,
        sample,
        stirling_23_with(eng, &params, order),
    );
    let laguerre_pool = [int(0), rat(1, 2), int(1), int(2), rat(-1, 2)];
    let la = laguerre_pool[s.index(laguerre_pool.len())].clone();
    record(
        out,
        IdentityId::Laguerre24,
        sample,
        laguerre_24_with(eng, &params, &la, order),
    );
    // Pairs with alpha + beta > -1, keeping every Pochhammer factor nonzero.
    let jacobi_pool = [
        (int(0), int(0)),
        (rat(1, 2), rat(1, 3)),
        (int(1), int(2)),
        (rat(3, 2), rat(1, 2)),
    ];
    let (ja, jb) = jacobi_pool[s.index(jacobi_pool.len())].clone();
    record(
        out,
        IdentityId::Jacobi25,
        sample,
        jacobi_25_with(eng, &params, &ja, &jb, order),
    );
    record(
        out,
        IdentityId::Hermite26,
        sample,
        hermite_26_with(eng, &params, order),
    );

    let x = s.scalar();
    let a = loop {
        let a = s.scalar();
        if !num_traits::Zero::is_zero(&(int(1) + &a * &x)) {
            break a;
        }
    };
    let b = s.scalar();
    let k = s.range(0, 2) as u32;
    let r = s.range(1, 2);
    let alphas = s.alphas(r);
    record(
        out,
        IdentityId::Bbh28,
        sample,
        bbh_28_with(eng, &x, &a, &b, k, &alphas, order, FactorialMode::MkFact),
    );
}

fn table1_sample(
    eng: &Engine,
    s: &mut Sampler,
    order: usize,
    sample: usize,
    out: &mut SuiteOutcome,
) {
    let (log_a, log_b) = s.log_pair();
    let alpha_count = s.range(1, 2);
    let row_sample = RowSample {
        r: s.range(1, 3) as u32,
        m: s.range(1, 3) as u32,
        k: s.range(0, 2) as u32,
        lambda: s.alpha(),
        sigma: s.alpha(),
        log_a,
        log_b,
        log_c: s.log(),
        alphas: s.alphas(alpha_count),
    };
    for row in 1..=13 {
        record(
            out,
            IdentityId::Table1Row(row),
            sample,
            table1_check_with(eng, row, &row_sample, order),
        );
    }
}

fn lah_sample(eng: &Engine, s: &mut Sampler, order: usize, sample: usize, out: &mut SuiteOutcome) {
    let r = s.range(1, 2);
    let alphas = s.alphas(r);
    let k = s.range(0, 1) as u32;
    let x = s.scalar();
    let n = order.min(5);

    // Matching prefix: the series must close at m = r.
    let mut betas = alphas.clone();
    betas.extend(s.alphas(2));
    record(
        out,
        IdentityId::Lah9999,
        sample,
        check_lah_with(eng, &alphas, &betas, k, &x, n, &[r + 2]),
    );

    // Generic prefix: partial sums at four truncation depths.
    let mut generic = s.alphas(r + 8);
    while generic[..r] == alphas[..] {
        generic[0] = s.alpha();
    }
    let depths = [r + 2, r + 4, r + 6, r + 8];
    record(
        out,
        IdentityId::Lah9999,
        sample,
        check_lah_with(eng, &alphas, &generic, k, &x, n, &depths),
    );
}

/// Run a seeded suite against the standard engine.
pub fn run_suite(cfg: &SuiteConfig) -> SuiteOutcome {
    run_suite_with(&Engine::standard(), cfg)
}

pub(crate) fn run_suite_with(eng: &Engine, cfg: &SuiteConfig) -> SuiteOutcome {
    let mut out = SuiteOutcome {
        reports: Vec::new(),
        skipped: Vec::new(),
    };
    let mut s = Sampler::new(cfg.seed);
    for sample in 0..cfg.samples {
        if cfg.suite.includes(Suite::Structural) {
            structural_sample(eng, &mut s, cfg.order, sample, &mut out);
        }
        if cfg.suite.includes(Suite::Multiplication) {
            multiplication_sample(eng, &mut s, cfg.order, sample, &mut out);
        }
        if cfg.suite.includes(Suite::Connection) {
            connection_sample(eng, &mut s, cfg.order, sample, &mut out);
        }
        if cfg.suite.includes(Suite::Table1) {
            table1_sample(eng, &mut s, cfg.order, sample, &mut out);
        }
        if cfg.suite.includes(Suite::Lah) {
            lah_sample(eng, &mut s, cfg.order, sample, &mut out);
        }
    }
    out.reports.sort_by_key(|x| x.id);
    out
}

/// One fixed check per identity, on hand-picked pole-free parameters.
pub(crate) fn battery(eng: &Engine, order: usize) -> Result<Vec<IdentityReport>> {
    let params = FamilyParams::new(1, 2, vec![int(2), rat(-1, 2)], int(0), int(1), int(1))?;
    let flat = FamilyParams::new(1, 1, vec![int(2), rat(-1, 2)], int(0), int(1), int(1))?;
    let single = FamilyParams::new(1, 1, vec![int(2)], int(0), int(1), int(1))?;
    let y = rat(1, 2);
    let blocks = [(1usize, int(1)), (1usize, rat(-1, 2))];
    let conn_order = order.min(8);
    let nodes: Vec<Rat> = (0..conn_order.max(1))
        .map(|i| rat(i as i64 - 2, 2))
        .collect();
    let ell = order.min(4);
    let mut reports = vec![
        add_11_with(eng, &params, &y, order)?,
        shift_12_with(eng, &params, order)?,
        expand_13_14_with(eng, &params, order)?,
        reflect_15_with(eng, &flat, order)?,
        conv_16_with(eng, &params, &y, order)?,
        multinomial_17_with(eng, &params, &blocks, order)?,
        norlund_18_with(eng, &[int(2)], 1, 2, ell)?,
        norlund_19_with(eng, &[int(2)], 1, 2, ell)?,
        carlitz_20_with(eng, &[int(2)], 1, 2, 3, ell)?,
        carlitz_21_with(eng, &[int(2)], 2, 2, 3, ell.min(3))?,
        gen_stirling_22_with(eng, &single, &nodes, conn_order)?,
        stirling_23_with(eng, &single, conn_order)?,
        laguerre_24_with(eng, &single, &rat(1, 2), conn_order)?,
        jacobi_25_with(eng, &single, &int(0), &int(0), conn_order)?,
        hermite_26_with(eng, &single, conn_order)?,
        bbh_28_with(
            eng,
            &rat(1, 2),
            &int(1),
            &int(2),
            1,
            &[int(2), int(3)],
            order.min(6),
            FactorialMode::MkFact,
        )?,
        check_lah_with(
            eng,
            &[int(2), int(3)],
            &[int(2), int(3), int(5), int(7)],
            1,
            &int(1),
            order.min(4),
            &[4],
        )?,
    ];
    let sample = RowSample::default();
    for row in 1..=13 {
        reports.push(table1_check_with(eng, row, &sample, conn_order)?);
    }
    reports.sort_by_key(|a| a.id);
    Ok(reports)
}

/// Run the fixed battery against a deliberately faulty engine that drops
/// the (1-k) from the two-power, rescaling every member by 2^{rkm}.
///
/// This is the suite's tautology alarm. Checks whose two sides are both
/// homogeneous of degree one in the family members — all six structural
/// laws, and every check at k = 0 where the fault is invisible — must
/// still pass, because both sides pick up the same power of two. The
/// checks that pin the family against an independently computed side
/// (the reduction rows, the basis connection, the level-lowering
/// multiplication laws whose two sides sit at different k) must fail.
pub fn mutation_smoke(order: usize) -> Result<Vec<IdentityReport>> {
    battery(&Engine::faulty(), order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for name in Suite::NAMES {
            let suite: Suite = name.parse().unwrap();
            assert_eq!(suite.to_string(), name);
        }
        assert!(matches!(
            "junk".parse::<Suite>(),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn seeded_runs_are_reproducible() {
        let cfg = SuiteConfig {
            suite: Suite::Structural,
            order: 4,
            samples: 2,
            seed: 42,
        };
        let one = run_suite(&cfg);
        let two = run_suite(&cfg);
        let lines = |out: &SuiteOutcome| -> Vec<String> {
            out.reports.iter().map(|r| r.render_line()).collect()
        };
        assert_eq!(lines(&one), lines(&two));
        assert_eq!(one.skipped, two.skipped);
        assert_eq!(one.reports.len() + one.skipped.len(), 12);
    }

    #[test]
    fn every_report_is_sorted_and_accounted_for() {
        let cfg = SuiteConfig {
            suite: Suite::All,
            order: 5,
            samples: 1,
            seed: 7,
        };
        let out = run_suite(&cfg);
        assert_eq!(out.reports.len() + out.skipped.len(), 31);
        assert!(out.reports.windows(2).all(|w| w[0].id <= w[1].id));
        for report in &out.reports {
            assert_ne!(report.verdict, Verdict::Fail, "{}", report.render_line());
        }
    }

    #[test]
    fn zero_samples_produce_an_empty_outcome() {
        let cfg = SuiteConfig {
            suite: Suite::All,
            order: 5,
            samples: 0,
            seed: 1,
        };
        let out = run_suite(&cfg);
        assert!(out.reports.is_empty());
        assert!(out.skipped.is_empty());
    }

    #[test]
    fn the_standard_battery_is_all_green() {
        let reports = battery(&Engine::standard(), 6).unwrap();
        assert_eq!(reports.len(), 30);
        for report in &reports {
            assert_eq!(report.verdict, Verdict::Pass, "{}", report.render_line());
        }
    }

    #[test]
    fn the_faulty_engine_is_caught_by_the_cross_checks() {
        let reports = mutation_smoke(6).unwrap();
        let failed: Vec<&IdentityReport> = reports
            .iter()
            .filter(|r| r.verdict == Verdict::Fail)
            .collect();
        assert!(!failed.is_empty(), "the fault went unnoticed");
        assert!(
            failed.iter().any(|r| r.id == IdentityId::Norlund19),
            "the level-lowering law must see the 2^r mismatch"
        );
        assert!(failed.iter().any(|r| r.id == IdentityId::Bbh28));
        assert!(failed
            .iter()
            .any(|r| matches!(r.id, IdentityId::Table1Row(_))));
        // The structural laws are homogeneous in the members, so the fault
        // rescales both sides identically: they must keep passing, which is
        // exactly why the battery leans on the cross-engine comparisons.
        for id in [
            IdentityId::Add11,
            IdentityId::Shift12,
            IdentityId::Expand1314,
            IdentityId::Reflect15,
            IdentityId::Conv16,
            IdentityId::Multinomial17,
        ] {
            let report = reports.iter().find(|r| r.id == id).unwrap();
            assert_eq!(report.verdict, Verdict::Pass, "{}", report.render_line());
        }
    }

    #[test]
    fn checker_errors_become_skip_lines() {
        let mut out = SuiteOutcome {
            reports: Vec::new(),
            skipped: Vec::new(),
        };
        record(
            &mut out,
            IdentityId::Jacobi25,
            3,
            Err(Error::Singular("zero Pochhammer factor".into())),
        );
        assert!(out.reports.is_empty());
        assert_eq!(out.skipped.len(), 1);
        assert!(out.skipped[0].contains("JACOBI_25"), "{}", out.skipped[0]);
        assert!(out.skipped[0].contains("sample 3"));
    }
}
