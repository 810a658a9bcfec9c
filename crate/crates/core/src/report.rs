//! Verdict reporting for identity checks.
//!
//! Every check either matches to exact zero residual, pins down the first
//! mismatching coefficient, or (for the one truncated-series diagnostic)
//! emits the residual magnitudes at increasing truncation depths.

use crate::poly::XPoly;
use crate::rational::Rat;
use serde::ser::{Serialize, SerializeStruct, Serializer};
use std::fmt;

/// Which check produced a report. The numeric tags are the wire identifiers
/// the JSON output and the CLI suite names key on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum IdentityId {
    Add11,
    Shift12,
    Expand1314,
    Reflect15,
    Conv16,
    Multinomial17,
    Norlund18,
    Norlund19,
    Carlitz20,
    Carlitz21,
    GenStirling22,
    Stirling23,
    Laguerre24,
    Jacobi25,
    Hermite26,
    Lah9999,
    Bbh28,
    Table1Row(u8),
}

impl IdentityId {
    pub fn equation_tag(&self) -> String {
        use IdentityId::*;
        match self {
            Add11 => "(11)".into(),
            Shift12 => "(12)".into(),
            Expand1314 => "(13)/(14)".into(),
            Reflect15 => "(15)".into(),
            Conv16 => "(16)".into(),
            Multinomial17 => "(17)".into(),
            Norlund18 => "(18)".into(),
            Norlund19 => "(19)".into(),
            Carlitz20 => "(20)".into(),
            Carlitz21 => "(21)".into(),
            GenStirling22 => "(22)".into(),
            Stirling23 => "(23)".into(),
            Laguerre24 => "(24)".into(),
            Jacobi25 => "(25)".into(),
            Hermite26 => "(26)".into(),
            Lah9999 => "(9999)".into(),
            Bbh28 => "(28)".into(),
            Table1Row(i) => format!("Table 1, row {i}"),
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use IdentityId::*;
        match self {
            Add11 => write!(f, "ADD_11"),
            Shift12 => write!(f, "SHIFT_12"),
            Expand1314 => write!(f, "EXPAND_13_14"),
            Reflect15 => write!(f, "REFLECT_15"),
            Conv16 => write!(f, "CONV_16"),
            Multinomial17 => write!(f, "MULTINOMIAL_17"),
            Norlund18 => write!(f, "NORLUND_18"),
            Norlund19 => write!(f, "NORLUND_19"),
            Carlitz20 => write!(f, "CARLITZ_20"),
            Carlitz21 => write!(f, "CARLITZ_21"),
            GenStirling22 => write!(f, "GENSTIRLING_22"),
            Stirling23 => write!(f, "STIRLING_23"),
            Laguerre24 => write!(f, "LAGUERRE_24"),
            Jacobi25 => write!(f, "JACOBI_25"),
            Hermite26 => write!(f, "HERMITE_26"),
            Lah9999 => write!(f, "LAH_9999"),
            Bbh28 => write!(f, "BBH_28"),
            Table1Row(i) => write!(f, "TABLE1_ROW({i})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "PASS"),
            Verdict::Fail => write!(f, "FAIL"),
            Verdict::Inconclusive => write!(f, "INCONCLUSIVE"),
        }
    }
}

/// (truncation depth, |lhs - rhs| at that depth)
pub type DiagnosticPoint = (usize, Rat);

#[derive(Debug, Clone, PartialEq)]
pub enum Residual {
    ExactZero,
    /// First failing member index n, the x-power where the sides differ, and
    /// the two coefficient values.
    FirstMismatch {
        n: usize,
        power: usize,
        lhs: Rat,
        rhs: Rat,
    },
    /// Residual magnitudes of a truncated infinite expansion at increasing
    /// truncation depths; legal only for the LAH_9999 check.
    Diagnostic(Vec<DiagnosticPoint>),
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residual::ExactZero => write!(f, "0"),
            Residual::FirstMismatch { n, power, lhs, rhs } => {
                write!(
                    f,
                    "first mismatch at n={n}, x^{power}: lhs={lhs}, rhs={rhs}"
                )
            }
            Residual::Diagnostic(points) => {
                let parts: Vec<String> = points
                    .iter()
                    .map(|(m, v)| format!("M={m}: |res|={v}"))
                    .collect();
                write!(f, "{}", parts.join("; "))
            }
        }
    }
}

/// Term-by-term comparison of two member lists. Both sides must cover the
/// same range of member indices.
pub fn compare_poly_members(lhs: &[XPoly], rhs: &[XPoly]) -> Residual {
    assert_eq!(
        lhs.len(),
        rhs.len(),
        "member lists must cover the same orders"
    );
    for (n, (l, r)) in lhs.iter().zip(rhs).enumerate() {
        if l != r {
            let top = l.degree().unwrap_or(0).max(r.degree().unwrap_or(0));
            for power in 0..=top {
                if l.coeff(power) != r.coeff(power) {
                    return Residual::FirstMismatch {
                        n,
                        power,
                        lhs: l.coeff(power),
                        rhs: r.coeff(power),
                    };
                }
            }
            unreachable!("polynomials differ but no coefficient does");
        }
    }
    Residual::ExactZero
}

/// Scalar variant of [`compare_poly_members`]; mismatches report power 0.
pub fn compare_scalar_members(lhs: &[Rat], rhs: &[Rat]) -> Residual {
    assert_eq!(
        lhs.len(),
        rhs.len(),
        "member lists must cover the same orders"
    );
    for (n, (l, r)) in lhs.iter().zip(rhs).enumerate() {
        if l != r {
            return Residual::FirstMismatch {
                n,
                power: 0,
                lhs: l.clone(),
                rhs: r.clone(),
            };
        }
    }
    Residual::ExactZero
}

/// Outcome of one identity check at one parameter sample.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub params: String,
    pub order: usize,
    pub residual: Residual,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

impl IdentityReport {
    pub fn passing(id: IdentityId, params: String, order: usize, notes: Vec<String>) -> Self {
        IdentityReport {
            id,
            params,
            order,
            residual: Residual::ExactZero,
            verdict: Verdict::Pass,
            notes,
        }
    }

    pub fn failing(
        id: IdentityId,
        params: String,
        order: usize,
        residual: Residual,
        notes: Vec<String>,
    ) -> Self {
        debug_assert!(!matches!(residual, Residual::ExactZero));
        IdentityReport {
            id,
            params,
            order,
            residual,
            verdict: Verdict::Fail,
            notes,
        }
    }

    /// Seals a comparison: an exactly zero residual passes, anything else fails.
    pub fn from_residual(
        id: IdentityId,
        params: String,
        order: usize,
        residual: Residual,
        notes: Vec<String>,
    ) -> Self {
        match residual {
            Residual::ExactZero => IdentityReport::passing(id, params, order, notes),
            other => IdentityReport::failing(id, params, order, other, notes),
        }
    }

    /// Inconclusive by design: a truncated expansion whose tail is not
    /// summable exactly. An all-zero diagnostic upgrades itself to PASS.
    pub fn diagnostic(
        id: IdentityId,
        params: String,
        order: usize,
        points: Vec<DiagnosticPoint>,
        notes: Vec<String>,
    ) -> Self {
        use num_traits::Zero;
        if points.iter().all(|(_, v)| v.is_zero()) {
            let mut notes = notes;
            notes.push("every truncation already cancels exactly".into());
            return IdentityReport::passing(id, params, order, notes);
        }
        IdentityReport {
            id,
            params,
            order,
            residual: Residual::Diagnostic(points),
            verdict: Verdict::Inconclusive,
            notes,
        }
    }

    /// One human-readable line, stable across runs.
    pub fn render_line(&self) -> String {
        let notes = if self.notes.is_empty() {
            String::new()
        } else {
            format!(" | {}", self.notes.join(" | "))
        };
        format!(
            "{} {} {} [{}] residual: {}{}",
            self.verdict,
            self.id,
            self.id.equation_tag(),
            self.params,
            self.residual,
            notes
        )
    }
}

impl Serialize for IdentityReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("IdentityReport", 6)?;
        s.serialize_field("id", &self.id.to_string())?;
        s.serialize_field("equation", &self.id.equation_tag())?;
        s.serialize_field("params", &self.params)?;
        s.serialize_field("verdict", &self.verdict.to_string())?;
        s.serialize_field("residual", &self.residual.to_string())?;
        s.serialize_field("notes", &self.notes)?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn verdict_tracks_residual() {
        let ok = IdentityReport::passing(IdentityId::Add11, "x".into(), 5, vec![]);
        assert_eq!(ok.verdict, Verdict::Pass);
        assert_eq!(ok.residual, Residual::ExactZero);
        let bad = IdentityReport::failing(
            IdentityId::Table1Row(13),
            "x".into(),
            5,
            Residual::FirstMismatch {
                n: 1,
                power: 0,
                lhs: int(1),
                rhs: int(2),
            },
            vec![],
        );
        assert_eq!(bad.verdict, Verdict::Fail);
    }

    #[test]
    fn all_zero_diagnostic_upgrades_to_pass() {
        let r = IdentityReport::diagnostic(
            IdentityId::Lah9999,
            "d".into(),
            4,
            vec![(3, int(0)), (5, int(0))],
            vec![],
        );
        assert_eq!(r.verdict, Verdict::Pass);
        let r = IdentityReport::diagnostic(
            IdentityId::Lah9999,
            "d".into(),
            4,
            vec![(3, rat(1, 2))],
            vec![],
        );
        assert_eq!(r.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn json_shape_is_stable() {
        let r = IdentityReport::passing(IdentityId::Expand1314, "k=1".into(), 3, vec!["n".into()]);
        let j = serde_json::to_string(&r).unwrap();
        assert_eq!(
            j,
            r#"{"id":"EXPAND_13_14","equation":"(13)/(14)","params":"k=1","verdict":"PASS","residual":"0","notes":["n"]}"#
        );
    }

    #[test]
    fn mismatch_pins_first_differing_coefficient() {
        let a = XPoly::new(vec![int(1), int(2)]);
        let b = XPoly::new(vec![int(1), int(3)]);
        match compare_poly_members(&[a.clone(), a.clone()], &[a, b]) {
            Residual::FirstMismatch { n, power, lhs, rhs } => {
                assert_eq!((n, power), (1, 1));
                assert_eq!((lhs, rhs), (int(2), int(3)));
            }
            other => panic!("expected mismatch, got {other:?}"),
        }
        assert_eq!(
            compare_scalar_members(&[int(5)], &[int(5)]),
            Residual::ExactZero
        );
    }

    #[test]
    fn display_names_are_the_wire_ids() {
        assert_eq!(IdentityId::Lah9999.to_string(), "LAH_9999");
        assert_eq!(IdentityId::Table1Row(4).to_string(), "TABLE1_ROW(4)");
        assert_eq!(IdentityId::Table1Row(4).equation_tag(), "Table 1, row 4");
    }
}
