//! Mechanical verification of the identity battery satisfied by the unified
//! family: structural equations in the argument, multiplication theorems,
//! connection formulas against classical bases, and the reciprocal
//! falling-factorial expansion.
//!
//! Every checker builds both sides of its identity through independent code
//! paths, compares them coefficient by coefficient in exact arithmetic, and
//! seals the outcome into an [`IdentityReport`](crate::report::IdentityReport).
//! A check passes only when the residual is exactly zero; anything else is a
//! failure, except for the one expansion whose right side is an infinite
//! series, which reports truncated residuals as diagnostics.
//!
//! Each public checker has a crate-private `_with` twin taking an engine, so
//! the fault-injection battery in [`suite`] can rerun the whole collection
//! against a deliberately broken engine and prove the checks are not
//! tautologies.

pub mod connection;
pub mod lah_check;
pub mod multiplication;
pub mod structural;
pub mod suite;

pub use suite::{mutation_smoke, run_suite, Suite, SuiteConfig, SuiteOutcome};
