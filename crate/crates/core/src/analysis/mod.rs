//! Predicate checkers, classifiers and the brute-force oracle.
//!
//! Every checker scans the domain in `enc` order and reports the first
//! counterexample it meets, so witnesses are stable across runs.

mod classify;
pub(crate) mod graph;
mod oracle;
mod proper;
mod tight;
mod uniform;

use thiserror::Error;

use crate::point::{FinitePoint, PointError};
use crate::table::TableError;

pub use classify::{
    classify_2tight, coordinate_violation, extract_principal_form, mix_closure_check,
    CoordinateViolation, FactorClassification, PrincipalForm, PrincipalOutcome, TwoTightOutcome,
};
pub use oracle::{enumerate_proper, ProperColorings, DEFAULT_BUDGET};
pub use proper::{
    is_lawful, is_maximal_lawful, is_proper, lawful_counterexample, proper_counterexample,
};
pub use tight::{
    c_tight_counterexample, classes_maximal_lawful, is_c_tight, is_minimal, is_nu_tight, is_tight,
    minimality_counterexample, nu_tight_counterexample, tight_counterexample, unreachable_color,
    CTightViolation, NuTightnessGap, TightnessGap,
};
pub use uniform::{
    is_strongly_uniform, is_uniformity_witness, is_weakly_uniform, weak_uniformity_witness,
};

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Table(#[from] TableError),
    #[error(transparent)]
    Point(#[from] PointError),
    #[error(
        "coloring is not proper: {first} and {second} are totally different and share a color"
    )]
    NotProper {
        first: FinitePoint,
        second: FinitePoint,
    },
    #[error("operation needs mu = kappa, got mu={mu}, kappa={kappa}")]
    MuNotKappa { mu: usize, kappa: usize },
    #[error("operation needs mu >= kappa, got mu={mu}, kappa={kappa}")]
    MuBelowKappa { mu: usize, kappa: usize },
    #[error("enumeration exceeded its budget of {budget} search steps")]
    BudgetExceeded { budget: u64 },
    #[error("coordinate {index} of the mix point takes none of the given points' values")]
    SelectionViolated { index: usize },
    #[error("at least one point is required")]
    NoPoints,
}

pub(crate) fn require_proper(t: &crate::table::ColoringTable) -> Result<(), AnalysisError> {
    match proper_counterexample(t) {
        Some((first, second)) => Err(AnalysisError::NotProper { first, second }),
        None => Ok(()),
    }
}
