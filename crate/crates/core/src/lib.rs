//! Positivity obstructions to unitary categorification of fusion rings.
//!
//! The crate builds the primary, localized, reduced and twisted criterion
//! matrices of a fusion ring (or of partial local fusion data), and decides
//! positive semidefiniteness with certified witnesses.

// `!(x > 0.0)` rejects NaN on purpose; index loops mirror the formulas.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

pub mod cli;
pub mod config;
pub mod criteria;
pub mod fixtures;
pub mod io;
pub mod obstructions;
pub mod report;
pub mod ring;
pub mod schur;
pub mod spectra;

pub use config::EvalConfig;
pub use criteria::{CriteriaError, CriterionSpec, LocalData, TwistPattern};
pub use fixtures::Fixture;
pub use ring::{DimensionVector, FusionCoeffs, FusionRing, GradingMap, RingError};
pub use spectra::{PsdVerdict, SymMatrix, Witness};
