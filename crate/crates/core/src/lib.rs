//! Hilbert-series classification of rank one torsion free modules on
//! (quantum) projective planes.
//!
//! The crate is layered bottom-up:
//!
//! - [`series`]: exact Laurent polynomials and truncated power series.
//! - [`castelnuovo`]: Castelnuovo polynomials, their diagrams and the
//!   distinct-part partition bijection.
//! - [`hilbert`]: admissible Hilbert series, numerators and the
//!   coefficientwise order.
//! - [`betti`]: legal Betti numbers, ladders and resolution counts.
//! - [`witness`]: random ladder-supported matrices over `F_p[x,y,z]` whose
//!   cokernels realize a target Hilbert function.
//! - [`strata`]: stratum dimensions and the comparability poset.
//! - [`tables`]: per-weight tables in text, JSON and CSV.
//! - [`checks`]: the identity suite behind `hilbstrata check`.

pub mod betti;
pub mod castelnuovo;
pub mod checks;
mod error;
pub mod hilbert;
pub mod series;
pub mod strata;
pub mod tables;
pub mod witness;

pub use betti::{BettiPair, ConditionVerdicts, Ladder};
pub use castelnuovo::CastelnuovoPoly;
pub use error::{Error, Result};
pub use hilbert::{AdmissibleSeries, SeriesDecomposition, SeriesOrder};
pub use series::{LaurentPoly, TruncatedSeries};
pub use strata::{StrataPoset, StratumRecord};
pub use tables::{Format, Table};
pub use witness::{Support, WitnessReport, WitnessRun};
