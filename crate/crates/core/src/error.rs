use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a Castelnuovo polynomial: {reason} at index {index}")]
    NonCastelnuovo { index: usize, reason: &'static str },

    #[error("not an admissible numerator: {0}")]
    NotAdmissible(String),

    #[error("coefficient of degree {degree} requested outside the window 0..={window}")]
    OutOfWindow { degree: i64, window: usize },

    #[error("series with negative lowest degree {0} cannot be expanded as a power series")]
    NegativeDegree(i64),

    #[error("expansion window {window} is smaller than the required {required}")]
    WindowTooSmall { window: usize, required: usize },

    #[error("rank {rank} numerator has infinitely many Betti patterns; supply a degree cutoff")]
    UnboundedEnumeration { rank: String },

    #[error("degree cutoff {cutoff} is below the numerator degree {degree}")]
    CutoffTooLow { cutoff: i64, degree: i64 },

    #[error("invariants differ: {0} vs {1}")]
    InvariantMismatch(u64, u64),

    #[error("Betti numbers violate the ladder conditions")]
    IllegalBetti,

    #[error("support pattern infeasible: cell ({alpha}, {beta}) lies outside the ladder")]
    InfeasibleSupport { alpha: usize, beta: usize },

    #[error("{0} is not an odd prime below 2^31")]
    BadPrime(u64),

    #[error("value does not fit the target integer type: {0}")]
    Overflow(String),

    #[error("unknown format `{0}`")]
    UnknownFormat(String),
}
