use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("need at least 4 points, got {0}")]
    TooFewPoints(usize),
    #[error("point {index} deviates from the fitted circle by {deviation:.3e} (relative)")]
    NotConcyclic { index: usize, deviation: f64 },
    #[error("all input points are collinear")]
    CollinearInput,
    #[error("points {0} and {1} coincide")]
    DuplicatePoint(usize, usize),
    #[error("invalid angle: {0}")]
    InvalidAngle(String),
    #[error("common denominator of the exact positions exceeds 2^62")]
    DenominatorOverflow,
    #[error("index {index} out of range for {n} points")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("arc endpoints must differ (both are {0})")]
    EqualIndices(usize),
    #[error("score vectors have different kinds")]
    KindMismatch,
    #[error("score vectors have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("ears at apices {0} and {1} cross")]
    CrossingEars(usize, usize),
    #[error("both ears have apex {0}")]
    SameApex(usize),
    #[error("{n} points exceed the brute-force limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("{n} is below the minimum of {min}")]
    TooSmall { n: usize, min: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("limit must be at least 1")]
    LimitIsZero,
    #[error("search frontier exceeded {0} branches")]
    SearchTooWide(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
