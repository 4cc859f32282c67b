use thiserror::Error;

/// A pair of vertex indices that tie at the same distance.
pub type Pair = (usize, usize);

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("need at least 2 points, got {0}")]
    TooFewPoints(usize),
    #[error("dimension mismatch: expected {expected}, found {found} (row {index})")]
    DimensionMismatch {
        expected: usize,
        found: usize,
        index: usize,
    },
    #[error("coordinate of point {index} is not finite")]
    NonFinite { index: usize },
    #[error("points {0} and {1} coincide")]
    DuplicatePoint(usize, usize),
    #[error("distance table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("distance table is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("negative distance at ({0}, {1})")]
    NegativeDistance(usize, usize),
    #[error("nonzero diagonal entry at ({0}, {0})")]
    NonZeroDiagonal(usize),
    #[error("zero off-diagonal distance at ({0}, {1})")]
    ZeroOffDiagonal(usize, usize),
    #[error("triangle inequality violated: d({i},{k}) > d({i},{j}) + d({j},{k})")]
    TriangleViolation { i: usize, j: usize, k: usize },
    #[error("tolerance must be finite and nonnegative, got {0}")]
    InvalidTolerance(f64),
    #[error("distance set has no positive value")]
    DegenerateDistanceSet,

    #[error("invalid edge {{{0}, {1}}}")]
    InvalidEdge(usize, usize),
    #[error("edge weight must be positive and finite, got {0}")]
    InvalidWeight(f64),
    #[error("graph is not connected")]
    NotConnected,
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("not a permutation of 0..{0}")]
    InvalidBijection(usize),
    #[error("norm mismatch between point clouds")]
    NormMismatch,

    #[error("input too large: {size} exceeds limit {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("epsilon must be positive and finite, got {0}")]
    InvalidEpsilon(f64),
    #[error("no distance-separated perturbation after {attempts} attempts; last tie: {tie:?}")]
    ExhaustedAttempts {
        attempts: usize,
        tie: Option<(Pair, Pair)>,
    },
    #[error("infeasible model: {0}")]
    InfeasibleModel(String),
    #[error("unsupported request: {0}")]
    Unsupported(String),

    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),

    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// Process exit code for this error class.
    pub fn exit_code(&self) -> i32 {
        use Error::*;
        match self {
            Parse(_) | Io(_) => 2,
            TooFewPoints(_)
            | DimensionMismatch { .. }
            | NonFinite { .. }
            | DuplicatePoint(..)
            | NotSquare { .. }
            | NotSymmetric(..)
            | NegativeDistance(..)
            | NonZeroDiagonal(_)
            | ZeroOffDiagonal(..)
            | TriangleViolation { .. }
            | InvalidTolerance(_)
            | DegenerateDistanceSet
            | InvalidEdge(..)
            | InvalidWeight(_)
            | NotConnected
            | SizeMismatch(..)
            | InvalidBijection(_)
            | NormMismatch => 3,
            TooLarge { .. }
            | InvalidEpsilon(_)
            | ExhaustedAttempts { .. }
            | InfeasibleModel(_)
            | Unsupported(_) => 4,
            InternalInvariantViolation(_) => 5,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
