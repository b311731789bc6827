use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("value {value} is not representable in {field}")]
    NotRepresentable { value: String, field: String },

    #[error("cannot parse exact scalar from {0:?}")]
    ParseScalar(String),

    #[error("matrix shape mismatch: expected {expected} entries, got {got}")]
    Shape { expected: usize, got: usize },

    #[error("column index out of range")]
    ColumnOutOfRange,

    #[error("element index out of range")]
    ElementOutOfRange,

    #[error("invalid projective point")]
    InvalidProjectivePoint,

    #[error("duplicate projective point at positions {0} and {1}")]
    DuplicatePoint(usize, usize),

    #[error("invalid fat point scheme: {0}")]
    InvalidScheme(String),

    #[error("{what}: ground set too large ({size} > {limit})")]
    Guard {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("count matroid undefined: requires k > p")]
    CountMatroidUndefined,

    #[error("pivot must lie outside the restricted ground set")]
    PivotInGround,

    #[error("pivot must lie in the ground set")]
    PivotNotInGround,

    #[error("pivot must not be a loop")]
    PivotIsLoop,

    #[error("matroids are defined on different ground sets")]
    GroundMismatch,

    #[error("cardinality hypothesis violated on subset {witness:?}")]
    HypothesisViolated { witness: Vec<usize> },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("prime field too small for derivative conditions at degree {degree} (p = {prime})")]
    PrimeTooSmall { prime: u64, degree: usize },

    #[error("multiplicity {requested} exceeds original multiplicity {original} at point {index}")]
    MultiplicityExceeded {
        index: usize,
        requested: u32,
        original: u32,
    },

    #[error("point must be disjoint from Z")]
    PointInSupport,

    #[error("t too small for example hypothesis")]
    ExampleTooSmall,

    #[error("could not sample a generic configuration after {0} attempts")]
    GenericityFailed(usize),

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub fn guard(what: &'static str, size: usize, limit: usize) -> Self {
        Error::Guard { what, size, limit }
    }

    /// True for errors raised by a size guard rather than by invalid input
    /// or a failed check.
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::Guard { .. })
    }
}
