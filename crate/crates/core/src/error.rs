use thiserror::Error;

/// Errors raised by matroid construction and the algebraic routines built on it.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OsxError {
    #[error("ground set size {0} is outside the supported range 1..={max}", max = crate::matroid::MAX_GROUND_SET)]
    GroundSetSize(usize),

    #[error("point {point} is outside the ground set 1..={n}")]
    PointOutOfRange { point: usize, n: usize },

    #[error("repeated point {0} in a subset")]
    RepeatedPoint(usize),

    #[error("circuit {0:?} has at most two elements; the matroid would not be simple")]
    NonSimple(Vec<usize>),

    #[error("circuit {inner:?} is contained in circuit {outer:?}")]
    NestedCircuits { inner: Vec<usize>, outer: Vec<usize> },

    #[error("circuit elimination fails for {0:?} and {1:?} at element {2}")]
    CircuitElimination(Vec<usize>, Vec<usize>, usize),

    #[error("line {0:?} has fewer than three points")]
    ShortLine(Vec<usize>),

    #[error("lines {0:?} and {1:?} share two or more points")]
    OverlappingLines(Vec<usize>, Vec<usize>),

    #[error("parts do not form a partition of 1..={n}")]
    NotAPartition { n: usize },

    #[error("{0:?} is dependent")]
    Dependent(Vec<usize>),

    #[error("{0:?} is not an nbc-set")]
    NotNbc(Vec<usize>),

    #[error("flag is not a maximal chain of flats")]
    NotMaximalFlag,

    #[error("flats have rank {lower} and {upper}; expected a rank gap of 2")]
    RankGap { lower: usize, upper: usize },

    #[error("expected degree {expected}, found degree {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("operation is undefined on the zero element")]
    ZeroElement,

    #[error("element is not homogeneous")]
    Inhomogeneous,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("ordered base {0:?} is not a vertex of the tree")]
    NotInGamma(Vec<usize>),

    #[error("{0:?} does not lie in nbc' (needs at least two nbc-base extensions)")]
    NotInNbcPrime(Vec<usize>),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("permutation {0:?} is not an automorphism of the matroid")]
    NotAutomorphism(Vec<usize>),

    #[error("ground set of size {n} exceeds the enumeration limit {max}")]
    TooLarge { n: usize, max: usize },

    #[error("check `{0}` failed")]
    CheckFailed(String),

    #[error("malformed matroid file: {0}")]
    Input(String),
}

pub type Result<T, E = OsxError> = std::result::Result<T, E>;
