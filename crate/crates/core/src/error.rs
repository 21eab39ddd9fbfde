use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parts {0:?} are not a partition")]
    InvalidPartition(Vec<usize>),
    #[error("invalid Frobenius coordinates ({arms:?} | {legs:?})")]
    InvalidFrobenius { arms: Vec<usize>, legs: Vec<usize> },
    #[error("{inner} is not contained in {outer}")]
    Containment { outer: String, inner: String },
    #[error("variable count mismatch: {0} vs {1}")]
    VarCountMismatch(usize, usize),
    #[error("coefficient {coeff} is not divisible by {divisor}")]
    NonExactDivision { coeff: String, divisor: String },
    #[error("evaluation point has a zero coordinate")]
    ZeroCoordinate,
    #[error("evaluation point has {got} coordinates, expected {expected}")]
    PointLength { expected: usize, got: usize },
    #[error("denominator vanishes at this point")]
    DegeneratePoint,
    #[error("{0}")]
    Precondition(String),
    #[error("invalid path family: {0}")]
    InvalidFamily(String),
    #[error("family has no crossing or trapped position")]
    NoSite,
    #[error("malformed family: {0}")]
    MalformedFamily(String),
    #[error("cannot parse polynomial: {0}")]
    PolyParse(String),
}

/// Fails with a precondition message naming the violated inequality.
pub(crate) fn require(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Precondition(what()))
    }
}
