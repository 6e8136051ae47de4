use thiserror::Error;

use crate::shapes::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a partition: {0:?} is not weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("{inner} is not contained in {outer}")]
    Containment { outer: Partition, inner: Partition },

    #[error("invalid mark ({0}, {1})")]
    InvalidMark(usize, usize),

    #[error("invalid pattern: {0}")]
    InvalidPattern(String),

    #[error("filling is not of straight shape (inner shape {0})")]
    NotStraightShape(Partition),

    #[error("filling is not of rotated shape C(lambda)")]
    NotRotatedShape,

    #[error("malformed filling: {0}")]
    MalformedFilling(String),

    #[error("entry {0} out of range (allowed 1..={1})")]
    EntryOutOfRange(u32, u32),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),

    #[error("degree mismatch: |nu| = {nu} but |lambda| + |mu| = {sum}")]
    Degree { nu: usize, sum: usize },

    #[error("polynomials live in different numbers of variables ({0} vs {1})")]
    DimensionMismatch(usize, usize),

    #[error("polynomial is not symmetric")]
    NotSymmetric,

    #[error("nonzero residual after peeling, lowest monomial {monomial:?}")]
    ResidualNonzero { monomial: Vec<u32> },
}

pub type Result<T> = std::result::Result<T, Error>;
