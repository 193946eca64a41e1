use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid degree {0}: must be at least 1")]
    InvalidDegree(usize),

    #[error("degree {0} exceeds the supported maximum of {max}", max = crate::config::MAX_DEGREE)]
    DegreeTooLarge(usize),

    #[error("invalid transposition ({i} {j}) in S_{n}")]
    InvalidTransposition { i: usize, j: usize, n: usize },

    #[error("image list {0:?} is not a bijection")]
    NotABijection(Vec<usize>),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("subgroup S_{k} is not in the chain S_2 ⊂ … ⊂ S_{n}")]
    InvalidSubgroup { k: usize, n: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown state label '{0}'")]
    UnknownLabel(String),

    #[error("duplicate state label '{0}'")]
    DuplicateLabel(String),

    #[error("ordering is not a permutation of orbit: {0}")]
    OrderingMismatch(String),

    #[error("state permutation ({a} {b}) maps the orbit outside itself: '{a}' occurs {count_a} times, '{b}' occurs {count_b} times")]
    StateOperatorEscapesOrbit {
        a: String,
        b: String,
        count_a: usize,
        count_b: usize,
    },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("subspace is not invariant: image of basis vector {witness} leaves the subspace")]
    NotInvariant { witness: usize },

    #[error("eigenvalue chain {0:?} is not realizable by a standard tableau")]
    InvalidChain(Vec<i64>),

    #[error("cannot normalize the zero vector")]
    ZeroVector,

    #[error("operator {0} has a non-integral spectrum on a refined subspace")]
    NonIntegralSpectrum(String),

    #[error("state operator {0} does not preserve the joint eigenspaces of the operators applied before it")]
    IncompatibleStateOperator(String),

    #[error("internal error: {0}")]
    Internal(String),
}
