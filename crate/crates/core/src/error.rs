use thiserror::Error;

use crate::exactmath::{ExprError, RationalParseError, SolveError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("delta must be 1 or -1, got {0}")]
    BadDelta(i64),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("basis index {index} out of range for rank {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("duplicate basis name `{0}`")]
    DuplicateName(String),
    #[error("unknown basis name `{0}`")]
    UnknownName(String),
    #[error("grading violation in {location}: target `{target}` has the wrong parity")]
    Grading { location: String, target: String },
    #[error("{what} is not parity-preserving: entry ({row}, {col}) links opposite parities")]
    NotEven { what: String, row: usize, col: usize },
    #[error("variable `{var}` not allowed in {location}")]
    ForbiddenVariable { var: String, location: String },
    #[error("skew-symmetry violated on diagonal entry {0}")]
    DiagonalSkew(String),
    #[error("{0} does not commute with the twist map")]
    NotAlphaCompatible(String),
    #[error("delta mismatch: {0} vs {1}")]
    DeltaMismatch(i64, i64),
    #[error("twist map is not invertible (determinant is not a nonzero constant)")]
    NotRegular,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid input structure: {0}")]
    Invalid(String),
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Rational(#[from] RationalParseError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

pub type Result<T> = std::result::Result<T, Error>;
