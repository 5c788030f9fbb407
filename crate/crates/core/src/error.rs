use thiserror::Error;

use crate::algebra::Basis;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed textual input; `position` is a 0-based byte offset.
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("non-dotted part must be at least 1")]
    ZeroPlainPart,

    #[error("no dotted composition has D = {d:?} and F = {f:?} in degree ({n}, {m})")]
    InconsistentSets {
        n: u32,
        m: u32,
        d: Vec<u32>,
        f: Vec<u32>,
    },

    #[error("basis mismatch: {left} vs {right}")]
    BasisMismatch { left: Basis, right: Basis },

    #[error("operation `{op}` is not available in the {basis} basis")]
    UnsupportedBasis { op: &'static str, basis: Basis },

    #[error("{0} is not a column")]
    NotAColumn(String),

    #[error("dotted permutation repeats the non-dotted value {0}")]
    RepeatedValue(u32),

    #[error("polynomials live in different rings ({left} vs {right} variables)")]
    VariableCountMismatch { left: usize, right: usize },

    #[error("polynomial is not quasisymmetric: {0}")]
    NotQuasisymmetric(String),

    #[error("{vars} variables cannot faithfully represent compositions of length {needed}")]
    FaithfulnessExceeded { vars: usize, needed: usize },

    #[error("tableau is not dot-standard")]
    NotDotStandard,

    #[error("incompatible shapes: {0}")]
    IncompatibleShape(String),

    #[error("invalid superpartition: {0}")]
    InvalidSuperpartition(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}
