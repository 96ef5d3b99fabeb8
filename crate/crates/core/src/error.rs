use thiserror::Error;

use crate::clifford::Signature;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid signature ({k},{l}): need k + l >= 1")]
    InvalidSignature { k: usize, l: usize },

    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: Signature, right: Signature },

    #[error("{kind} representation needs {expected} dimension, got m = {m}")]
    ParityMismatch { kind: &'static str, expected: &'static str, m: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is singular")]
    Singular,

    #[error("element does not normalize the frame: {0}")]
    NotNormalizing(String),

    #[error("not a Lipschitz element: {0}")]
    NotLipschitz(String),

    #[error("scale parameters must be nonzero")]
    ZeroScale,

    #[error("invalid tangent data: {0}")]
    InvalidPair(String),

    #[error("hermitean module needs even real dimension, got {0}")]
    OddDimension(usize),

    #[error("frame group closure exceeded {0} elements")]
    ClosureBound(usize),

    #[error("catalog record `{record}`: {reason}")]
    Catalog { record: String, reason: String },

    #[error("internal construction error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
