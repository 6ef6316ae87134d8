use thiserror::Error;

use crate::subsets::Subset;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("basis list is empty")]
    EmptyBases,
    #[error("subset {0} does not have the required cardinality {1}")]
    CardinalityMismatch(Subset, usize),
    #[error("basis exchange fails for A={a}, B={b}, a={elem}: no b in B-A with A-a+b a basis")]
    ExchangeViolation { a: Subset, b: Subset, elem: usize },
    #[error("vertex set is not a matroid: exchange fails for {a}, {b} at element {elem}")]
    NotAMatroid { a: Subset, b: Subset, elem: usize },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("size guard exceeded: {0}")]
    LimitExceeded(String),
    #[error("operation requires a connected matroid")]
    NotConnected,
    #[error("{0} is not a split flacet of this matroid")]
    NotASplitFlacet(Subset),
    #[error("operation requires a split matroid")]
    NotSplit,
    #[error("operation requires a connected sparse paving matroid")]
    NotSparsePaving,
    #[error("subsets {0} and {1} differ by a single exchange; the family is not stable")]
    NotStable(Subset, Subset),
    #[error("line {line}: {reason}")]
    FormatError { line: usize, reason: String },
    #[error("matroids in the stream have mixed (rank, size) parameters")]
    MixedParameters,
    #[error("matrix has fewer independent rows than its row count")]
    RankDeficient,
    #[error("operation is undefined for k = 0 or k = n")]
    DegenerateParameters,
    #[error("internal certificate check failed: {0}")]
    CertificateFailure(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Exit-code class used by the command line tool: 2 validation,
    /// 3 guard, 4 internal certificate failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::LimitExceeded(_) => 3,
            Error::CertificateFailure(_) => 4,
            _ => 2,
        }
    }
}
