use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("inversion of zero")]
    InversionOfZero,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("cannot parse scalar `{0}`")]
    ParseScalar(String),
    #[error("ambient dimensions differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("bad shape: {0}")]
    BadShape(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("not associative at basis triple ({i}, {j}, {k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("unit law fails at basis index {index}")]
    UnitLawFails { index: usize },
    #[error("span not closed under multiplication: product of basis matrices {i} and {j}")]
    NotClosed { i: usize, j: usize },
    #[error("identity matrix is not in the span")]
    NoUnit,
    #[error("subspace is not a {0} ideal")]
    NotAnIdeal(&'static str),
    #[error("ideal equals the whole algebra")]
    ImproperIdeal,
    #[error("operation needs a finite field")]
    InfiniteField,
    #[error("{what} exceeds the size guard {limit}")]
    TooLarge { what: String, limit: u64 },
    #[error("first subspace is not contained in the second")]
    NotNested,
    #[error("ideal is not a maximal right ideal")]
    NotMaximal,
    #[error("structure constants are not integral")]
    NonIntegralConstants,
    #[error("witness column {column} is not central")]
    WitnessNotCentral { column: usize },
    #[error("radical certificate failed: {0}")]
    RadicalUncertified(String),
    #[error("internal certificate failed: {0}")]
    CertificateFailed(String),
    #[error("{0}")]
    Usage(String),
    #[error("algebra file: {0}")]
    SpecFile(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for failures of internal certificate validation, which indicate a
    /// bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::RadicalUncertified(_) | Error::CertificateFailed(_)
        )
    }
}
