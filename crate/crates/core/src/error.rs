use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension {0} is too small, exterior 3-forms need n >= 3")]
    DimensionTooSmall(usize),
    #[error("index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("triple ({0}, {1}, {2}) is not strictly increasing")]
    UnorderedTriple(usize, usize, usize),
    #[error("vector of length {got} where {expected} was expected")]
    LengthMismatch { expected: usize, got: usize },
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("transformation matrix is singular")]
    SingularTransform,
    #[error("unknown catalog entry `{0}`")]
    UnknownCatalogName(String),
    #[error("invalid catalog parameters for `{name}`: {reason}")]
    InvalidCatalogParams { name: String, reason: String },
    #[error("plane parameters must satisfy t0 + t1 + t2 = 1 (got sum {0})")]
    PlaneParametersNotAffine(String),
    #[error("`{0}` is not a rational number")]
    InvalidRational(String),
    #[error("{0} is not a prime in (2^20, 2^32)")]
    InvalidPrime(u64),
    #[error("the two primes must be distinct")]
    RepeatedPrime,
    #[error("malformed form file: {0}")]
    Schema(String),
    #[error("tensor degree {0} is below 2")]
    DegreeTooSmall(usize),
    #[error("relation has degree {0}, quadratic presentations need degree 2")]
    NotQuadratic(usize),
    #[error("tensor of degree {got} where degree {expected} was expected")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("degree {0} is beyond the supported maximum of 6")]
    DegreeTooLarge(usize),
    #[error("generator index {index} out of range 1..={count}")]
    GeneratorOutOfRange { index: usize, count: usize },
    #[error("dual-prime certificate failed at degree {degree}: {first} vs {second}")]
    CertificateMismatch { degree: usize, first: usize, second: usize },
    #[error("derivation is not defined on generator {0}")]
    IncompleteDerivation(usize),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
