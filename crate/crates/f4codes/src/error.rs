use std::fmt;

/// Errors across construction, verification, and search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Support position outside [1, n] or duplicated.
    BadSupport(String),
    /// Circulant pair invariant violated (diagonal entry or non-symmetric A).
    BadPair(String),
    /// Adjacency matrix is not symmetric with zero diagonal.
    BadAdjacency(String),
    /// Generator list empty or of mixed lengths.
    BadGenerators(String),
    /// Vector length does not match the code length.
    LengthMismatch { expected: usize, got: usize },
    /// 2^rank exceeds the configured enumeration budget.
    BudgetExceeded { rank: usize, budget: u64 },
    /// Type classification needs enumeration beyond the budget.
    TypeUndecided { rank: usize, budget: u64 },
    /// Operation requires a self-dual code.
    NotSelfDual,
    /// The code has no nonzero codeword (rank 0).
    TrivialCode,
    /// Certificate failed re-verification.
    BadCertificate(String),
    /// Malformed code-spec line / serialized document.
    Parse(String),
    /// Search space exceeds the configured cap.
    SpaceExceeded { bits: u32, cap_bits: u32 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::BadSupport(m) => write!(f, "bad support: {m}"),
            Error::BadPair(m) => write!(f, "bad circulant pair: {m}"),
            Error::BadAdjacency(m) => write!(f, "bad adjacency matrix: {m}"),
            Error::BadGenerators(m) => write!(f, "bad generators: {m}"),
            Error::LengthMismatch { expected, got } => {
                write!(f, "length mismatch: expected {expected}, got {got}")
            }
            Error::BudgetExceeded { rank, budget } => write!(
                f,
                "enumeration budget exceeded: 2^{rank} combinations, budget {budget}"
            ),
            Error::TypeUndecided { rank, budget } => write!(
                f,
                "type undecided: enumeration of 2^{rank} words exceeds budget {budget}"
            ),
            Error::NotSelfDual => write!(f, "code is not self-dual"),
            Error::TrivialCode => write!(f, "code has no nonzero codeword"),
            Error::BadCertificate(m) => write!(f, "bad certificate: {m}"),
            Error::Parse(m) => write!(f, "parse error: {m}"),
            Error::SpaceExceeded { bits, cap_bits } => {
                write!(f, "search space of 2^{bits} candidates exceeds cap 2^{cap_bits}")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
