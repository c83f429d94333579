use thiserror::Error;

/// Errors raised by the algebra substrate and the closure constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation `{symbol}` expects a table of {expected} entries, found {found}")]
    ArityMismatch {
        symbol: String,
        expected: usize,
        found: usize,
    },
    #[error("operation `{symbol}` entry {index} is {value}, outside the carrier of size {size}")]
    ValueOutOfRange {
        symbol: String,
        index: usize,
        value: usize,
        size: usize,
    },
    #[error("duplicate operation symbol `{0}`")]
    DuplicateSymbol(String),
    #[error("unknown operation symbol `{0}`")]
    UnknownSymbol(String),
    #[error("operation `{symbol}` has arity {found}, expected {expected}")]
    WrongArity {
        symbol: String,
        expected: usize,
        found: usize,
    },
    #[error("carrier of size {size} exceeds the limit of {limit}")]
    SizeOverflow { size: usize, limit: usize },
    #[error("carrier must have at least one element")]
    EmptyCarrier,
    #[error("element {element} is outside the carrier of size {size}")]
    ElementOutOfRange { element: usize, size: usize },
    #[error("variable x{0} is not bound")]
    UnboundVariable(usize),
    #[error("carrier sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("no distinguished element: the algebra has no top and none was given")]
    MissingTop,
    #[error("carrier of size {size} is too large for exhaustive enumeration (limit {limit})")]
    CarrierTooLarge { size: usize, limit: usize },
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("invalid prime list: {0}")]
    InvalidPrimeList(String),
    #[error("not a semiring: {0}")]
    NotASemiring(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
