use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every domain error raised by the library.
///
/// Messages are single lines so the CLI can print them verbatim.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("grade {0} lies outside [0, 1]")]
    GradeOutOfRange(f64),

    #[error("duplicate label `{0}` in universe")]
    DuplicateLabel(String),

    #[error("expected {expected} grades, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("universes differ at position {position}: `{left}` vs `{right}`")]
    UniverseMismatch {
        position: usize,
        left: String,
        right: String,
    },

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("empty universe has no height")]
    EmptyUniverse,

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid interval [{lo}, {hi}): {reason}")]
    InvalidInterval { lo: f64, hi: f64, reason: String },

    #[error("interval [{lo}, {hi}) lies outside the domain [{x_min}, {x_max}]")]
    OutsideDomain {
        lo: f64,
        hi: f64,
        x_min: f64,
        x_max: f64,
    },

    #[error("domain mismatch: {0}")]
    DomainMismatch(String),

    #[error("invalid measure: {0}")]
    InvalidMeasure(String),

    #[error(
        "measure is not monotone: mu({smaller}) = {smaller_value} > mu({larger}) = {larger_value}"
    )]
    NotMonotone {
        smaller: String,
        smaller_value: f64,
        larger: String,
        larger_value: f64,
    },

    #[error("table has no entry for subset {0}")]
    MissingTableEntry(String),

    #[error("expected a {expected} measure, got {got}")]
    WrongMeasureKind {
        expected: &'static str,
        got: &'static str,
    },

    #[error("parts {first} and {second} overlap")]
    OverlappingParts { first: usize, second: usize },

    #[error("function is identically zero; no plausible event to normalize against")]
    ZeroFunction,

    #[error("universe of size {size} exceeds the limit of {limit}")]
    UniverseTooLarge { size: usize, limit: usize },

    #[error("state is not normalized: squared norm {0}")]
    NotNormalized(f64),

    #[error("matrix is not unitary (deviation {0:e})")]
    NotUnitary(f64),

    #[error("no membership mass to sample from")]
    NoMass,

    #[error("symbol `{symbol}` at position {position} is not in the alphabet")]
    ForeignSymbol { symbol: char, position: usize },

    #[error("alphabets differ: `{0}` vs `{1}`")]
    AlphabetMismatch(String, String),

    #[error("invalid wavefunction: {0}")]
    InvalidWavefunction(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
