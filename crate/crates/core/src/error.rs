use std::io;

/// Errors produced by semigroup, ideal and search operations.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("empty generator list")]
    EmptyInput,

    #[error("semigroup generators must be positive, got {0}")]
    NonPositiveGenerator(i64),

    #[error("generators have gcd {0}; the complement in N would be infinite")]
    NonCoprime(i64),

    #[error("multiplicity {0} exceeds the supported Apery table size")]
    MultiplicityTooLarge(i64),

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("relative ideals belong to different semigroups")]
    ParentMismatch,

    #[error("expected exactly 4 generators, got {0}")]
    WrongArity(usize),

    #[error("generating set is not unitary")]
    NotUnitary,

    #[error("pair is not a 2x2 brick (k={k}, m={m}, brick={is_brick})")]
    NotTwoByTwo { k: usize, m: usize, is_brick: bool },

    #[error("smallest ideal generator is {0}, expected 0")]
    ZeroNotGenerator(i64),

    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),

    #[error("malformed record: {0}")]
    MalformedRecord(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Error {
    /// Stable machine-readable name of the error kind.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::EmptyInput => "EmptyInput",
            Error::NonPositiveGenerator(_) => "NonPositiveGenerator",
            Error::NonCoprime(_) => "NonCoprime",
            Error::MultiplicityTooLarge(_) => "MultiplicityTooLarge",
            Error::Overflow(_) => "Overflow",
            Error::ParentMismatch => "ParentMismatch",
            Error::WrongArity(_) => "WrongArity",
            Error::NotUnitary => "NotUnitary",
            Error::NotTwoByTwo { .. } => "NotTwoByTwo",
            Error::ZeroNotGenerator(_) => "ZeroNotGenerator",
            Error::InvalidConfig(_) => "InvalidConfig",
            Error::MalformedRecord(_) => "MalformedRecord",
            Error::Io(_) => "IoFailure",
        }
    }
}

impl From<csv::Error> for Error {
    fn from(err: csv::Error) -> Self {
        if err.is_io_error() {
            match err.into_kind() {
                csv::ErrorKind::Io(io) => Error::Io(io),
                other => Error::MalformedRecord(format!("{other:?}")),
            }
        } else {
            Error::MalformedRecord(err.to_string())
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
