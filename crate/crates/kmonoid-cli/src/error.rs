use std::fmt;

/// Stable exit codes: 0 success / isomorphic, 1 not isomorphic, 2 parse or
/// input error, 3 unsupported operation, 4 verification failure.
pub const EXIT_OK: u8 = 0;
pub const EXIT_FALSE: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_UNSUPPORTED: u8 = 3;
pub const EXIT_VERIFY: u8 = 4;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn parse(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_PARSE,
            message: message.into(),
        }
    }

    pub fn unsupported(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_UNSUPPORTED,
            message: message.into(),
        }
    }

    pub fn verification(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_VERIFY,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.message)
    }
}

impl std::error::Error for CliError {}

impl From<kmonoid::Error> for CliError {
    fn from(e: kmonoid::Error) -> Self {
        use kmonoid::Error::*;
        match e {
            TrivialMonoid | NotIndexOne | Magnitude(_) | MinorGuard { .. }
            | EmbedDimensionTooSmall { .. } => Self::unsupported(e.to_string()),
            CoordOutOfRange { .. } | DimensionMismatch { .. } | EmptyCoordSet
            | EmptyGenerators | ZeroGenerator | ZeroElement | ShapeMismatch { .. }
            | ZeroAmbientDimension => Self::parse(e.to_string()),
            InsufficientRank { .. } => Self::verification(e.to_string()),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
