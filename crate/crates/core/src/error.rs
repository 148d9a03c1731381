use thiserror::Error;

/// Coarse classification used by front ends to pick exit codes and error prefixes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Shapes or bases that do not fit together.
    Structural,
    /// Malformed text input.
    Syntax,
    /// A variable or knot name that does not resolve.
    Name,
    /// Value outside the domain of an operation.
    Domain,
    /// Hypotheses of the fold theorem are not met.
    Hypothesis,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("exponent vector has length {found}, basis has rank {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("basis mismatch: ({left}) vs ({right})")]
    BasisMismatch { left: String, right: String },

    #[error("invalid basis: {0}")]
    InvalidBasis(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{name}` (basis: {basis})")]
    UnknownVariable { name: String, basis: String },

    #[error("unknown knot `{name}`; available: {}", available.join(", "))]
    UnknownKnot { name: String, available: Vec<String> },

    #[error("Seifert matrix is not square: row {row} has {len} entries, expected {size}")]
    NonSquare { row: usize, len: usize, size: usize },

    #[error("not a knot Seifert matrix: det(V - V^T) = {det}, expected +1 or -1")]
    NotKnotSeifert { det: i64 },

    #[error("invalid Alexander polynomial: {0}")]
    InvalidAlexander(String),

    #[error("{0}")]
    Domain(String),

    #[error(
        "torsion Euler class: fold inapplicable; SW4(M x S1) = SW3(M) by the product formula"
    )]
    TorsionEulerClass,

    #[error("fold hypothesis not met: {0}")]
    Hypothesis(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::LengthMismatch { .. }
            | Error::BasisMismatch { .. }
            | Error::InvalidBasis(_)
            | Error::NonSquare { .. } => ErrorKind::Structural,
            Error::Syntax { .. } => ErrorKind::Syntax,
            Error::UnknownVariable { .. } | Error::UnknownKnot { .. } => ErrorKind::Name,
            Error::Overflow(_)
            | Error::NotKnotSeifert { .. }
            | Error::InvalidAlexander(_)
            | Error::Domain(_) => ErrorKind::Domain,
            Error::TorsionEulerClass | Error::Hypothesis(_) => ErrorKind::Hypothesis,
        }
    }

    /// Stable, greppable code for the error family.
    pub fn code(&self) -> &'static str {
        match self {
            Error::LengthMismatch { .. } | Error::BasisMismatch { .. } | Error::NonSquare { .. } => {
                "E-STRUCT"
            }
            Error::InvalidBasis(_) => "E-BASIS",
            Error::Overflow(_) => "E-OVERFLOW",
            Error::Syntax { .. } => "E-SYNTAX",
            Error::UnknownVariable { .. } => "E-NAME",
            Error::UnknownKnot { .. } => "E-LOOKUP",
            Error::NotKnotSeifert { .. } | Error::InvalidAlexander(_) => "E-KNOT",
            Error::Domain(_) => "E-DOMAIN",
            Error::TorsionEulerClass => "E-TORSION",
            Error::Hypothesis(_) => "E-HYPOTHESIS",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
