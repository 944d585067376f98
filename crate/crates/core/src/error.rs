use thiserror::Error;

/// Errors raised by the exact constructions in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A gamma function or Pochhammer symbol was evaluated at a pole.
    #[error("pole: {0}")]
    Pole(String),

    /// The argument lies outside the exactly representable lattice.
    #[error("unsupported argument: {0}")]
    UnsupportedArgument(String),

    /// Addition of values carrying different powers of pi.
    #[error("cannot add pi^({left}/2) and pi^({right}/2) values")]
    Grade { left: i64, right: i64 },

    #[error("division by zero")]
    DivZero,

    /// The input polynomial mixes even and odd powers.
    #[error("polynomial does not have pure parity")]
    Parity,

    /// a = b = 0: the leading part of the difference equation vanishes.
    #[error("degenerate family: |a| + |b| must be nonzero")]
    DegenerateFamily,

    /// A denominator of a closed form vanishes for these parameters.
    #[error("degenerate parameter: {0}")]
    DegenerateParameter(String),

    #[error("hypergeometric series does not terminate")]
    NonTerminating,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
