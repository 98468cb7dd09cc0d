use thiserror::Error;

use crate::ring::RingId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong in the library.
///
/// The variants fall in three families, which the CLI maps onto exit codes:
/// input that cannot be read ([`Error::is_parse`]), arguments that violate an
/// operation's precondition, and failures of internal self-certification
/// ([`Error::is_internal`]), which indicate a bug or a violated ring
/// assumption rather than bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("both arguments are zero")]
    BothZero,
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(RingId, RingId),
    #[error("empty input")]
    EmptyInput,
    #[error("{dividend} is not divisible by {divisor}")]
    NotDivisible { dividend: String, divisor: String },
    #[error("division by the zero element")]
    ZeroDivisor,
    #[error("coefficient of x^0 is {0}, which is not an integer")]
    NonIntegerConstant(String),
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("arguments are not coprime")]
    NotCoprime,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no Gelfand element among a + b*t for t in {{0, 1}} (a = {a}, b = {b})")]
    ShiftNotFound { a: String, b: String },
    #[error("gcd(d, a^k) did not stabilize within {0} iterations; input is likely not a Gelfand element")]
    StabilizationFailure(usize),
    #[error("internal certification failure: {0}")]
    Certification(String),
    #[error("elimination exceeded its sweep bound of {0}")]
    SweepBoundExceeded(usize),
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("modulus {0} is too small (need n >= 2)")]
    ModulusTooSmall(String),
    #[error("modulus {0} is too large for brute-force enumeration")]
    ModulusTooLarge(String),
    #[error("{stage}: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn at(stage: &'static str) -> impl FnOnce(Error) -> Error {
        move |source| Error::Stage {
            stage,
            source: Box::new(source),
        }
    }

    /// Innermost error, with stage labels stripped.
    pub fn root(&self) -> &Error {
        match self {
            Error::Stage { source, .. } => source.root(),
            e => e,
        }
    }

    pub fn is_parse(&self) -> bool {
        matches!(
            self.root(),
            Error::Syntax { .. } | Error::NonIntegerConstant(_)
        )
    }

    pub fn is_internal(&self) -> bool {
        matches!(
            self.root(),
            Error::ShiftNotFound { .. }
                | Error::StabilizationFailure(_)
                | Error::Certification(_)
                | Error::SweepBoundExceeded(_)
        )
    }
}
