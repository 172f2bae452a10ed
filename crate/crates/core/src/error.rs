use thiserror::Error;

pub type Result<T> = std::result::Result<T, WittError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WittError {
    #[error("division is not exact: {dividend} / {divisor}")]
    DivisionInexact { dividend: String, divisor: String },

    #[error("{element} is not a prime element of {ring}")]
    NotPrimeElement { element: String, ring: String },

    #[error("operands live in different contexts: {0}")]
    ContextMismatch(String),

    #[error("not in the ghost image: component {index} fails ({detail})")]
    CongruenceViolation { index: usize, detail: String },

    #[error("internal integrity failure: {0}")]
    InternalIntegrity(String),

    #[error("operation needs truncation length at least 1")]
    LengthZero,

    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("{0} is not a unit")]
    NotAUnit(String),

    #[error("operation requires a torsion-free algebra: {0}")]
    TorsionNotSupported(String),

    #[error("set is not closed under divisors: {0} is missing")]
    NotDivisorClosed(u64),

    #[error("truncation set is not the full divisor set of {0}")]
    NotRectangular(u64),

    #[error("not a Frobenius lift: {0}")]
    LiftViolation(String),

    #[error("unsupported presentation: {0}")]
    UnsupportedPresentation(String),

    #[error("map is not surjective: {0}")]
    NotSurjective(String),

    #[error("invalid ring or context: {0}")]
    InvalidContext(String),

    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("synthesis budget exceeded: {0}")]
    BudgetExceeded(String),
}

impl WittError {
    pub(crate) fn inexact(dividend: impl ToString, divisor: impl ToString) -> Self {
        WittError::DivisionInexact { dividend: dividend.to_string(), divisor: divisor.to_string() }
    }

    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        WittError::Parse { pos, msg: msg.into() }
    }
}
