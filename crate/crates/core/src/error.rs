use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("value {value} is outside the supported range (limit {limit})")]
    OutOfRange { value: u64, limit: u64 },

    #[error("{x} is not a unit modulo {n} (gcd > 1)")]
    NotUnit { x: u64, n: u64 },

    #[error("moduli {a} and {b} are not coprime")]
    NotCoprime { a: u64, b: u64 },

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    /// A family or precondition check failed; the message names the condition.
    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("lift of a decomposition modulo {n} by {p} is not in subcase 2.1")]
    WrongSubcase { n: u64, p: u64 },

    #[error("decomposition modulo {n} is unproductive at {p}: special lifts {special:?} are in arithmetic progression")]
    Unproductive { n: u64, p: u64, special: Vec<u64> },

    #[error("fields of characteristic 2 contain no 3-term arithmetic progressions")]
    Characteristic2,

    #[error("invalid field polynomial: {0}")]
    Polynomial(String),

    #[error("not a decomposition: {0}")]
    NotDecomposition(String),

    /// Something that a proven result says cannot happen did happen.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
}
