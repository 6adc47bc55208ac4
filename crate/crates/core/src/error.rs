use thiserror::Error;

/// Errors raised across the library. Each variant names the contract that was
/// violated; none of them are recoverable by retrying with the same input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("exponent e = {0} is even; Suzuki groups need odd e")]
    EvenExponent(u32),
    #[error("exponent e = 1 gives the non-simple group G(1); this operation needs e > 1")]
    ExponentOne,
    #[error("exponent e = {e} is outside the supported range 1..={max}")]
    UnsupportedExponent { e: u32, max: u32 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("operation is undefined for the zero element")]
    ZeroElement,
    #[error("element counts are tabulated only for orders 2, 4 and 5 (got {0})")]
    UnsupportedOrder(u32),
    #[error("valency {0} is not supported (expected 4 or 5)")]
    UnsupportedValency(u32),
    #[error("genus {0} is not valid for this operation")]
    InvalidGenus(u32),
    #[error("result is not an integer: {0}")]
    IntegralityViolation(String),
    #[error("count came out negative: {0}")]
    NegativeCount(String),
    #[error("sum of squared degrees is {got}, expected the group order {expected}")]
    DegreeSumMismatch { expected: String, got: String },
    #[error("group closure exceeded the limit of {0} elements")]
    LimitExceeded(usize),
    #[error("matrix entries of degree {0} do not fit the canonical 128-bit encoding")]
    EncodingTooWide(u32),
    #[error("verification failed: {0}")]
    VerificationFailure(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
