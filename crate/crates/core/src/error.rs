use thiserror::Error;

/// Errors raised by the arithmetic, process and fractal layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrossError {
    #[error("cannot evaluate {base}^({exponent}) exactly: result is not rational")]
    NonIntegralPower { base: String, exponent: String },

    #[error("{dividend} is not divisible by {divisor}: only monomial divisors are supported")]
    NotDivisible { dividend: String, divisor: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("base of an exponential measure must be positive, got {0}")]
    NonPositiveBase(String),

    #[error("base {0} has a prime factor above 10^6")]
    BaseTooLarge(String),

    #[error("cannot add quantities of different scale: {0} and {1}")]
    MixedScaleAddition(String, String),

    #[error("cannot multiply an exponential measure by the non-constant polynomial {0}")]
    MixedScaleProduct(String),

    #[error("exponential measures are strictly positive; {0} has no representation")]
    NonPositiveMeasure(String),

    #[error("exponent {0} is not supported here")]
    UnsupportedExponent(String),

    #[error("product would expand {0} term pairs, above the supported limit")]
    TooManyTerms(usize),

    #[error("exponent {0} is too large to evaluate")]
    ExponentTooLarge(String),

    #[error("substitution point must be at least 1, got {0}")]
    InvalidSubstitution(String),

    #[error("process length must satisfy 0 < length <= ①, got {0}")]
    InvalidProcessLength(String),

    #[error("a process must start at a position >= 1, got {0}")]
    InvalidStart(String),

    #[error("count must be positive, got {0}")]
    NonPositiveCount(String),

    #[error("expected a gross-linear form a*①+b with integer a, b; got {0}")]
    NotLinear(String),

    #[error("range violation: {0}")]
    RangeViolation(String),

    #[error("range violation after substituting ①:={m}: {detail}")]
    RangeViolationAtSubstitution { m: String, detail: String },

    #[error("cannot compare snapshots of different fractals: {0} vs {1}")]
    FractalMismatch(String, String),
}

pub type Result<T> = std::result::Result<T, GrossError>;
