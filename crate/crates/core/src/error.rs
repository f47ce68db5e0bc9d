use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("non-exact division: ({dividend}) / ({divisor}) leaves remainder {remainder}")]
    NonExactDivision {
        dividend: String,
        divisor: String,
        remainder: String,
    },

    #[error("division by the zero polynomial")]
    ZeroDivisor,

    #[error("slope {0} has zero numerator")]
    DivisionByZeroSlope(String),

    #[error("surgery slope {0} does not determine lens parameters")]
    UnsupportedSlope(String),

    #[error("invalid slope {p}/{q}: need q >= 1 and gcd(p, q) = 1")]
    InvalidSlope { p: BigInt, q: BigInt },

    #[error("T({a},{b}) is not a torus knot: gcd({a}, {b}) != 1")]
    NotCoprime { a: BigInt, b: BigInt },

    #[error("degenerate instance at k={k}, n={n}: {reason}")]
    DegenerateInstance { k: i64, n: BigInt, reason: String },

    #[error("invalid staircase: {0}")]
    InvalidStaircase(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),
}
