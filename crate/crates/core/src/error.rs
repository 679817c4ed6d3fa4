use thiserror::Error;

/// Errors raised by the engine.
///
/// Variants marked "internal" indicate a bug in this crate rather than bad
/// input: every identity they guard is a theorem.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("laurent-at-zero: cannot set q = 0 in a polynomial with negative q-exponents")]
    LaurentAtZero,
    #[error("laurent-non-integral: q^{exponent} at q = {value} is not an integer")]
    LaurentNonIntegral { exponent: i64, value: String },
    /// internal
    #[error("division-check: exact division left a nonzero remainder")]
    DivisionCheck,
    #[error("non-unit-series: constant coefficient must be exactly 1")]
    NonUnitSeries,
    #[error("zero-denominator: rational function with zero denominator")]
    ZeroDenominator,
    #[error("method-too-expensive: {method} is limited to m*n <= {limit}, got ({m},{n})")]
    MethodTooExpensive {
        method: &'static str,
        m: usize,
        n: usize,
        limit: usize,
    },
    /// internal
    #[error("identity-violation at (m,n) = ({m},{n})")]
    IdentityViolation { m: usize, n: usize },
    #[error("not-in-O-n: {0}")]
    NotInOn(String),
    /// internal
    #[error("ill-formed-image: {0}")]
    IllFormedImage(String),
    #[error("bad-indices: {0}")]
    BadIndices(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
