use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ZetaError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("exponent {0} is too large")]
    ExponentTooLarge(i64),
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
    #[error("gamma is only defined here for positive integers, got {0}")]
    GammaDomain(i64),
    #[error("alpha(n, k) needs n >= 1 and 0 <= k <= n - 1, got n = {n}, k = {k}")]
    AlphaDomain { n: u64, k: i64 },
    #[error("n must be at least 1")]
    ZeroIndex,
    #[error("digit count {0} is outside 1..={max}", max = crate::pi::MAX_PI_DIGITS)]
    DigitsOutOfRange(u64),
    #[error("{0}")]
    Domain(String),
    #[error("segment passes through the pole at 2*pi*i*{0}")]
    SegmentThroughPole(i64),
    #[error("degenerate segment: start equals end")]
    DegenerateSegment,
    #[error("quadrature did not converge: estimate {value} with error {error_estimate:e} after {evaluations} evaluations")]
    NoConvergence {
        value: f64,
        error_estimate: f64,
        evaluations: usize,
    },
}
