use thiserror::Error;

/// Failures of the exact series kernel and everything built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    /// The divisor of a power-series quotient has zero constant term; the
    /// quotient only exists as a Laurent series.
    #[error("divisor has zero constant term; lift both operands to Laurent series")]
    DivisorNotUnit,
    #[error("division by the zero series")]
    DivisionByZeroSeries,
    #[error("series must have zero constant term")]
    NonzeroConstantTerm,
    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("numerator {index} has nonzero constant term")]
    NonzeroConstantNumerator { index: usize },
    #[error("unsupported index {0}")]
    UnsupportedIndex(usize),
    #[error("requested depth {requested} exceeds the {available} available numerators")]
    DepthOutOfRange { requested: usize, available: usize },
}
