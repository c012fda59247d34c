//! Error type shared by every numerical routine in the crate.

use thiserror::Error;

/// Errors reported by special-function evaluation, quadrature and linear algebra.
///
/// Diagnostic payloads are carried as `f64` regardless of the scalar type the
/// computation ran in; they are for reporting, not for further arithmetic.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A precondition on the mathematical domain was violated.
    #[error("domain error: {0}")]
    Domain(String),

    /// A region or kernel that needs an extra parameter was queried without it.
    #[error("missing parameter: {0}")]
    MissingParameter(&'static str),

    /// A parameter was supplied to a region that does not take it.
    #[error("unexpected parameter: {0}")]
    UnexpectedParameter(&'static str),

    /// The cancellation guard tripped: the partial sums grew so much larger
    /// than the result that the accumulator cannot certify the digits.
    #[error("precision loss: max partial sum {max_partial:e}, error estimate {err_est:e}")]
    PrecisionLoss { max_partial: f64, err_est: f64 },

    /// A series or iteration hit its term/iteration cap before converging.
    #[error("no convergence after {terms} terms/iterations")]
    NoConvergence { terms: usize },

    /// A denominator Pochhammer symbol vanishes before a terminating series ends.
    #[error("pole: denominator parameter {param} hits a non-positive integer within {terms} terms")]
    Pole { param: f64, terms: usize },

    /// Adaptive quadrature could not reach the requested tolerance.
    #[error("quadrature failure: error estimate {err_est:e} after {subdivisions} subdivisions")]
    QuadratureFailure { err_est: f64, subdivisions: usize },

    /// Root bracketing failed: no sign change in the searched interval.
    #[error("no sign change in [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    /// Point/vector dimensions do not agree.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// Two interpolation points coincide.
    #[error("duplicate points at indices {i} and {j}")]
    DuplicatePoints { i: usize, j: usize },

    /// A matrix expected to be symmetric is not.
    #[error("matrix is not symmetric")]
    NotSymmetric,

    /// A matrix expected to be square is not.
    #[error("matrix is not square")]
    NotSquare,

    /// Cholesky factorization found a non-positive pivot.
    #[error("not positive definite: pivot {pivot:e} at index {index}")]
    NotPositiveDefinite { pivot: f64, index: usize },

    /// A linear solve finished with a residual above the promised bound.
    #[error("solve residual {residual:e} exceeds bound {bound:e}")]
    Residual { residual: f64, bound: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
