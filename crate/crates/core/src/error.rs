//! Error taxonomy shared by all modules.

/// Errors reported by the numerical operations.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation
    /// (negative time, empty integration interval, stencil leaving the
    /// declared domain of a function, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A sampled value or an intermediate result is NaN or infinite.
    #[error("non-finite value: {0}")]
    NonFinite(String),

    /// The t -> 0+ limit of the conformable derivative failed the Cauchy
    /// criterion within the iteration budget; the function is not
    /// alpha-differentiable at zero as far as the detector can tell.
    #[error("no limit detected: {0}")]
    NoLimit(String),

    /// Vector/matrix dimensions do not match.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A trajectory is too sparse for the requested differencing.
    #[error("insufficient samples: {0}")]
    InsufficientSamples(String),

    /// The explicit upwind step would violate the CFL stability bound.
    #[error("CFL violation: {0}")]
    CflViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
