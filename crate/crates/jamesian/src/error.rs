use thiserror::Error;

/// Errors produced by loop checkers, homeomorphism inversion and
/// Jamesian function evaluation.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// An argument fell outside the domain of the evaluator.
    #[error("domain error: {0}")]
    Domain(String),

    /// A structurally invalid input (bad grid, bad parameter range, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A numerical procedure failed to produce a finite, converged result.
    #[error("numeric failure: {0}")]
    Numeric(String),

    /// A loop handed to a transfer construction failed one of the required
    /// hypotheses; `property` names the first check that failed.
    #[error("loop hypothesis `{property}` failed: max residual {max_residual:e} exceeds tolerance {tolerance:e}")]
    LoopHypothesis {
        property: String,
        max_residual: f64,
        tolerance: f64,
    },

    /// Evaluation was requested at one of the two excluded corners of the
    /// closed unit square.
    #[error("J is undefined at the corner ({0}, {1})")]
    UndefinedCorner(f64, f64),

    /// The point lies outside the region where the closed-form piecewise
    /// formula applies; the generic evaluator must be used instead.
    #[error("({a}, {b}) is outside the explicit region")]
    OutsideExplicitRegion { a: f64, b: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
