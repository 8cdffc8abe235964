use thiserror::Error;

/// Errors produced by the algebra, representation, and solver layers.
#[derive(Debug, Error)]
pub enum Error {
    /// Grade outside 0..=4.
    #[error("grade {0} is out of range 0..=4")]
    GradeOutOfRange(usize),

    /// Matrix dimensions incompatible with the requested operation.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// A tetrad matrix that fails the orthonormality constraint, or a
    /// time-like form E with E·E ≠ 1.
    #[error("invalid tetrad: {0}")]
    InvalidTetrad(String),

    /// A basis that should span a 4-dimensional space but does not.
    #[error("degenerate basis: {0}")]
    DegenerateBasis(String),

    /// A constructed object violates an identity it is guaranteed to satisfy;
    /// signals a bug in the algebra kernel rather than bad input.
    #[error("internal consistency check failed: {0}")]
    InternalConsistency(String),

    /// Expansion of a form against an ideal basis left a residual too large
    /// for the form to be a member of the ideal.
    #[error("form is not in the ideal: residual {residual:.3e} exceeds {allowed:.3e}")]
    NotInIdeal { residual: f64, allowed: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
