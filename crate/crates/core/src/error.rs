use thiserror::Error;

/// Errors raised by the matrix routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("expected {expected} entries, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("relative tolerance must lie in (0, 1), got {0}")]
    InvalidTolerance(f64),

    #[error("shape error: {0}")]
    Shape(String),

    #[error("matrix is not symmetric (asymmetry {asymmetry:.3e})")]
    NotSymmetric { asymmetry: f64 },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:.3e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("matrix is singular")]
    Singular,

    #[error("rank deficient: rank {rank}, need {required}")]
    RankDeficient { rank: usize, required: usize },

    #[error("argument is not a generalized inverse (XGX = X residual {residual:.3e})")]
    NotGInverse { residual: f64 },

    #[error("argument is not a generalized inverse of the Gram matrix (residual {residual:.3e})")]
    NotGramGInverse { residual: f64 },

    #[error("basis vector {index} is not in the row space (distance {distance:.3e})")]
    NotInRowSpace { index: usize, distance: f64 },

    #[error("basis vectors are linearly dependent (rank {rank} of {len})")]
    DependentBasis { rank: usize, len: usize },

    #[error("system is inconsistent (residual norm {residual_norm:.3e})")]
    InconsistentSystem { residual_norm: f64 },
}

impl Error {
    /// Stable kebab-case identifier, used by report emitters.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "dimension-mismatch",
            Error::LengthMismatch { .. } => "length-mismatch",
            Error::NonFinite { .. } => "non-finite-entry",
            Error::InvalidTolerance(_) => "invalid-tolerance",
            Error::Shape(_) => "shape",
            Error::NotSymmetric { .. } => "not-symmetric",
            Error::NoConvergence { .. } => "non-convergence",
            Error::Singular => "singular",
            Error::RankDeficient { .. } => "rank-deficient",
            Error::NotGInverse { .. } => "not-a-g-inverse",
            Error::NotGramGInverse { .. } => "not-a-g-inverse-of-gram",
            Error::NotInRowSpace { .. } => "not-in-row-space",
            Error::DependentBasis { .. } => "dependent-basis",
            Error::InconsistentSystem { .. } => "inconsistent-system",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
