use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("algebra mismatch: `{left}` vs `{right}`")]
    SpecMismatch { left: String, right: String },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("element is not invertible")]
    NotInvertible,

    #[error("non-finite value encountered")]
    NonFinite,

    #[error("scalar {0} does not belong to the real field")]
    FieldMismatch(num_complex::Complex64),

    #[error("algebra `{0}` has no matrix form")]
    NoMatrixForm(String),

    #[error("algebra `{0}` has no involution")]
    NoInvolution(String),

    #[error("element is not Hermitian (deviation {0:e})")]
    NotHermitian(f64),

    #[error("determinant condition violated: {0}")]
    Determinant(String),

    #[error("invalid axis {0}, expected 1, 2 or 3")]
    BadAxis(usize),

    #[error("empty input")]
    Empty,

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("matrix does not lie in the span of the basis (residual {0:e})")]
    NotInSpan(f64),

    #[error(
        "span is not closed under composition (residual {residual:e} for basis product ({left}, {right}))"
    )]
    NotClosed {
        left: usize,
        right: usize,
        residual: f64,
    },

    #[error("unsupported operation: {0}")]
    Unsupported(String),

    #[error("number of trials must be at least 1")]
    NoTrials,
}
