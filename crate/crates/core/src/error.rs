use thiserror::Error;

pub type Result<T> = std::result::Result<T, QpsError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QpsError {
    #[error("invalid modulus {0}: must be odd and positive")]
    InvalidModulus(i64),

    #[error("d must be odd and at least 3 (got d={0})")]
    InvalidDimension(usize),

    #[error("number of components must be at least 1")]
    NoComponents,

    #[error("dimension {d}^{n} exceeds the cap of {cap}")]
    DimensionCap { d: usize, n: usize, cap: usize },

    #[error("label out of range: {0}")]
    LabelOutOfRange(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not Hermitian (max deviation {0:.3e})")]
    NotHermitian(f64),

    #[error("matrix is not unitary (max deviation {0:.3e})")]
    NotUnitary(f64),

    #[error("matrix does not satisfy A^4 = 1 (max deviation {0:.3e})")]
    NotOrderFour(f64),

    #[error("eigenphase {0:.3e} rad away from the nearest multiple of pi/2")]
    EigenphaseOffGrid(f64),

    #[error("invalid density matrix: {0}")]
    InvalidDensity(String),

    #[error("invalid state vector: {0}")]
    InvalidState(String),

    #[error("component index {index} out of range for n={n}")]
    ComponentOutOfRange { index: usize, n: usize },

    #[error("operation requires n={expected}, got n={found}")]
    UnsupportedComponents { expected: usize, found: usize },

    #[error("table kind mismatch: {0}")]
    KindMismatch(String),

    #[error("eigendecomposition failed to converge")]
    NoConvergence,

    #[error("format error: {0}")]
    Format(String),
}
