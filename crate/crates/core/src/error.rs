use thiserror::Error;

/// Errors raised by the numerical routines, the check registry and the harness.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix has a non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },
    #[error("matrix is not self-adjoint (asymmetry {asymmetry:.3e})")]
    NotHermitian { asymmetry: f64 },
    #[error("matrix is not positive semidefinite (eigenvalue {eigenvalue:.3e})")]
    NotPsd { eigenvalue: f64 },
    #[error("{0} evaluated to a non-finite value")]
    NonFiniteValue(String),
    #[error("spectral function returned NaN at {at}")]
    DomainError { at: f64 },
    #[error("{0} did not converge")]
    NoConvergence(&'static str),
    #[error("numerical radius enclosure width {width:.3e} exceeds {tol:.3e}")]
    EnclosureTooWide { width: f64, tol: f64 },
    #[error("entry ({row}, {col}) is negative: {value}")]
    NegativeEntry { row: usize, col: usize, value: f64 },
    #[error("assumption violated: {0}")]
    AssumptionViolated(String),
    #[error("parameter {name} = {value} out of range: {range}")]
    ParamOutOfRange { name: String, value: f64, range: String },
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("invalid configuration: {0}")]
    ConfigError(String),
    #[error("bad dimension: {0}")]
    BadDim(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
