use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix size must be at least 1")]
    InvalidMatrixSize,

    #[error("{what}: {value} exceeds the enumeration budget of {limit}")]
    OverBudget {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("quadrature did not converge on [{a}, {b}] within {panels} panels")]
    QuadratureDiverged { a: f64, b: f64, panels: usize },

    #[error("resolvent quadrature needs Re z >= 1, got {0}")]
    ResolventDomain(f64),

    #[error("Jacobi eigensolver did not converge in {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    EigenNotConverged { sweeps: usize, off_norm: f64 },

    #[error("z-score undefined for a zero standard error")]
    ZeroStdError,
}
