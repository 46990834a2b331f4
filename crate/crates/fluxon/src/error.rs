use thiserror::Error;

/// Errors produced by grid construction, closed-form profiles, solvers and I/O.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A closed-form solution was requested outside its existence domain.
    #[error("existence domain violated: {0}")]
    ExistenceDomain(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// Input of a mathematical formula outside its domain of definition.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("Newton iteration did not converge: residual {residual} after {iterations} iterations")]
    NewtonDiverged { residual: f64, iterations: usize },

    #[error("Jacobian numerically singular (pivot ratio {pivot_ratio:.3e})")]
    SingularJacobian { pivot_ratio: f64 },

    /// Linearizing about a field that is not a converged stationary state.
    #[error("not a stationary state: residual {0:.3e} exceeds cap {1:.3e}")]
    NotStationary(f64, f64),

    #[error("eigensolver failed: {0}")]
    Eigensolver(String),

    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),

    #[error("parse: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
