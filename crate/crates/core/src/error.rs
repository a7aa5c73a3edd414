use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument fell outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A documented precondition of the operation does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A bracketed solve or bisection failed to converge.
    #[error("no convergence: {0}")]
    NoConvergence(String),

    /// No sampled direction passed the line-mass test.
    #[error(
        "all {candidates} candidate directions charge a line with mass > {tolerance:e}; retry with a finer tolerance"
    )]
    NoDirection { candidates: usize, tolerance: f64 },

    /// Atoms that fall outside the discretization domain.
    #[error("{} atom(s) outside the domain, first at ({:.6e}, {:.6e})", .0.len(), .0[0][0], .0[0][1])]
    AtomsOutside(Vec<[f64; 2]>),

    /// The symmetric factorization met a pivot below the breakdown tolerance.
    #[error("factorization breakdown at pivot {index} (|d| = {pivot:e}, dimension {dim})")]
    Breakdown { index: usize, pivot: f64, dim: usize },
}

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
