use thiserror::Error;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the requested operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// An iterative procedure (series, Newton, quadrature) did not reach
    /// the requested tolerance.
    #[error("convergence failure: {0}")]
    Convergence(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn convergence(msg: impl Into<String>) -> Self {
        Error::Convergence(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
