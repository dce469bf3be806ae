use serde::Serialize;

/// Failure modes shared by every module.
#[derive(Debug, Clone, PartialEq, Serialize, thiserror::Error)]
pub enum Error {
    #[error("gamma pole: {0}")]
    Pole(String),
    #[error("degenerate parameters: {0}")]
    Degenerate(String),
    #[error("argument on branch cut: {0}")]
    BranchCut(String),
    #[error("domain violation: {0}")]
    Domain(String),
    #[error("series does not converge: {0}")]
    Divergence(String),
    #[error("quadrature failed: {0}")]
    Quadrature(String),
    #[error("contour pinch: {0}")]
    Pinch(String),
    #[error("non-integrable endpoint: {0}")]
    Endpoint(String),
    #[error("analyticity violation: {0}")]
    Analyticity(String),
    #[error("unknown identity: {0}")]
    UnknownIdentity(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    /// True for errors caused by parameters outside a formula's domain,
    /// as opposed to numerical breakdown.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::BranchCut(_) | Error::Domain(_) | Error::Endpoint(_) | Error::Analyticity(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
