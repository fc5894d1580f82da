use thiserror::Error;

pub type Result<T> = std::result::Result<T, ThetaError>;

#[derive(Debug, Error)]
pub enum ThetaError {
    /// An argument lies outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// User-supplied data failed validation.
    #[error("validation error: {0}")]
    Validation(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Two independent routes to the same fact disagreed. This is never a
    /// caller fault: either the implementation or the input graph is broken.
    #[error("consistency check failed for {theorem}: {detail}")]
    Consistency { theorem: String, detail: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl ThetaError {
    pub(crate) fn consistency(theorem: &str, detail: impl Into<String>) -> Self {
        ThetaError::Consistency {
            theorem: theorem.to_string(),
            detail: detail.into(),
        }
    }
}
