use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid element {index} for a group of order {order}")]
    InvalidElement { index: usize, order: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("structure error: {0}")]
    Structure(String),

    #[error("degenerate subset: {0}")]
    DegenerateSubset(String),

    #[error("numeric error: {0}")]
    Numeric(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("group order {order} exceeds the dense limit {max} (set POWER_SPECTRA_MAX_ORDER to raise it)")]
    OrderTooLarge { order: usize, max: usize },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
