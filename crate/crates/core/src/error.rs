use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed user input: non-bijective images, mismatched degrees, bad parameters.
    #[error("invalid input: {0}")]
    Input(String),

    /// A group or subgroup is larger than the materialization cap.
    #[error("capacity exceeded: {what} has order {order}, cap is {cap}")]
    Capacity { what: String, order: String, cap: usize },

    /// Exact data that should satisfy an identity does not (bad fusion, bad table, ...).
    #[error("inconsistent data: {0}")]
    Inconsistency(String),

    /// A supplied group action is not an automorphism.
    #[error("invalid action: {0}")]
    ActionInvalid(String),

    /// The available data cannot pin down the requested value.
    #[error("indeterminate: {0}")]
    Indeterminate(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
}
