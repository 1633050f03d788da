use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An enumeration or arity request exceeded a configured cap.
    #[error("{what}: requested {requested}, cap is {cap}")]
    ResourceLimit {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    /// A caller broke an operation's precondition.
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("parse error at {token:?}: {reason}")]
    Parse { token: String, reason: String },

    #[error("characteristic mismatch: {0} vs {1}")]
    CharacteristicMismatch(u32, u32),

    /// Odd characteristic tensor products need an explicit sign rule.
    #[error("no verified sign convention in characteristic {0}; opt into the experimental Koszul rule")]
    UnsupportedSigns(u32),

    #[error("snake verification failed: {0}")]
    SnakeReplay(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn contract<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Contract(msg.into()))
}
