use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Building or traversing the graph would enumerate more than `4^ceiling` vertices.
    #[error("level {level} exceeds the vertex ceiling (max level {ceiling})")]
    LevelCeiling { level: u32, ceiling: u32 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The BFS oracle disagreed with a structural expectation it was asked to resolve.
    #[error("oracle inconsistency: {0}")]
    Oracle(String),
}

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
