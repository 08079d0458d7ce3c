use thiserror::Error;

/// Errors raised by the group, biset and functor layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid group table for `{group}`: {reason}")]
    InvalidTable { group: String, reason: String },

    #[error("group mismatch: expected `{expected}`, found `{found}`")]
    GroupMismatch { expected: String, found: String },

    #[error("subgroup is not contained in `{0}`")]
    NotASubgroup(String),

    #[error("subgroup is not normal in `{0}`")]
    NotNormal(String),

    #[error("map is not a group homomorphism: {0}")]
    NotAHomomorphism(String),

    #[error("biset action axiom fails: {0}")]
    InvalidAction(String),

    #[error("coefficient ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),

    #[error("operation requires rational coefficients")]
    RequiresRationals,

    #[error("non-integral coefficient {0} over the integer ring")]
    NonIntegral(String),

    #[error("morphism is not invertible")]
    NotInvertible,

    #[error("search space too large: {0} candidates")]
    SearchTooLarge(u128),

    #[error("unknown group `{0}`")]
    UnknownGroup(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("catalog parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
