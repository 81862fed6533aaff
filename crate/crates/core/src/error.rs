use thiserror::Error;

use crate::group::GroupType;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed group type: {0}")]
    MalformedType(String),

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("operation undefined on the trivial group")]
    TrivialGroup,

    #[error("subgroup database incomplete at {group}: {reason}")]
    Incomplete { group: GroupType, reason: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("malformed chain: {0}")]
    MalformedChain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
