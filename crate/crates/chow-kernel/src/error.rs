use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChowError {
    #[error("invalid multidegree: {0}")]
    InvalidMultidegree(String),
    #[error("unknown threefold '{input}'; expected one of: {options}")]
    UnknownThreefold { input: String, options: String },
    #[error("not invertible: constant term is zero")]
    NotInvertible,
    #[error("resolution has non-positive rank {0}")]
    NonPositiveRank(i64),
    #[error("non-integral coefficient {0} where an integer was expected")]
    NonIntegral(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, ChowError>;
