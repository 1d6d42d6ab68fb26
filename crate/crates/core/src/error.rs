use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A sieve was requested beyond the in-memory budget.
    #[error("sieve limit {requested} exceeds the memory budget of {budget}")]
    Capacity { requested: u64, budget: u64 },

    #[error("{n} is outside the sieve range [1, {limit}]")]
    OutOfRange { n: u64, limit: u64 },

    #[error("primorial N_{index} overflows 64 bits")]
    Overflow { index: u64 },

    /// A computation would go past one of the documented feasibility caps.
    #[error("{what} = {value} exceeds the feasibility cap {cap}")]
    Resource {
        what: &'static str,
        value: u64,
        cap: u64,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown property id `{0}`")]
    UnknownProperty(String),

    #[error("malformed golden data at {source_name}:{line}: {message}")]
    GoldenData {
        source_name: &'static str,
        line: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
