use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("double factorial is only defined here for odd n >= -1, got {0}")]
    DoubleFactorialDomain(i64),

    #[error("duplicate interpolation node x = {0}")]
    DuplicateNode(String),

    #[error("denominator parameter {param} vanishes at term {term}")]
    SingularParameter { param: String, term: usize },

    #[error("invalid hexagon: {0}")]
    InvalidHexagon(String),

    #[error("axis index {l} out of range 1..={max}")]
    AxisOutOfRange { l: u32, max: u32 },

    #[error("undefined for M=0: the axis sum has a pole at e = 0")]
    PoleAtZeroM,

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("region has {cells} cells, enumeration limit is {limit}")]
    RegionTooLarge { cells: usize, limit: usize },

    #[error("expected an integer, got {0}")]
    NotIntegral(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
