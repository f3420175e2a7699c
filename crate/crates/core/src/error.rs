use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("lattice point (0,0) is not a generator")]
    ZeroPoint,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("coefficient of exponent {exp} requested beyond truncation order {order}")]
    BeyondOrder { exp: i64, order: i64 },
    #[error("series directions differ")]
    DirectionMismatch,
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("algebra dimension {dim} exceeds size cap {cap}")]
    SizeCap { dim: usize, cap: usize },
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
