use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable '{name}' at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("zero denominator in coefficient at position {pos}")]
    ZeroDenominator { pos: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("the zero polynomial has no weighted degree")]
    ZeroPolynomial,
    #[error("weights must be positive rationals, got {0}")]
    NonPositiveWeight(String),
    #[error("variable index {index} out of range for {count} variables")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("not weighted-homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("constant polynomial: the Jacobian ideal is not defined")]
    ConstantPolynomial,
    #[error("singularity is not isolated")]
    NotIsolated,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("arrangement is not reduced: {0} appears twice")]
    NotReduced(String),
    #[error("arrangement is not essential: normal vectors span rank {0} < 3")]
    NotEssential(usize),
    #[error("arrangement is decomposable")]
    Decomposable,
    #[error("computation too large: exceeded {0} reduction steps")]
    ResourceLimit(u64),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl Error {
    /// Input could not be read at all (as opposed to violating a mathematical hypothesis).
    pub fn is_parse_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. }
                | Error::UnknownVariable { .. }
                | Error::ZeroDenominator { .. }
                | Error::InvalidArgument(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
