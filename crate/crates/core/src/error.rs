use num::BigInt;
use thiserror::Error;

/// Errors shared by all verification engines.
///
/// Everything here is a contract violation at a module boundary; the
/// engines themselves never fail on valid inputs.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("genus must be at least {required}, got {got}")]
    GenusTooSmall { required: u64, got: u64 },

    #[error("rank must be at least {required}, got {got}")]
    RankTooSmall { required: u64, got: BigInt },

    #[error("push level n must be at least {required}, got {got}")]
    PushLevelTooSmall { required: u32, got: u32 },

    #[error("truncation order must be at least 2, got {0}")]
    TruncationTooSmall(usize),

    #[error("tensor index ({i}, {j}) out of range for characteristic {p}")]
    IndexOutOfRange { i: usize, j: usize, p: u64 },

    #[error("symbol index {index} out of range for module rank {rank}")]
    SymbolOutOfRange { index: usize, rank: usize },

    #[error("operands disagree in {what}: {left} vs {right}")]
    OperandMismatch {
        what: &'static str,
        left: u64,
        right: u64,
    },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
