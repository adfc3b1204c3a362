use thiserror::Error;

/// Validation failures for sampled functions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PersistenceError {
    #[error("empty sample")]
    EmptySample,
    #[error("non-finite value at index {index}")]
    NonFinite { index: usize },
    #[error("length mismatch: f has {f_len} values, g has {g_len}")]
    LengthMismatch { f_len: usize, g_len: usize },
    #[error("dominance violated at index {index}")]
    DominanceViolated { index: usize },
}

pub type Result<T, E = PersistenceError> = std::result::Result<T, E>;
