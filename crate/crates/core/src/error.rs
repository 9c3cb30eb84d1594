use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p must be an odd prime ≥ 2g+1 (got p={p}, g={g})")]
    InvalidPrime { p: u64, g: u32 },

    #[error("genus must be positive")]
    InvalidGenus,

    #[error("{what} out of range: {value} (allowed {min}..={max})")]
    OutOfRange {
        what: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },

    #[error("variable count mismatch: {left} vs {right}")]
    NvarsMismatch { left: usize, right: usize },

    #[error("coefficient rings differ")]
    RingMismatch,

    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("even modulus {0} is not supported")]
    EvenModulus(u64),

    #[error("estimated {estimate} terms exceeds the ceiling of {limit}")]
    ResourceLimit { estimate: u128, limit: u128 },

    #[error("box bound {bound} exceeds p^(depth+1) = {limit}; truncation would be unsound")]
    UnsoundTruncation { bound: u64, limit: u128 },

    #[error("tuple {0:?} is not admissible")]
    NotAdmissible(Vec<u64>),

    #[error("tuple {ell:?} is not in Delta^{r}_{s}")]
    NotInDelta { r: u32, s: u32, ell: Vec<u64> },

    #[error("index vector {0:?} is not in M")]
    NotInM(Vec<u32>),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}
