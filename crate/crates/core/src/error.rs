use thiserror::Error;

use crate::Family;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing, found {prev} before {next}")]
    NotWeaklyDecreasing { prev: u64, next: u64 },

    #[error("parts must be positive")]
    ZeroPart,

    #[error("beta-set element {0} appears more than once")]
    DuplicateBetaElement(u64),

    /// A beta-set containing 0 would induce a zero part.
    #[error("beta-set contains 0 and does not correspond to a partition of its own length")]
    UnnormalizedBetaSet,

    #[error("arithmetic overflow")]
    Overflow,

    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),

    #[error("multiplier must be at least 1, got {0}")]
    InvalidMultiplier(u64),

    #[error("partition is not a {0}-core")]
    NotCore(u64),

    #[error("partition is not a ({t}, {b})-core partition with distinct parts")]
    NotInFamily { t: u64, b: u64, family: Family },

    #[error("invalid sequence: {0}")]
    InvalidSequence(String),

    #[error("index {index} outside the valid range {min}..={max}")]
    IndexOutOfRange { index: u64, min: u64, max: u64 },

    #[error("moduli {a} and {b} are not coprime")]
    NotCoprime { a: u64, b: u64 },

    #[error("estimated family size {estimate} exceeds the limit {limit}")]
    ResourceLimit { estimate: u128, limit: u128 },

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    /// The closed form and the candidate witnesses disagree. Never expected.
    #[error("extremal evaluation for t={t}, m={m} is inconsistent: {detail}")]
    Inconsistent { t: u64, m: u64, detail: String },
}
