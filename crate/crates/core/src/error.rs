use thiserror::Error;

/// Everything that can go wrong when building or querying a semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    NoGenerators,
    #[error("generators must be positive, got {0}")]
    ZeroGenerator(u64),
    #[error("not a numerical semigroup (complement infinite): gcd of generators is {0}")]
    NotCofinite(u64),
    #[error("small elements must start at 0")]
    MissingZero,
    #[error("small elements must be strictly increasing ({0} follows {1})")]
    NotIncreasing(u64, u64),
    #[error("not closed under addition: {0} + {1} = {2} is missing")]
    NotClosed(u64, u64, u64),
    #[error("{0} is not the conductor: {1} is also a pole")]
    ConductorNotMinimal(u64, u64),
    #[error("gaps must be positive and distinct, got {0}")]
    InvalidGap(u64),
    #[error("{0} is a gap, not a pole")]
    Gap(u64),
    #[error("pole index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("operation requires S != N")]
    Naturals,
    #[error("semigroup is not Arf; use the brute-force computation instead")]
    NotArf,
    #[error("code length n = {n} is below twice the conductor ({twice_c})")]
    ShortCode { n: u64, twice_c: u64 },
    #[error("invalid inductive sequence: {0}")]
    InvalidInductive(String),
    #[error("level {level} out of range 1..={max}")]
    LevelOutOfRange { level: usize, max: usize },
    #[error("tower level must be at least 2, got {0}")]
    TowerLevel(usize),
    #[error("q must be at least 2, got {0}")]
    SmallQ(u64),
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
    #[error("cannot parse semigroup: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
