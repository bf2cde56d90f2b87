use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CoxError {
    #[error("polynomial {dividend} is not divisible by {divisor}")]
    NotDivisible { dividend: String, divisor: String },
    #[error("term x^{k} y^{l} exceeds total degree budget {n}")]
    DegreeOverflow { k: u32, l: u32, n: u32 },
    #[error("unsupported type label `{0}`")]
    UnsupportedType(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("type {0} is not crystallographic")]
    NonCrystallographic(String),
    #[error("type {label} has rank {rank}, above the supported cap {cap}")]
    RankTooLarge { label: String, rank: usize, cap: usize },
    #[error("internal invariant broken: {0}")]
    InvariantBroken(String),
    #[error("iteration did not terminate within {0} steps")]
    NonTermination(usize),
    #[error("group of order {order} exceeds the generation cap {cap}")]
    GroupTooLarge { order: u64, cap: u64 },
    #[error("Orlik-Solomon oracle capacity exceeded for {0}")]
    CapacityExceeded(String),
    #[error("inner plethysm argument has a constant term")]
    ConstantTermInInner,
    #[error("neither Lie variant matches the Orlik-Solomon oracle in degree {0}")]
    NeitherMatches(usize),
    #[error("lemma violated ({clause}): {witness}")]
    LemmaViolation { clause: String, witness: String },
    #[error("conjecture fails: {witness}")]
    ConjectureFails { witness: String },
    #[error("identity fails: {witness}")]
    IdentityFails { witness: String },
}

pub type Result<T> = std::result::Result<T, CoxError>;
