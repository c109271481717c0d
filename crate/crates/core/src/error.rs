use thiserror::Error;

/// Errors raised by the exact engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid degree: {0}")]
    InvalidDegree(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("{0} is not a prime")]
    InvalidPrime(u64),
    #[error("matrix does not have full row rank")]
    RankDeficient,
    #[error("polynomial vanishes modulo {0}")]
    ZeroModP(u64),
    #[error("polynomial is reducible over the rationals")]
    ReduciblePolynomial,
    #[error("degree {0} is outside the supported range 1..=7")]
    DegreeOutOfScope(usize),
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("prime {0} is too large for word-sized residue arithmetic")]
    ModulusTooLarge(String),
    #[error("refinement at p = {prime} exceeded cap {cap} ({detail})")]
    RefinementCapExceeded { prime: u64, cap: u32, detail: String },
    #[error("parameters do not define a number field: {0}")]
    NotAField(String),
    #[error("cubic form ({0}, {1}) is not reduced")]
    NotReduced(String, String),
    #[error("formula not applicable: {0}")]
    NotApplicable(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
