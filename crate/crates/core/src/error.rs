use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("element is not divisible by √2")]
    NotDivisible,
    #[error("value is not a real integer at the requested denominator exponent")]
    NotRealInteger,
    #[error("R(P, Q) precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("relation hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("unknown gate token `{0}`")]
    UnknownToken(String),
    #[error("matrix is not a Clifford+CS operator: {0}")]
    NotInGroup(String),
    #[error("residue exponent {ell} is below the least denominator exponent {lde}")]
    InsufficientExponent { ell: u32, lde: u32 },
    #[error("no generator has a pattern finer than {0}")]
    NoFinerGenerator(String),
    #[error("signed permutation missing from the Clifford table")]
    KeyMissing,
    #[error("automaton parameters out of range: {0}")]
    BadRange(String),
    #[error("word is not a normal form")]
    NotNormalForm,
    #[error("invalid input: {0}")]
    BadInput(String),
    #[error("epsilon must lie in (0, 1), got {0}")]
    BadEpsilon(f64),
    #[error("parse error: {0}")]
    Parse(String),
}
