use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime in [2, 65521]")]
    NotPrime(u32),
    #[error("field mismatch: GF({0}) vs GF({1})")]
    FieldMismatch(u32, u32),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("invalid bimodule: {0}")]
    InvalidBimodule(String),
    #[error("not a module homomorphism: {0}")]
    InvalidHom(String),
    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),
    #[error("quiver relations do not bound path length (no admissible basis within {0} arrows)")]
    InfiniteBasis(usize),
    #[error("element is not idempotent modulo the ideal")]
    NotIdempotent,
    #[error("structure law violated: {0}")]
    InvariantViolation(String),
    #[error("hypotheses unmet: {0}")]
    HypothesesUnmet(String),
    #[error("construction failed: {0}")]
    Construction(String),
}
