use thiserror::Error;

use crate::scalar::Field;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("mixed scalar configurations: {0} and {1}")]
    FieldMismatch(Field, Field),
    #[error("denominator is zero")]
    ZeroDenominator,
    #[error("{value} is not invertible modulo {p}")]
    NotInvertibleModP { value: String, p: u64 },
    #[error("{0} is not an odd prime below 2^62")]
    BadPrime(u64),
    #[error("malformed scalar literal `{0}`")]
    BadScalar(String),
    #[error("lexical error at position {pos}: {msg}")]
    Lex { pos: usize, msg: String },
    #[error("syntax error at position {pos}: expected {expected}, found {found}")]
    Syntax {
        pos: usize,
        expected: String,
        found: String,
    },
    #[error("no image given for variable X{0}")]
    MissingImage(u32),
    #[error("{0} must be at least 1")]
    NonPositive(&'static str),
    #[error("empty family of polynomials")]
    EmptyFamily,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("evaluation tuple has {available} matrices but the polynomial uses X{needed}")]
    UncoveredVariable { needed: u32, available: usize },
    #[error("expected {expected} interleaver matrices, found {found}")]
    InterleaverCount { expected: usize, found: usize },
    #[error("operators are not locally linearly dependent")]
    NotLocallyDependent,
    #[error("member {index} of the family is the zero polynomial; degree bounds need nonzero members")]
    ZeroMember { index: usize },
    #[error("Fock space dimension {sigma} exceeds the cap {cap}; use the global decider instead")]
    SigmaCap { sigma: u128, cap: usize },
    #[error("exact deciders disagree: {0}")]
    DeciderDisagreement(String),
    #[error("invalid matrix JSON: {0}")]
    MatrixJson(String),
}
