use thiserror::Error;

/// Errors surfaced by the exact kernel and the classification pipeline.
///
/// Most operations in this crate are total; errors mark contract violations
/// (mismatched surd radicands, division by the zero polynomial) or inputs the
/// implemented decision procedures cannot handle.
#[derive(Debug, Error)]
pub enum Error {
    #[error("surd radicands differ: {0} vs {1}")]
    RadicandMismatch(num_bigint::BigInt, num_bigint::BigInt),

    #[error("division by zero polynomial")]
    ZeroDivision,

    #[error("{0} is not a prime power")]
    NotPrimePower(num_bigint::BigInt),

    #[error("p/n given as {given_p}^{given_n}, but q = {q} factors as {p}^{n}")]
    PrimePowerMismatch {
        q: num_bigint::BigInt,
        p: u64,
        n: u32,
        given_p: u64,
        given_n: u32,
    },

    #[error("coefficients violate the q-weighted functional equation at degree {0}")]
    WeightViolation(usize),

    #[error("polynomial has a zero constant term")]
    ZeroConstantTerm,

    #[error("empty interval: lower bound is not below upper bound")]
    EmptyInterval,

    #[error("no separator lambda <= {max} makes the {kind} resolvent squarefree")]
    SeparatorExhausted { kind: &'static str, max: u32 },

    #[error("p-adic root recursion exceeded its discriminant depth bound ({0})")]
    RecursionBound(u64),

    #[error("cubic root bounds undefined: the derivative discriminant is negative")]
    ComplexCardano,

    #[error("cyclotomic index {0} is outside the supported set {{15, 16, 20, 24, 30}}")]
    UnsupportedCyclotomic(u64),

    #[error("arguments are not coprime: gcd({0}, {1}) != 1")]
    NotCoprime(u64, u64),

    #[error("case index {0} is outside 1..=8")]
    CaseOutOfRange(u8),

    #[error("degree-{0} factor tests are not implemented (only 1, 2, 3)")]
    UnsupportedFactorDegree(u8),

    #[error("Newton polygon {0} cannot be decided with factor tests of degree <= 3")]
    UndecidablePolygon(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
