use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("binomial expansion needs n >= 1 and d >= 1 (got n = {n}, d = {d})")]
    InvalidExpansion { n: String, d: usize },

    #[error("double-bracket index c = {c} must satisfy 0 <= c < d = {d}")]
    InvalidBracketIndex { d: usize, c: usize },

    #[error("bound degree p = {p} must be at least the form degree d = {d}")]
    DegreeBelowForm { p: usize, d: usize },

    #[error("invalid Hilbert function: {0}")]
    InvalidHilbertFunction(String),

    #[error("not an O-sequence")]
    NotAnOSequence,

    #[error("quotient does not vanish by degree cap {0}")]
    NotArtinianByCap(usize),

    #[error("ideal is not generated by monomials")]
    NotMonomialIdeal,

    #[error("form lies in the ideal in its own degree")]
    FormInIdeal,

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("unknown variable x{index} (ring has {vars} variables)")]
    UnknownVariable { index: usize, vars: usize },

    #[error("polynomial is zero")]
    ZeroPolynomial,

    #[error("generator of degree 0 (the ideal would be the unit ideal)")]
    ConstantGenerator,

    #[error("{0} is not a supported prime (need a prime below 2^32)")]
    InvalidPrime(u64),

    #[error("field or variable count mismatch between operands")]
    RingMismatch,

    #[error("matrix dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("enumeration needs {needed} candidates, budget is {budget}")]
    ExhaustiveTooLarge { needed: u128, budget: u64 },

    #[error("strategy not applicable: {0}")]
    InvalidStrategy(String),
}

pub type Result<T> = std::result::Result<T, Error>;
