use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("requested size exceeds the desk-scale cap: {what} = {size} > {cap}")]
    TooLarge { what: &'static str, size: u128, cap: u128 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("element {0} does not belong to this field")]
    OutOfRange(u64),
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("roots live beyond the searched extensions (irreducible factor of degree {degree}, cap {cap})")]
    CapExceeded { degree: usize, cap: usize },
    #[error("operation needs a nonconstant polynomial")]
    ConstantInput,
    #[error("polynomial is not a minimal value set polynomial")]
    NotMvsp,
    #[error("structure theorem needs at least three values (r > 1), got r = {0}")]
    TooFewValues(usize),
    #[error("no (v, m, k) decomposition found within the search bound")]
    NoDecomposition,
    #[error("subset must be nonempty and proper")]
    BadSubset,
    #[error("unexpected value set: {0}")]
    BadValueSet(String),
    #[error("leading coefficient is not an invertible constant in either variable")]
    NonUnitLeader,
    #[error("divisibility and certificate routes disagree")]
    MethodDisagreement,
    #[error("x0 = {0} is not an element of the coefficient field")]
    NotARootProfile(u64),
    #[error("degree of f ({deg}) exceeds n ({n})")]
    DegreeTooHigh { deg: usize, n: u64 },
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("characteristic divides n")]
    CharDividesN,
    #[error("y^n - f(x) is not absolutely irreducible; genus formula does not apply")]
    Reducible,
    #[error("nu must be 1 or a positive power of p, got {0}")]
    BadNu(u64),
    #[error("curve violates its own invariants: {0}")]
    InvalidCurve(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
