use thiserror::Error;

/// Every failure the library can report. Variants carry enough context for
/// the CLI to print a useful diagnostic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NonPrime(u64),
    #[error("{0} is not a power of an odd prime")]
    NotPrimePower(u64),
    #[error("field of size {size} exceeds the table-mode cap {cap}")]
    SizeCapExceeded { size: String, cap: u64 },
    #[error("{n} does not divide the multiplicative group order {group}")]
    OrderNotDividing { n: u64, group: u64 },
    #[error("GF({sub}) is not a subfield of GF({field})")]
    NotASubfield { sub: u64, field: String },
    #[error("the quadratic Gauss sum over GF(p^{0}) is not a rational integer for odd extension degree")]
    OddExtensionDegree(u32),
    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("operands live over different fields ({0} vs {1})")]
    FieldMismatch(u64, u64),
    #[error("discrete logarithms are unavailable outside table mode")]
    NoLogTable,
    #[error("gcd({n}, {q}) != 1")]
    NotCoprime { n: u64, q: u64 },
    #[error("modulus {n} exceeds the scan cap {cap}")]
    ScanCapExceeded { n: u64, cap: u64 },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("family constraint violated: {0}")]
    FamilyConstraintViolated(String),
    #[error("ambient field GF({q}^{degree}) is larger than the cap {cap}")]
    AmbientFieldTooLarge { q: u64, degree: u32, cap: u64 },
    #[error("designed distance {delta} is outside [2, {max}]")]
    InvalidDesignedDistance { delta: u64, max: u64 },
    #[error("expected a vector of length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("enumerating {words} words of length {n} exceeds the budget")]
    BudgetExceeded { words: String, n: u64 },
    #[error("MacWilliams transform produced a non-integral count")]
    MacWilliamsInexact,
    #[error("the code has {0} nonzero cyclotomic cosets, expected exactly one")]
    NotSingleNonzero(usize),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("designed distance {delta} is outside the window [{lo}, {hi}]")]
    DeltaOutsideWindow { delta: String, lo: String, hi: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("i/o: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
