use thiserror::Error;

/// Errors raised by the b-symbol toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0:?} is not irreducible over F_{1}")]
    ModulusNotIrreducible(Vec<u32>, u32),
    #[error("modulus {0:?} is irreducible but its root has order {1}, not {2}")]
    ModulusNotPrimitive(Vec<u32>, u64, u64),
    #[error("malformed modulus: {0}")]
    BadModulus(String),
    #[error("field with {0} elements exceeds the table limit {1}")]
    TableLimitExceeded(u64, u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("element {0} is not a member of the field")]
    NotAnElement(u32),
    #[error("discrete log of zero")]
    LogOfZero,
    #[error("degree {0} does not divide {1}")]
    DegreeNotDivisor(u32, u32),
    #[error("element does not lie in the subfield of degree {0}")]
    NotInSubfield(u32),
    #[error("order {0} does not divide {1}")]
    OrderNotDivisor(u64, u64),
    #[error("index {0} out of range 0..{1}")]
    IndexOutOfRange(u64, u64),
    #[error("b = {0} out of range 1..={1}")]
    BOutOfRange(usize, usize),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("F_{0} is not a subfield of F_{1}")]
    NotSubfield(u64, u64),
    #[error("N = {0} does not divide Q - 1 = {1}")]
    NNotDivisor(u64, u64),
    #[error("gcd(n, q) = gcd({0}, {1}) != 1")]
    GcdViolation(u64, u64),
    #[error("enumeration of {0} items exceeds limit {1}")]
    EnumerationLimitExceeded(u128, u128),
    #[error("subspace count {0} exceeds limit {1}")]
    SubspaceLimitExceeded(u128, u128),
    #[error("class {class}: weight {got} of a sampled member differs from representative weight {expected}")]
    ClassConstancyViolated { class: u32, expected: u32, got: u32 },
    #[error("cyclotomic combination does not reduce to a rational integer")]
    NonRationalCombination,
    #[error("closed-form weight {0} outside the admissible range")]
    WeightOutOfRange(String),
    #[error("no closed form covers the parameters: {0}")]
    NoClosedFormCase(String),
    #[error("no theorem applies: {0}")]
    NoTheoremApplies(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("case not covered: {0}")]
    CaseNotCovered(String),
    #[error("rows are linearly dependent (rank {0} < {1})")]
    RankDeficient(usize, usize),
    #[error("word is not a codeword")]
    NotCodeword,
    #[error("io: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
