use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("p = {0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("parameter must be at least 1")]
    ZeroParameter,
    #[error("field size p^k = {size} exceeds the configured bound {bound}")]
    SizeBound { size: u128, bound: u64 },
    #[error("cannot invert zero")]
    ZeroInverse,
    #[error("discrete log of zero is undefined")]
    ZeroDiscreteLog,
    #[error("zero lies outside the multiplicative group")]
    ZeroArgument,
    #[error("d = {d} does not divide the extension degree k = {k}")]
    NotSubfieldDegree { d: u32, k: u32 },
    #[error("s = {s} does not divide the extension degree k = {k}")]
    BadTowerSplit { s: u32, k: u32 },
    #[error("N = {n} does not divide r - 1 = {rm1}")]
    OrderDoesNotDivide { n: u64, rm1: u64 },
    #[error("character index {j} out of range [0, {max}]")]
    CharacterIndex { j: u64, max: u64 },
    #[error("the quadratic character requires an odd field (size {0})")]
    EvenField(u64),
    #[error("e must divide q-1 (e = {e}, q - 1 = {qm1})")]
    EMustDivideQMinus1 { e: u64, qm1: u64 },
    #[error("q = {q} is not a power of p = {p}")]
    NotAPowerOfP { q: u64, p: u64 },
    #[error("not a unit: the non-nilpotent component is zero")]
    NotAUnit,
    #[error(
        "work budget exceeded: {required} coordinate evaluations needed, budget is {budget}; \
         use the representative stratum check instead"
    )]
    WorkBudgetExceeded { required: u128, budget: u64 },
    #[error("no normalized solution of {target} = {form}")]
    NoDiophantineSolution { target: u64, form: &'static str },
    #[error("period polynomial coefficient is not a rational integer")]
    NonIntegerCoefficient,
    #[error("no closed form: {0}")]
    NoClosedForm(String),
    #[error("gcd(e, m) = {actual}, expected {expected}")]
    WrongGcd { expected: u64, actual: u64 },
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
