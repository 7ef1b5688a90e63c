use thiserror::Error;

/// Errors raised by the algebra kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    InvalidPrime(u64),

    #[error("p^{prec} does not fit a single-word residue for p = {p}")]
    PrecisionOverflow { p: u64, prec: u32 },

    #[error("insufficient precision: need {required} digits, have {available}")]
    InsufficientPrecision { required: u32, available: u32 },

    #[error("{0} is not a p-adic unit")]
    NotAUnit(String),

    #[error("{0} is not congruent to 1 mod p")]
    NotAOneUnit(String),

    #[error("{0} has valuation 0, series does not converge")]
    NotTopologicallyNilpotent(String),

    #[error("{value} is not divisible by p^{shift}")]
    NotDivisible { value: String, shift: u32 },

    #[error("invalid Cartan type `{0}`")]
    InvalidCartanType(String),

    #[error("{0:?} is not a root of the configured system")]
    NotARoot(Vec<i32>),

    #[error("roots {0:?} and {1:?} are proportional")]
    ProportionalRoots(Vec<i32>, Vec<i32>),

    #[error("type {0} has no realization (symbolic-only)")]
    NoRealization(String),

    #[error("matrix is not in G(1): entry ({row},{col}) = {value}")]
    NotInFirstKernel {
        row: usize,
        col: usize,
        value: String,
    },

    #[error("determinant is {0}, expected 1")]
    DeterminantNotOne(String),

    #[error("mismatched parameters: {0}")]
    Mismatch(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
