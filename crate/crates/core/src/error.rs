use thiserror::Error;

/// Errors raised by constructors and operations that reject invalid input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("binomial({n}, {k}) with negative n is outside the supported domain")]
    NegativeBinomialTop { n: i64, k: i64 },

    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NonSquareMatrix { row: usize, len: usize, expected: usize },

    #[error("polynomial division leaves a nonzero remainder")]
    InexactPolynomialDivision,

    #[error("series square root needs constant coefficient 1, found {found}")]
    SqrtConstantTerm { found: String },

    #[error("series division needs a nonzero constant coefficient in the divisor")]
    SeriesDivisorNotInvertible,

    #[error("cannot divide by x^{power}: coefficient of x^{index} is {value}, not zero")]
    MonomialDivision { power: usize, index: usize, value: String },

    #[error("coefficient of x^{index} is {value}, which is not an integer")]
    NonIntegralCoefficient { index: usize, value: String },

    #[error("invalid partition {parts:?}: parts must be positive and weakly decreasing")]
    InvalidPartition { parts: Vec<usize> },

    #[error("hook length must be a positive integer, got 0")]
    ZeroHook,

    #[error("cell (row {row}, column {col}) is not in the diagram of {partition}")]
    CellOutOfDiagram { row: usize, col: usize, partition: String },

    #[error("generator set must be non-empty")]
    EmptyGenerators,

    #[error("generators must be positive integers, got 0")]
    ZeroGenerator,

    #[error("generators {gens:?} share the common divisor {divisor}; the gap set is infinite")]
    InfinitePoset { gens: Vec<u64>, divisor: u64 },

    #[error("{value} is not a gap of the numerical semigroup generated by {gens:?}")]
    NotAGap { value: u64, gens: Vec<u64> },

    #[error("not a lower ideal: {missing} lies below {present} but is missing")]
    NotDownwardClosed { present: u64, missing: u64 },

    #[error("{partition} is not a {generator}-core: the cell at (row {row}, column {col}) has hook length {hook}")]
    NotACore { partition: String, generator: u64, hook: usize, row: usize, col: usize },

    #[error("enumeration would exceed the cap of {cap} items")]
    CapExceeded { cap: usize },

    #[error("{a} and {b} are not coprime (gcd {gcd})")]
    NotCoprime { a: u64, b: u64, gcd: u64 },

    #[error("s = {s} must be odd (and at least 3) for the poset of (s, s+2) to be finite")]
    EvenSymmetryParameter { s: u64 },

    #[error("parameter {name} = {value} is out of range: {expected}")]
    OutOfRange { name: &'static str, value: i64, expected: &'static str },

    #[error("invalid path: {reason}")]
    InvalidPath { reason: String },

    #[error("{0}")]
    FormulaViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
