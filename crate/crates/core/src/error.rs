use thiserror::Error;

/// Errors raised by the arithmetic, series and form constructors.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("argument must be positive, got {0}")]
    NonPositive(i64),

    #[error("enumeration guard exceeded: {value} > {limit}")]
    GuardExceeded { value: u64, limit: u64 },

    #[error("negative exponent {exponent} on a factor (1 - X) whose base has zero q/s-order")]
    InvalidFactor { exponent: i64 },

    #[error("factor base must have nonnegative q- and s-order")]
    NegativeFactorOrder,

    #[error("exponent {0} lies outside the truncation window")]
    OutOfBounds(String),

    #[error("truncation too small: {0}")]
    TruncationTooSmall(String),

    #[error("insufficient table precision: need max_n >= {needed}, table has {available}")]
    InsufficientPrecision { needed: i64, available: i64 },

    #[error("non-integral coefficient {coeff} at {at}")]
    NonIntegral { at: String, coeff: String },

    #[error("theta constant has nonzero imaginary part at {0}")]
    NonReal(String),

    #[error("swap symmetry undefined: exponent {0} not divisible by lambda")]
    Divisibility(String),

    #[error("operation undefined on the zero series")]
    ZeroSeries,
}

pub type Result<T> = std::result::Result<T, Error>;
