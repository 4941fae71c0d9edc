//! Exact truncated Fourier expansions of the four paramodular forms
//! `Delta_5`, `Delta_2`, `Delta_1` and `Delta_1/2`, whose divisor is the
//! diagonal `tau_2 = 0`, built along independent routes that are checked
//! against each other.
//!
//! - [`arith`]: Kronecker symbols, divisor sums, coset indices and the
//!   weight equation with brute-force oracles.
//! - [`series`]: the exact sparse series ring plus `eta` and `theta`.
//! - [`jacobi`]: the Jacobi forms `eta * theta`, `eta^3 * theta` and the
//!   Borcherds exponents `f(n, l)`.
//! - [`siegel`]: lifts, products and theta constants for the four forms,
//!   and the structural checks (diagonal vanishing, norms, symmetries).
//! - [`cli`]: table serialization, the on-disk cache and the command-line
//!   front end.

pub mod arith;
pub mod cli;
pub mod error;
pub mod jacobi;
pub mod series;
pub mod siegel;

pub use error::{Error, Result};
pub use series::{
    Coeff, ExponentTriple, JacobiExponent, JacobiSeries, SiegelSeries, TruncationSpec,
};
