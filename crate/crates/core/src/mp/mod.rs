//! Precision contexts and the multiprecision scalars shared by every module.
//!
//! Reals and complexes are MPFR/MPC values (via `rug`) rounded to nearest at
//! the context's working precision, `digits + guard_digits` decimal digits.

mod combin;
mod constants;
mod context;
mod decimal;
mod ops;
mod series;

pub use combin::{complex_binomial, factorial, rising_factorial};
pub use constants::{const_ln2, const_pi};
pub use context::PrecisionContext;
pub use decimal::{format_complex, format_plain, format_sci, parse_complex, parse_rational, parse_real};
pub use ops::{abs, from_rational, is_real, nonpositive_integer, pow_neg, pow_neg_u64, real_value};
pub use series::{tail_estimate, SeriesResult, Termination};

pub type MpReal = rug::Float;
pub type MpComplex = rug::Complex;
