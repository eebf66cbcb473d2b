//! Multiprecision evaluation of zeta-type functions and numerical
//! certification of the Fourier-series identities they satisfy.
//!
//! Layers, bottom up:
//!
//! - [`mp`]: precision contexts, constants, complex binomials and series results.
//! - [`poly`]: exact Bernoulli and Euler numbers and polynomials, power sums.
//! - [`dirichlet`]: characters as root-of-unity tables, generalized Bernoulli numbers.
//! - [`engine`]: evaluators for η, Φ(−1,s,a), β, ζ(s,a), ζ and L(s,χ).
//! - [`recurrences`]: recursive series for odd zeta, η and β values.
//! - [`identity`]: grid verification of two-sided trigonometric series identities.

pub mod dirichlet;
pub mod engine;
pub mod error;
pub mod identity;
pub mod mp;
pub mod poly;
pub mod recurrences;

pub use error::{Error, Result};
pub use mp::{MpComplex, MpReal, PrecisionContext, SeriesResult, Termination};
pub use rug::Rational;
