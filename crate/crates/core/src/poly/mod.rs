//! Exact Bernoulli and Euler numbers and polynomials, and the finite power
//! sums they close.
//!
//! Numbers come from generating-function recurrences and are memoized in
//! append-only global caches; polynomial values are expanded through the
//! addition theorems B_n(x) = Σ C(n,k) B_k x^{n−k} and
//! E_n(x) = Σ C(n,k) E_k(0) x^{n−k}.

mod cache;
mod numbers;
mod sums;

pub use numbers::{
    bernoulli_number, bernoulli_poly, binomial, euler_number, euler_poly, euler_poly_at_one,
    euler_poly_at_zero,
};
pub(crate) use numbers::{bernoulli_float, euler_number_float, euler_one_float};
pub use sums::{alternating_power_sum, alternating_power_sum_brute, power_sum, power_sum_brute};
