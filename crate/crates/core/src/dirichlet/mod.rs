//! Dirichlet characters as exact root-of-unity tables, and the generalized
//! Bernoulli numbers B_{n,χ}.
//!
//! Characters are built from the cyclic decomposition of (ℤ/qℤ)^×:
//! primitive roots for odd prime powers, ⟨−1⟩ × ⟨5⟩ for 2^e with e ≥ 3, then
//! recombined by CRT. Only fully multiplicative characters are represented.

mod bernoulli;
mod character;
mod enumerate;

pub use bernoulli::{character_power_sum, character_power_sum_brute, gen_bernoulli, power_sum_values};
pub use character::{CharValue, DirichletCharacter};
pub use enumerate::{enumerate_characters, euler_phi, gcd};
