//! Evaluators for η(s), Φ(−1,s,a), β(s), ζ(s,a), ζ(s) and L(s,χ).
//!
//! Each evaluator sums a finite head and then an asymptotic tail in inverse
//! powers of the head length. Tails are divergent in general and are cut at
//! their smallest term; at negative integers the binomial factors vanish
//! and the tail terminates, giving exact values.

mod closed_forms;
mod evaluators;
mod exact;
mod gamma;
pub mod large_order;
mod request;
mod truncation;

pub use closed_forms::{cosine_sum_closed_form, cosine_sum_partial, CosineSum};
pub use evaluators::{
    beta_eval, dirichlet_l, eta_asymptotic, eta_direct, hurwitz_zeta, phi_minus1, riemann_zeta,
};
pub use exact::{
    beta_special_negative, eta_special_negative, hurwitz_special_negative, l_special_negative,
    phi_special_negative, zeta_even_exact,
};
pub use gamma::gamma;
pub use request::{auto_params, evaluate, EvalRequest, Function};
