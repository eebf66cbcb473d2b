//! Numeric certification of operator and Fourier-series identities.
//!
//! Each registered identity has a trigonometric series on one side, summed
//! to N terms with an analytic tail bound, and special-function values on
//! the other: a finite head plus a convergent tail of Euler/Bernoulli-type
//! numbers or shifted function values. Both sides are compared on a grid of
//! u = x/c inside the identity's validity range.

mod lhs;
mod operator;
mod params;
mod registry;
mod rhs;
mod verify;

pub use operator::{log_cos_series, operator_cos_sin, ShiftFunction};
pub use params::IdentityParams;
pub use registry::{default_params, lookup_identity, IdentityInfo, ParamKind, URange, REGISTRY};
pub use verify::{
    list_identities, symmetric_grid, verify_identity, IdentityReport, Verdict, DEFAULT_GRID, TAIL_BOUND_MULTIPLIER,
};
