//! Recursive series for η(2r+1), η(m), ζ(2r+1), β(2r+1) and β(2r), and the
//! term-magnitude profiles of the fast ζ(2r+1) series.
//!
//! Every recursion feeds on its own lower-order outputs, so schemes never
//! borrow values from the analytic engine and act as independent witnesses
//! of each other.

mod beta;
mod eta;
mod profile;
mod scheme;
mod tail;
mod zeta;

pub use beta::{beta_even, beta_odd, beta_odd_coefficient};
pub use eta::{eta_all, eta_odd, eta_odd_terms, EtaScheme};
pub use profile::{convergence_profile, term_table, ConvergenceProfile, TermRow};
pub use scheme::{SchemeId, SeriesScheme};
pub use zeta::{zeta_odd, zeta_odd_fast, zeta_odd_fast_terms, zeta_odd_to_tolerance, FastBase, ZetaVariant};
