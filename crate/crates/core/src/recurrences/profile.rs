use nalgebra::{DMatrix, DVector};
use rug::Float;

use super::zeta::{zeta_odd_fast_fixed, zeta_odd_fast_terms};
use super::SeriesScheme;
use crate::error::{Error, Result};
use crate::mp::PrecisionContext;

/// First k in the fitted window.
pub const PROFILE_K_START: usize = 5;

/// Tail-term magnitudes of a fast ζ(2r+1) series and the least-squares fit
/// ln|t_k| ≈ slope·k + exponent·ln k + intercept over k = 5..=K.
#[derive(Clone, Debug)]
pub struct ConvergenceProfile {
    pub scheme: SeriesScheme,
    pub k_start: usize,
    pub term_magnitudes: Vec<Float>,
    pub fitted_slope: Float,
    pub fitted_k_exponent: Float,
    pub intercept: Float,
}

impl ConvergenceProfile {
    /// The model slope −2 ln m.
    pub fn expected_slope(&self) -> f64 {
        let m = self.scheme.id.fast_base().map(|b| b.m()).unwrap_or(1);
        -2.0 * (m as f64).ln()
    }

    /// The model exponent −2r+1.
    pub fn expected_k_exponent(&self) -> f64 {
        1.0 - 2.0 * self.scheme.order as f64
    }
}

/// One row of a term table: the k-th tail term and ζ(2r+1) truncated after it.
#[derive(Clone, Debug)]
pub struct TermRow {
    pub k: usize,
    pub term: Float,
    pub cumulative: Float,
}

fn check(scheme: &SeriesScheme) -> Result<crate::recurrences::FastBase> {
    let base = scheme
        .id
        .fast_base()
        .ok_or_else(|| Error::Unsupported(format!("no term profile for scheme {}", scheme.id)))?;
    Ok(base)
}

/// Tail terms k = 0..=K of a fast scheme, with the running value of ζ(2r+1).
pub fn term_table(scheme: &SeriesScheme, ctx: &PrecisionContext) -> Result<Vec<TermRow>> {
    let base = check(scheme)?;
    let mut acc = zeta_odd_fast_fixed(scheme.order, base, scheme.budget, ctx)?;
    let terms = zeta_odd_fast_terms(scheme.order, base, scheme.budget + 1, ctx)?;
    Ok(terms
        .into_iter()
        .enumerate()
        .map(|(k, t)| {
            acc += &t;
            TermRow { k, term: t, cumulative: acc.clone() }
        })
        .collect())
}

pub fn convergence_profile(scheme: &SeriesScheme, ctx: &PrecisionContext) -> Result<ConvergenceProfile> {
    let base = check(scheme)?;
    if scheme.order < 2 {
        return Err(Error::Domain(format!("profile needs r ≥ 2, got {}", scheme.order)));
    }
    if scheme.budget < 30 {
        return Err(Error::Domain(format!("profile needs K ≥ 30, got {}", scheme.budget)));
    }
    let terms = zeta_odd_fast_terms(scheme.order, base, scheme.budget + 1, ctx)?;
    let window: Vec<Float> = terms[PROFILE_K_START..].iter().map(|t| ctx.real(t.abs_ref())).collect();
    if let Some(i) = window.iter().position(|t| t.is_zero()) {
        return Err(Error::Domain(format!("term {} vanishes; cannot fit its logarithm", i + PROFILE_K_START)));
    }
    let n = window.len();
    let mut a = DMatrix::<f64>::zeros(n, 3);
    let mut b = DVector::<f64>::zeros(n);
    for (i, t) in window.iter().enumerate() {
        let k = (i + PROFILE_K_START) as f64;
        a[(i, 0)] = k;
        a[(i, 1)] = k.ln();
        a[(i, 2)] = 1.0;
        b[i] = ctx.real(t.ln_ref()).to_f64();
    }
    let coef = a
        .svd(true, true)
        .solve(&b, 1e-12)
        .map_err(|e| Error::Domain(format!("least-squares fit failed: {e}")))?;
    Ok(ConvergenceProfile {
        scheme: *scheme,
        k_start: PROFILE_K_START,
        term_magnitudes: window,
        fitted_slope: ctx.real(coef[0]),
        fitted_k_exponent: ctx.real(coef[1]),
        intercept: ctx.real(coef[2]),
    })
}
