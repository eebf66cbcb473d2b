use rug::{Complex, Float};
use serde::Serialize;

/// Why a series evaluation stopped.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Termination {
    Converged,
    OptimalTruncation,
    BudgetExhausted,
    ExactTerminating,
}

impl Termination {
    pub fn as_str(&self) -> &'static str {
        match self {
            Termination::Converged => "converged",
            Termination::OptimalTruncation => "optimal_truncation",
            Termination::BudgetExhausted => "budget_exhausted",
            Termination::ExactTerminating => "exact_terminating",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SeriesResult {
    pub value: Complex,
    /// Absolute, never negative; zero exactly when terminating.
    pub error_estimate: Float,
    pub terms_used: usize,
    pub termination: Termination,
}

impl SeriesResult {
    pub fn exact(value: Complex, terms_used: usize) -> Self {
        let prec = value.prec().0;
        SeriesResult {
            value,
            error_estimate: Float::new(prec),
            terms_used,
            termination: Termination::ExactTerminating,
        }
    }

    pub fn re(&self) -> &Float {
        self.value.real()
    }
}

/// Estimated remainder Σ_{j>k} |t_j| of a tail whose terms decay smoothly,
/// from two consecutive magnitudes `last = |t_k|` and `next = |t_{k+1}|`.
///
/// Treats the tail as locally geometric with ratio λ = next/last and
/// corrects for power-law decay, where the geometric guess undershoots by
/// p/(p−1) with p = −k·ln λ. Returns +∞ when the terms are not decreasing
/// or decay too slowly to be summable.
pub fn tail_estimate(last: &Float, next: &Float, k: usize) -> Float {
    let prec = last.prec().max(next.prec());
    if next.is_zero() {
        return Float::new(prec);
    }
    if last.is_zero() || next >= last {
        return Float::with_val(prec, rug::float::Special::Infinity);
    }
    let lambda = Float::with_val(prec, next / last);
    let one_minus = Float::with_val(prec, 1 - &lambda);
    let mut est = Float::with_val(prec, next / &one_minus);
    let p = -Float::with_val(prec, lambda.ln_ref()) * Float::with_val(prec, k.max(1));
    if p <= 1 {
        return Float::with_val(prec, rug::float::Special::Infinity);
    }
    let corr = Float::with_val(prec, &p / Float::with_val(prec, &p - 1));
    if corr > 1 {
        est *= corr;
    }
    est
}
