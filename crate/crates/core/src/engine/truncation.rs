use rug::Complex;

use crate::mp::{abs, PrecisionContext, SeriesResult, Termination};

/// Adds tail terms `term(1), term(2), …` to `head`.
///
/// `term` returns `None` for terms known to vanish. Summation stops at the
/// first term that is negligible (converged) or larger than its predecessor
/// (optimal truncation), or after `budget` terms. When `exact_last` is set
/// the tail is known to vanish past that index and is summed in full.
pub(crate) fn sum_tail(
    head: Complex,
    head_terms: usize,
    budget: usize,
    exact_last: Option<usize>,
    ctx: &PrecisionContext,
    mut term: impl FnMut(usize) -> Option<Complex>,
) -> SeriesResult {
    let mut sum = head;
    if let Some(last) = exact_last {
        let mut used = head_terms;
        for k in 1..=last {
            if let Some(t) = term(k) {
                sum += t;
                used += 1;
            }
        }
        return SeriesResult::exact(sum, used);
    }
    let eps = ctx.epsilon();
    let mut used = head_terms;
    let mut prev: Option<rug::Float> = None;
    for k in 1..=budget {
        let Some(t) = term(k) else { continue };
        if t.is_zero() {
            // an exact zero says nothing about convergence
            continue;
        }
        let mag = abs(&t);
        if let Some(p) = &prev {
            if mag > *p {
                return SeriesResult {
                    value: sum,
                    error_estimate: mag,
                    terms_used: used,
                    termination: Termination::OptimalTruncation,
                };
            }
        }
        if mag <= abs(&sum) * &eps {
            return SeriesResult { value: sum, error_estimate: mag, terms_used: used, termination: Termination::Converged };
        }
        sum += t;
        used += 1;
        prev = Some(mag);
    }
    let next = (budget + 1..budget + 6).find_map(&mut term).map(|t| abs(&t)).unwrap_or_else(|| ctx.real(0));
    SeriesResult { value: sum, error_estimate: next, terms_used: used, termination: Termination::BudgetExhausted }
}
