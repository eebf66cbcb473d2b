use rug::Float;

use crate::engine::large_order::{FarSequence, HurwitzCombination};
use crate::error::Result;
use crate::mp::{tail_estimate, PrecisionContext, Termination};
use crate::poly::euler_one_float;

/// Index below which E_n(1) comes from the exact table.
const EXACT_EULER_LIMIT: usize = 160;

/// E_{2k−1}(1) for k = 1, 2, …: exact values first, then the large-order
/// generator through E_n(1) = 2η(−n).
pub(crate) struct EulerOneStream<'a> {
    k: usize,
    far: Option<FarSequence>,
    ctx: &'a PrecisionContext,
}

impl<'a> EulerOneStream<'a> {
    pub(crate) fn new(ctx: &'a PrecisionContext) -> Self {
        EulerOneStream { k: 0, far: None, ctx }
    }

    pub(crate) fn next_value(&mut self) -> Result<Float> {
        self.k += 1;
        let n = 2 * self.k - 1;
        if n < EXACT_EULER_LIMIT {
            return Ok(euler_one_float(n, self.ctx));
        }
        if self.far.is_none() {
            let s0 = self.ctx.complex(-(n as i64));
            self.far = Some(FarSequence::new(&HurwitzCombination::eta(self.ctx), &s0, self.ctx)?);
        }
        let (v, _) = self.far.as_mut().unwrap().next().unwrap();
        Ok(Float::with_val(self.ctx.prec(), v.real() * 2u32))
    }
}

pub(crate) struct TailOutcome {
    pub sum: Float,
    pub error: Float,
    pub terms: usize,
    pub termination: Termination,
}

/// Sums t_1, t_2, … (real) until the estimated remainder is below
/// `tolerance` (or negligible relative to `reference + sum` when no
/// tolerance is given), or `budget` terms have been added. Zero terms are
/// skipped.
pub(crate) fn sum_real_tail(
    budget: usize,
    tolerance: Option<&Float>,
    reference: &Float,
    ctx: &PrecisionContext,
    mut term: impl FnMut(usize) -> Result<Float>,
) -> Result<TailOutcome> {
    let eps = ctx.epsilon();
    let mut sum = ctx.real(0);
    let mut prev_mag: Option<Float> = None;
    let mut added = 0usize;
    let mut k = 1usize;
    loop {
        let t = term(k)?;
        let mag = ctx.real(t.abs_ref());
        if let Some(prev) = &prev_mag {
            let remainder = tail_estimate(prev, &mag, k - 1);
            let target = match tolerance {
                Some(tol) => tol.clone(),
                None => ctx.real(ctx.real(reference + &sum).abs_ref()) * &eps,
            };
            if remainder <= target {
                return Ok(TailOutcome { sum, error: remainder, terms: added, termination: Termination::Converged });
            }
            if k > budget {
                return Ok(TailOutcome { sum, error: remainder, terms: added, termination: Termination::BudgetExhausted });
            }
        } else if k > budget {
            return Ok(TailOutcome { sum, error: mag, terms: added, termination: Termination::BudgetExhausted });
        }
        if !mag.is_zero() {
            sum += &t;
            added += 1;
            prev_mag = Some(mag);
        }
        k += 1;
    }
}
