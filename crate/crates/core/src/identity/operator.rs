use rug::{Complex, Float};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::mp::{const_pi, tail_estimate, PrecisionContext, SeriesResult, Termination};
use crate::poly::euler_one_float;

/// Functions whose complex shift is available in closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ShiftFunction {
    /// f(z) = ln(1+e^z) at z = 0 shifted by h = πu.
    Log1pExp,
    /// f(X) = ln X at X = 1+cos πu shifted by Y = sin πu; the same point
    /// after the change of variables X + iY = 1 + e^{iπu}.
    Log,
}

/// (cos(h∂)f, sin(h∂)f) = (Re f(x+ih), Im f(x+ih)) for the chosen f.
///
/// Requires cos(πu/2) > 0, where both parts are given by the principal
/// logarithm: (ln(2cos(πu/2)), πu/2) for |u| < 1.
pub fn operator_cos_sin(f: ShiftFunction, u: &Float, ctx: &PrecisionContext) -> Result<(Float, Float)> {
    let pi = const_pi(ctx);
    let half = ctx.real(&pi * u) / 2u32;
    if ctx.real(half.cos_ref()) <= 0 {
        return Err(Error::Domain(format!("complex shift needs cos(πu/2) > 0, got u = {}", u.to_f64())));
    }
    let theta = ctx.real(&pi * u);
    let z = match f {
        ShiftFunction::Log1pExp => {
            let e = Complex::with_val(ctx.prec(), (ctx.real(0), &theta)).exp();
            Complex::with_val(ctx.prec(), e + 1u32).ln()
        }
        ShiftFunction::Log => {
            let x = ctx.real(theta.cos_ref()) + 1u32;
            let y = ctx.real(theta.sin_ref());
            Complex::with_val(ctx.prec(), (x, y)).ln()
        }
    };
    let (re, im) = z.into_real_imag();
    Ok((re, im))
}

/// Σ_{k=1}^{K} (−1)^k E_{2k−1}(1)/(2(2k)!) (πu)^{2k}, the power series of
/// ln cos(πu/2). Stops early once the estimated remainder is negligible.
pub fn log_cos_series(u: &Float, budget: usize, ctx: &PrecisionContext) -> Result<SeriesResult> {
    if ctx.real(u.abs_ref()) >= 1 {
        return Err(Error::Domain(format!("ln cos series needs |u| < 1, got {}", u.to_f64())));
    }
    let theta2 = ctx.real(ctx.real(&const_pi(ctx) * u).square_ref());
    let eps = ctx.epsilon();
    let mut sum = ctx.real(0);
    // w = θ^{2k}/(2k)!
    let mut w = ctx.real(1);
    let mut prev: Option<Float> = None;
    let mut used = 0usize;
    let term = |k: usize, w: &Float| {
        let t = euler_one_float(2 * k - 1, ctx) * w / 2u32;
        if k % 2 == 1 {
            -t
        } else {
            t
        }
    };
    for k in 1..=budget + 1 {
        w *= &theta2;
        w /= ((2 * k - 1) * 2 * k) as u64;
        let t = term(k, &w);
        let mag = ctx.real(t.abs_ref());
        if mag.is_zero() {
            return Ok(finish(sum, ctx.real(0), used, Termination::Converged, ctx));
        }
        if let Some(p) = &prev {
            let rem = tail_estimate(p, &mag, k - 1);
            if rem <= ctx.real(sum.abs_ref()) * &eps {
                return Ok(finish(sum, rem, used, Termination::Converged, ctx));
            }
            if k > budget {
                return Ok(finish(sum, rem, used, Termination::BudgetExhausted, ctx));
            }
        } else if k > budget {
            return Ok(finish(sum, mag, used, Termination::BudgetExhausted, ctx));
        }
        sum += &t;
        used += 1;
        prev = Some(mag);
    }
    unreachable!()
}

fn finish(sum: Float, err: Float, used: usize, termination: Termination, ctx: &PrecisionContext) -> SeriesResult {
    SeriesResult { value: Complex::with_val(ctx.prec(), sum), error_estimate: err, terms_used: used, termination }
}
