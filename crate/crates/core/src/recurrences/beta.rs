use rug::ops::Pow;
use rug::{Complex, Float, Integer, Rational};

use super::tail::sum_real_tail;
use crate::error::Result;
use crate::mp::{const_pi, PrecisionContext, SeriesResult, Termination};
use crate::poly::euler_number_float;

/// The rational c_r with β(2r+1) = c_r π^{2r+1}:
/// c_0 = 1/4, c_r = Σ_{k=1}^r (−1)^{k−1} c_{r−k} / (4^k (2k)!).
pub fn beta_odd_coefficient(r: u32) -> Rational {
    let mut c = vec![Rational::from((1, 4))];
    for j in 1..=r as usize {
        let mut acc = Rational::new();
        for k in 1..=j {
            let den = Integer::from(Integer::u_pow_u(4, k as u32)) * Integer::from(Integer::factorial(2 * k as u32));
            let t = Rational::from(&c[j - k] / Rational::from(den));
            if k % 2 == 1 {
                acc += t;
            } else {
                acc -= t;
            }
        }
        c.push(acc);
    }
    c.pop().unwrap()
}

/// β(2r+1) = c_r π^{2r+1}, exact up to the rounding of π.
pub fn beta_odd(r: u32, ctx: &PrecisionContext) -> Complex {
    let pi = const_pi(ctx);
    let v = ctx.real(&beta_odd_coefficient(r)) * ctx.real((&pi).pow(2 * r + 1));
    Complex::with_val(ctx.prec(), v)
}

/// β(2r) from β(0) = 1/2 and the Euler-number tail. The tail terms decay
/// only like k^{−2}, so the error estimate is usually far above precision.
pub fn beta_even(r: u32, budget: usize, ctx: &PrecisionContext) -> Result<SeriesResult> {
    if r == 0 {
        return Ok(SeriesResult::exact(Complex::with_val(ctx.prec(), 0.5), 0));
    }
    let pi = const_pi(ctx);
    let x = ctx.real(&pi / 2u32);
    let x2 = ctx.real(x.square_ref());
    let mut vals = vec![ctx.real(0.5)];
    let mut errs = vec![ctx.real(0)];
    let mut last = (0usize, Termination::Converged);
    for j in 1..=r as usize {
        let mut head = ctx.real(0);
        let mut head_err = ctx.real(0);
        let mut p = ctx.real(1);
        for k in 1..=j {
            p *= &x2;
            p /= ((2 * k - 1) * 2 * k) as u64;
            let t = ctx.real(&p * &vals[j - k]);
            if k % 2 == 1 {
                head += &t;
            } else {
                head -= &t;
            }
            head_err += ctx.real(&p * &errs[j - k]);
        }
        // w_k = x^{2j+2k} / (2 (2j+2k)!)
        let mut w: Float = ctx.real((&x).pow(2 * j as u32)) / ctx.real(Integer::from(Integer::factorial(2 * j as u32))) / 2u32;
        let out = sum_real_tail(budget, None, &head, ctx, |k| {
            let n = (2 * j + 2 * k) as u64;
            w *= &x2;
            w /= (n - 1) * n;
            let t = euler_number_float(2 * k, ctx) * &w;
            Ok(if (j + k - 1) % 2 == 1 { -t } else { t })
        })?;
        let value = head + &out.sum;
        let err = head_err + &out.error + ctx.real(value.abs_ref()) * ctx.epsilon();
        vals.push(value);
        errs.push(err);
        last = (out.terms, out.termination);
    }
    Ok(SeriesResult {
        value: Complex::with_val(ctx.prec(), vals.pop().unwrap()),
        error_estimate: errs.pop().unwrap(),
        terms_used: last.0,
        termination: last.1,
    })
}
