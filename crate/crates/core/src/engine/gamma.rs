use rug::Complex;

use crate::error::{Error, Result};
use crate::mp::{const_pi, nonpositive_integer, PrecisionContext};
use crate::poly::bernoulli_float;

/// Γ(z) for complex z by Stirling's series after shifting Re z upward;
/// reflection for Re z < 1/2.
pub fn gamma(z: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    if nonpositive_integer(z).is_some() {
        return Err(Error::Domain("Γ has poles at non-positive integers".into()));
    }
    if z.imag().is_zero() && *z.real() > 0 {
        return Ok(ctx.complex((ctx.real(z.real().gamma_ref()), 0)));
    }
    if *z.real() < 0.5 {
        let pi = const_pi(ctx);
        let one_minus = ctx.complex(1 - z);
        let sin = ctx.complex(z * &pi).sin();
        return Ok(ctx.complex(&pi) / (sin * gamma(&one_minus, ctx)?));
    }
    let target = 0.4 * ctx.working_digits() as f64 + 10.0;
    let shift = (target - z.real().to_f64()).ceil().max(0.0) as u64;
    let mut prod = ctx.complex(1);
    for i in 0..shift {
        prod *= ctx.complex(z + i);
    }
    let w = ctx.complex(z + shift);
    let ln_w = ctx.complex(w.ln_ref());
    let two_pi = const_pi(ctx) * 2u32;
    let mut lg = ctx.complex(&w - 0.5) * &ln_w - &w + ctx.real(two_pi.ln()) / 2u32;
    let inv_w2 = ctx.complex(w.square_ref()).recip();
    let mut pw = ctx.complex(w.recip_ref());
    let eps = ctx.epsilon();
    for k in 1..400usize {
        let c = bernoulli_float(2 * k, ctx) / ((2 * k * (2 * k - 1)) as u64);
        let term = ctx.complex(&pw * &c);
        let small = ctx.real(term.abs_ref()) < eps;
        lg += term;
        if small {
            break;
        }
        pw *= &inv_w2;
    }
    Ok(lg.exp() / prod)
}
