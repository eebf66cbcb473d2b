use rug::ops::Pow;
use rug::{Complex, Float, Rational};

use super::PrecisionContext;

pub fn abs(z: &Complex) -> Float {
    Float::with_val(z.prec().0, z.abs_ref())
}

pub fn is_real(z: &Complex) -> bool {
    z.imag().is_zero()
}

/// Real part, for callers that know the value is real.
pub fn real_value(z: &Complex) -> Float {
    z.real().clone()
}

pub fn from_rational(r: &Rational, ctx: &PrecisionContext) -> Complex {
    ctx.complex((ctx.real(r), 0))
}

/// `Some(n)` when `s = −n` exactly.
pub fn nonpositive_integer(s: &Complex) -> Option<u64> {
    if !is_real(s) || !s.real().is_integer() || s.real().is_sign_positive() && !s.real().is_zero() {
        return None;
    }
    let n = Float::with_val(s.prec().0, -s.real()).to_integer()?;
    n.to_u64()
}

/// base^(−s) for real base > 0, principal branch.
pub fn pow_neg(base: &Float, s: &Complex, ctx: &PrecisionContext) -> Complex {
    if is_real(s) {
        let e = ctx.real(-s.real());
        let v = ctx.real(base.pow(&e));
        ctx.complex((v, 0))
    } else {
        let l = ctx.real(base.ln_ref());
        let z = ctx.complex(-s) * l;
        z.exp()
    }
}

pub fn pow_neg_u64(n: u64, s: &Complex, ctx: &PrecisionContext) -> Complex {
    pow_neg(&ctx.real(n), s, ctx)
}
