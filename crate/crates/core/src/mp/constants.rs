use rug::float::Constant;
use rug::Float;

use super::PrecisionContext;

pub fn const_pi(ctx: &PrecisionContext) -> Float {
    ctx.real(Constant::Pi)
}

pub fn const_ln2(ctx: &PrecisionContext) -> Float {
    ctx.real(Constant::Log2)
}
