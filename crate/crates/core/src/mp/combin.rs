use rug::{Complex, Float, Integer};

use super::PrecisionContext;

/// s(s+1)⋯(s+n−1); 1 for n = 0.
pub fn rising_factorial(s: &Complex, n: u64, ctx: &PrecisionContext) -> Complex {
    let mut acc = ctx.complex(1);
    let mut t = ctx.complex(s);
    for _ in 0..n {
        acc *= &t;
        t += 1;
    }
    acc
}

/// t(t−1)⋯(t−k+1)/k!; 1 for k = 0.
pub fn complex_binomial(t: &Complex, k: u64, ctx: &PrecisionContext) -> Complex {
    let mut acc = ctx.complex(1);
    let mut u = ctx.complex(t);
    for _ in 0..k {
        acc *= &u;
        u -= 1;
    }
    acc / factorial(k, ctx)
}

pub fn factorial(n: u64, ctx: &PrecisionContext) -> Float {
    ctx.real(Integer::from(Integer::factorial(n as u32)))
}
