use rug::{Complex, Float};

use super::evaluators::inv_pow;
use super::request::{evaluate, EvalRequest, Function};
use crate::error::{Error, Result};
use crate::mp::{const_pi, pow_neg, PrecisionContext};

/// Cosine-weighted Dirichlet series Σ w_n n^{−s} cos(nφ) with closed forms
/// in ζ(s) or η(s). `Alt*` carry the extra factor (−1)^{n−1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CosineSum {
    /// φ = 2π/3
    Third,
    /// φ = π/2
    Quarter,
    /// φ = π/3
    Sixth,
    AltThird,
    AltQuarter,
    AltSixth,
}

impl CosineSum {
    pub const ALL: [CosineSum; 6] = [
        CosineSum::Third,
        CosineSum::Quarter,
        CosineSum::Sixth,
        CosineSum::AltThird,
        CosineSum::AltQuarter,
        CosineSum::AltSixth,
    ];

    /// (numerator, denominator) of φ/π.
    fn angle(&self) -> (u32, u32) {
        match self {
            CosineSum::Third | CosineSum::AltThird => (2, 3),
            CosineSum::Quarter | CosineSum::AltQuarter => (1, 2),
            CosineSum::Sixth | CosineSum::AltSixth => (1, 3),
        }
    }

    fn alternating(&self) -> bool {
        matches!(self, CosineSum::AltThird | CosineSum::AltQuarter | CosineSum::AltSixth)
    }
}

/// third: ½(3^{1−s}−1)ζ(s); quarter: −2^{−s}η(s);
/// sixth: ½(6^{1−s}−3^{1−s}−2^{1−s}+1)ζ(s); alt_third = −sixth;
/// alt_quarter: 2^{−s}η(s); alt_sixth: ½(1−3^{1−s})ζ(s).
pub fn cosine_sum_closed_form(s: &Complex, case: CosineSum, ctx: &PrecisionContext) -> Result<Complex> {
    if *s.real() <= 1 {
        return Err(Error::Domain("cosine-weighted sums need Re(s) > 1".into()));
    }
    let zeta = || evaluate(Function::Zeta, &EvalRequest::new(s.clone()), ctx).map(|r| r.value);
    let eta = || evaluate(Function::Eta, &EvalRequest::new(s.clone()), ctx).map(|r| r.value);
    let s1 = ctx.complex(s - 1u32);
    // b^{1−s}
    let p1 = |b: u32| pow_neg(&ctx.real(b), &s1, ctx);
    let half = |z: Complex| z / 2u32;
    Ok(match case {
        CosineSum::Third => half(p1(3) - 1u32) * zeta()?,
        CosineSum::Quarter => -(pow_neg(&ctx.real(2), s, ctx) * eta()?),
        CosineSum::Sixth => sixth(s, ctx)?,
        CosineSum::AltThird => -sixth(s, ctx)?,
        CosineSum::AltQuarter => pow_neg(&ctx.real(2), s, ctx) * eta()?,
        CosineSum::AltSixth => half(ctx.complex(1) - p1(3)) * zeta()?,
    })
}

fn sixth(s: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    let zeta = evaluate(Function::Zeta, &EvalRequest::new(s.clone()), ctx)?.value;
    let s1 = ctx.complex(s - 1u32);
    let p1 = |b: u32| pow_neg(&ctx.real(b), &s1, ctx);
    let c = p1(6) - p1(3) - p1(2) + 1u32;
    Ok(c * zeta / 2u32)
}

/// First `n_terms` terms of the cosine-weighted series and the integral
/// tail bound N^{1−σ}/(σ−1), σ = Re s.
pub fn cosine_sum_partial(
    s: &Complex,
    case: CosineSum,
    n_terms: u64,
    ctx: &PrecisionContext,
) -> Result<(Complex, Float)> {
    if *s.real() <= 1 {
        return Err(Error::Domain("cosine-weighted sums need Re(s) > 1".into()));
    }
    let (num, den) = case.angle();
    let pi = const_pi(ctx);
    let mut sum = ctx.zero();
    for n in 1..=n_terms {
        let c = ctx.real(ctx.real(&pi * (n * num as u64)) / den).cos();
        let mut t = inv_pow(&ctx.real(n), s, ctx) * c;
        if case.alternating() && n % 2 == 0 {
            t = -t;
        }
        sum += t;
    }
    let sigma = ctx.real(s.real());
    let bound = ctx.real(ctx.real(n_terms).pow_ref_neg(&ctx.real(&sigma - 1u32))) / ctx.real(&sigma - 1u32);
    Ok((sum, bound))
}

trait PowNeg {
    fn pow_ref_neg(&self, e: &Float) -> Float;
}

impl PowNeg for Float {
    fn pow_ref_neg(&self, e: &Float) -> Float {
        use rug::ops::Pow;
        let neg = Float::with_val(e.prec(), -e);
        Float::with_val(self.prec(), self.pow(&neg))
    }
}
