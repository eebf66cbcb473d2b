//! Values F(s₀), F(s₀−2), F(s₀−4), … far into the left half-plane.
//!
//! F is a finite combination Σ cᵢ λᵢ^{−s} ζ(s,aᵢ) + Σ dⱼ μⱼ^{−s} with
//! 0 < aᵢ ≤ 1; η, Φ(−1,·,a), β, ζ(·,a) and L(·,χ) all have this shape. For
//! Re(1−s) > 1 each Hurwitz term is taken from Hurwitz's formula
//!
//! ζ(1−σ,a) = 2Γ(σ)(2π)^{−σ} Σ_{j≥1} cos(πσ/2 − 2πja) j^{−σ},
//!
//! and a step s → s−2 only rescales every Fourier term: Γ gains σ(σ+1),
//! the cosine flips sign and j^{−σ} gains j^{−2}. This makes very long runs
//! of Bernoulli- or Euler-type values cheap, where the exact recurrences
//! would cost quadratic time.

use rug::{Complex, Float};

use crate::dirichlet::{gcd, CharValue, DirichletCharacter};
use crate::error::{Error, Result};
use crate::mp::{abs, const_pi, pow_neg, PrecisionContext};

use super::gamma::gamma;

#[derive(Clone, Debug)]
pub struct HurwitzCombination {
    hurwitz: Vec<(Complex, Float, Float)>,
    powers: Vec<(Complex, Float)>,
}

impl HurwitzCombination {
    pub fn empty() -> Self {
        HurwitzCombination { hurwitz: Vec::new(), powers: Vec::new() }
    }

    /// Adds c·λ^{−s}ζ(s,a) for any a > 0, peeling off (a+i)^{−s} terms
    /// until the shift lies in (0, 1].
    pub fn add_hurwitz(&mut self, coef: Complex, lambda: Float, a: Float) {
        let mut a = a;
        while a > 1 {
            a -= 1u32;
            let mu = Float::with_val(a.prec(), &lambda * &a);
            self.powers.push((Complex::with_val(coef.prec(), -&coef), mu));
        }
        self.hurwitz.push((coef, lambda, a));
    }

    pub fn hurwitz(a: &Float, ctx: &PrecisionContext) -> Self {
        let mut c = Self::empty();
        c.add_hurwitz(ctx.complex(1), ctx.real(1), ctx.real(a));
        c
    }

    pub fn zeta(ctx: &PrecisionContext) -> Self {
        Self::hurwitz(&ctx.real(1), ctx)
    }

    /// Φ(−1,s,a) = 2^{−s}[ζ(s,a/2) − ζ(s,(a+1)/2)].
    pub fn phi_minus1(a: &Float, ctx: &PrecisionContext) -> Self {
        let mut c = Self::empty();
        c.add_hurwitz(ctx.complex(1), ctx.real(2), ctx.real(a / 2u32));
        c.add_hurwitz(ctx.complex(-1), ctx.real(2), ctx.real(ctx.real(a + 1u32) / 2u32));
        c
    }

    pub fn eta(ctx: &PrecisionContext) -> Self {
        Self::phi_minus1(&ctx.real(1), ctx)
    }

    /// β(s) = 4^{−s}[ζ(s,1/4) − ζ(s,3/4)].
    pub fn beta(ctx: &PrecisionContext) -> Self {
        let mut c = Self::empty();
        c.add_hurwitz(ctx.complex(1), ctx.real(4), ctx.real(0.25));
        c.add_hurwitz(ctx.complex(-1), ctx.real(4), ctx.real(0.75));
        c
    }

    /// L(s,χ) = Σ_{b mod q} χ(b) q^{−s} ζ(s, b/q).
    pub fn l_function(chi: &DirichletCharacter, ctx: &PrecisionContext) -> Self {
        let q = chi.modulus();
        let mut c = Self::empty();
        for b in 1..=q {
            if gcd(b, q) != 1 {
                continue;
            }
            let v: CharValue = chi.value(b);
            c.add_hurwitz(v.to_complex(ctx), ctx.real(q), ctx.real(b) / q);
        }
        c
    }
}

struct FourierTerm {
    j: u64,
    value: Complex,
    step: Float,
}

/// Streams F(s₀ − 2k) for k = 0, 1, 2, … via [`HurwitzCombination`].
pub struct FarSequence {
    s: Complex,
    sigma: Complex,
    common: Complex,
    terms: Vec<FourierTerm>,
    powers: Vec<(Complex, Float)>,
    scales: Vec<(Float, Float)>,
    cosh: Float,
    four_pi2: Float,
    working_digits: f64,
}

impl FarSequence {
    /// Smallest Re(1−s₀) accepted; below it the Fourier sums get long.
    pub fn min_sigma(ctx: &PrecisionContext) -> f64 {
        ctx.working_digits() as f64 / 3.0 + 1.0
    }

    fn fourier_len(working_digits: f64, sigma_re: f64) -> u64 {
        10f64.powf(working_digits / sigma_re).ceil() as u64 + 1
    }

    pub fn new(combo: &HurwitzCombination, s0: &Complex, ctx: &PrecisionContext) -> Result<Self> {
        let sigma = ctx.complex(1 - s0);
        let sigma_re = sigma.real().to_f64();
        if sigma_re < Self::min_sigma(ctx) {
            return Err(Error::Domain(format!(
                "large-order evaluation needs Re(1−s) ≥ {:.1}, got {sigma_re:.1}",
                Self::min_sigma(ctx)
            )));
        }
        let wd = ctx.working_digits() as f64;
        let pi = const_pi(ctx);
        let two_pi = ctx.real(&pi * 2u32);
        let four_pi2 = ctx.real(two_pi.square_ref());
        let common = gamma(&sigma, ctx)? * pow_neg(&two_pi, &sigma, ctx) * 2u32;
        let half_angle = ctx.complex(&sigma * &pi) / 2u32;
        let jmax = Self::fourier_len(wd, sigma_re);
        let mut terms = Vec::new();
        let mut scales = Vec::new();
        for (c, lambda, a) in &combo.hurwitz {
            let pref = ctx.complex(c * pow_neg(lambda, s0, ctx));
            scales.push((abs(&pref), ctx.real(lambda.square_ref())));
            let l2 = ctx.real(lambda.square_ref());
            for j in 1..=jmax {
                let angle = ctx.complex(&half_angle - ctx.real(&two_pi * j) * a);
                let v = ctx.complex(&pref * angle.cos()) * pow_neg(&ctx.real(j), &sigma, ctx);
                let step = -ctx.real(&l2 / (j * j));
                terms.push(FourierTerm { j, value: v, step });
            }
        }
        let powers = combo
            .powers
            .iter()
            .map(|(d, mu)| (ctx.complex(d * pow_neg(mu, s0, ctx)), ctx.real(mu.square_ref())))
            .collect();
        let cosh = ctx.real(ctx.real(&pi * sigma.imag()) / 2u32).cosh();
        Ok(FarSequence { s: ctx.complex(s0), sigma, common, terms, powers, scales, cosh, four_pi2, working_digits: wd })
    }

    /// The argument of the current value.
    pub fn current_s(&self) -> &Complex {
        &self.s
    }

    pub fn value(&self) -> Complex {
        let prec = self.common.prec().0;
        let mut sum = Complex::new(prec);
        for t in &self.terms {
            sum += &t.value;
        }
        sum *= &self.common;
        for (p, _) in &self.powers {
            sum += p;
        }
        sum
    }

    /// Size of the largest contributions; the value is treated as zero when
    /// it is below this by the working precision.
    pub fn scale(&self) -> Float {
        let prec = self.cosh.prec();
        let lam: Float = self.scales.iter().fold(Float::new(prec), |acc, (s, _)| acc + s);
        let mut out = Float::with_val(prec, self.common.abs_ref()) * lam * &self.cosh * 2u32;
        for (p, _) in &self.powers {
            out += Float::with_val(prec, p.abs_ref());
        }
        out
    }

    pub fn advance(&mut self) {
        let prec = self.common.prec().0;
        let f = Complex::with_val(prec, &self.sigma * Complex::with_val(prec, &self.sigma + 1u32)) / &self.four_pi2;
        self.common *= f;
        self.sigma += 2u32;
        self.s -= 2u32;
        for t in &mut self.terms {
            t.value *= &t.step;
        }
        for (p, mu2) in &mut self.powers {
            *p *= &*mu2;
        }
        for (s, l2) in &mut self.scales {
            *s *= &*l2;
        }
        let jmax = Self::fourier_len(self.working_digits, self.sigma.real().to_f64());
        self.terms.retain(|t| t.j <= jmax);
    }
}

impl Iterator for FarSequence {
    type Item = (Complex, Float);

    fn next(&mut self) -> Option<Self::Item> {
        let out = (self.value(), self.scale());
        self.advance();
        Some(out)
    }
}
