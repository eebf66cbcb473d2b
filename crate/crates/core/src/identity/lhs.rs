use rug::{Assign, Complex, Float};

use crate::dirichlet::DirichletCharacter;
use crate::error::{Error, Result};
use crate::mp::{pow_neg, PrecisionContext};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Trig {
    Cos,
    Sin,
}

#[derive(Clone, Debug)]
pub(crate) enum Signs {
    Plain,
    /// (−1)^{n − n_start}.
    Alternating,
    Character(DirichletCharacter),
}

/// θ-dependent factor in front of a series.
#[derive(Clone, Debug)]
pub(crate) enum Weight {
    Constant(Complex),
    /// c·θ.
    Theta(Complex),
    /// c·θ².
    ThetaSquared(Complex),
}

impl Weight {
    fn at(&self, theta: &Float, ctx: &PrecisionContext) -> Complex {
        match self {
            Weight::Constant(c) => c.clone(),
            Weight::Theta(c) => ctx.complex(c * theta),
            Weight::ThetaSquared(c) => ctx.complex(c * ctx.real(theta.square_ref())),
        }
    }
}

/// weight(θ) · Σ_{n ≥ n_start} σ_n f_n^{−p} trig(f_n θ), f_n = α(n + a).
#[derive(Clone, Debug)]
pub(crate) struct LhsSeries {
    pub weight: Weight,
    pub p: Complex,
    pub trig: Trig,
    pub signs: Signs,
    pub alpha: u32,
    pub a: Float,
    pub n_start: u64,
}

/// A series with its first N amplitudes σ_n f_n^{−p} precomputed.
pub(crate) struct PreparedSeries {
    spec: LhsSeries,
    amplitudes: Vec<Complex>,
}

impl LhsSeries {
    fn freq(&self, n: u64, ctx: &PrecisionContext) -> Float {
        ctx.real(&self.a + n) * self.alpha
    }

    pub fn prepare(&self, n_terms: usize, ctx: &PrecisionContext) -> Result<PreparedSeries> {
        let sigma = self.p.real().to_f64();
        let real_p = self.p.imag().is_zero();
        if sigma <= 1.0 && (!real_p || matches!(self.signs, Signs::Character(_))) {
            return Err(Error::Unsupported(format!(
                "no tail bound for a series with Re(p) = {sigma} ≤ 1 and complex coefficients"
            )));
        }
        let chi = match &self.signs {
            Signs::Character(chi) => Some(chi.materialize(ctx)),
            _ => None,
        };
        let mut amplitudes = Vec::with_capacity(n_terms);
        for i in 0..n_terms as u64 {
            let n = self.n_start + i;
            let mut v = pow_neg(&self.freq(n, ctx), &self.p, ctx);
            match &self.signs {
                Signs::Plain => {}
                Signs::Alternating => {
                    if i % 2 == 1 {
                        v = -v;
                    }
                }
                Signs::Character(_) => {
                    let table = chi.as_ref().unwrap();
                    v *= &table[(n % table.len() as u64) as usize];
                }
            }
            amplitudes.push(v);
        }
        Ok(PreparedSeries { spec: self.clone(), amplitudes })
    }
}

impl PreparedSeries {
    /// The partial sum at θ and a bound on the omitted tail.
    pub fn eval(&self, theta: &Float, ctx: &PrecisionContext) -> (Complex, Float) {
        let s = &self.spec;
        let w = s.weight.at(theta, ctx);
        if w.is_zero() {
            return (ctx.zero(), ctx.real(0));
        }
        let step = ctx.real(theta * s.alpha);
        let (sin_step, cos_step) = step.sin_cos(ctx.real(0));
        let phase0 = ctx.real(s.freq(s.n_start, ctx) * theta);
        let (mut sn, mut cs) = phase0.sin_cos(ctx.real(0));
        let complex_amps = self.amplitudes.iter().any(|a| !a.imag().is_zero());
        let mut re = ctx.real(0);
        let mut im = ctx.real(0);
        let mut t = ctx.real(0);
        let mut tmp = ctx.real(0);
        for amp in &self.amplitudes {
            let trig = if s.trig == Trig::Cos { &cs } else { &sn };
            tmp.assign(amp.real() * trig);
            re += &tmp;
            if complex_amps {
                tmp.assign(amp.imag() * trig);
                im += &tmp;
            }
            // rotate by α θ
            t.assign(&cs * &cos_step);
            tmp.assign(&sn * &sin_step);
            t -= &tmp;
            sn *= &cos_step;
            tmp.assign(&cs * &sin_step);
            sn += &tmp;
            std::mem::swap(&mut cs, &mut t);
        }
        let sum = ctx.complex((re, im));
        let value = ctx.complex(&sum * &w);
        let bound = self.tail_bound(theta, ctx) * ctx.real(w.abs_ref());
        (value, bound)
    }

    /// Bound on |Σ_{n ≥ n0} σ_n f_n^{−p} trig(f_n θ)| for the first omitted n0.
    fn tail_bound(&self, theta: &Float, ctx: &PrecisionContext) -> Float {
        let s = &self.spec;
        let n0 = s.n_start + self.amplitudes.len() as u64;
        let sigma = ctx.real(s.p.real());
        if sigma > 1 {
            // ∫_{n0−1}^∞ (α(t+a))^{−σ} dt
            let base = ctx.real(&s.a + (n0 - 1));
            let sm1 = ctx.real(&sigma - 1u32);
            let alpha_pow = ctx.real(ctx.real(s.alpha).pow_ref_f(&sigma)).recip();
            let mut b = ctx.real(base.pow_ref_f(&ctx.real(-&sm1))) * alpha_pow / sm1;
            if !s.p.imag().is_zero() {
                // complex p: |f^{−p}| = f^{−σ}; the bound stands unchanged
                b = ctx.real(b.abs_ref());
            }
            return b;
        }
        // Dirichlet test: |Σ_{n≥n0} b_n z^n| ≤ b_{n0}/|sin(φ/2)| for decreasing b_n.
        let b0 = pow_neg(&s.freq(n0, ctx), &s.p, ctx);
        let mut phi = ctx.real(theta * s.alpha);
        if matches!(s.signs, Signs::Alternating) {
            phi += crate::mp::const_pi(ctx);
        }
        let half_sin = ctx.real(ctx.real(&phi / 2u32).sin().abs_ref());
        if half_sin.is_zero() {
            return ctx.real(rug::float::Special::Infinity);
        }
        ctx.real(b0.abs_ref()) / half_sin
    }
}

trait PowF {
    fn pow_ref_f(&self, e: &Float) -> Float;
}

impl PowF for Float {
    fn pow_ref_f(&self, e: &Float) -> Float {
        use rug::ops::Pow;
        Float::with_val(self.prec(), self.pow(e))
    }
}
