use rug::{Complex, Float, Rational};

use crate::dirichlet::{euler_phi, gen_bernoulli, DirichletCharacter};
use crate::engine::large_order::{FarSequence, HurwitzCombination};
use crate::engine::{evaluate, zeta_even_exact, EvalRequest, Function};
use crate::error::{Error, Result};
use crate::mp::{pow_neg_u64, tail_estimate, PrecisionContext};
use crate::poly::{bernoulli_poly, euler_number_float, euler_one_float, euler_poly};

/// Largest index taken from the exact rational tables; beyond it values
/// come from the far generator.
const EXACT_LIMIT: usize = 100;
const EXACT_LIMIT_CHAR: usize = 60;
/// Tail coefficients kept per evaluation.
pub(crate) const MAX_TAIL_TERMS: usize = 1_500_000;
/// Consecutive vanishing coefficients taken as a terminating tail.
const ZERO_RUN: usize = 8;

/// Value sequences V_j feeding an RHS tail, j = 0, 1, 2, ….
#[derive(Clone, Debug)]
pub(crate) enum Family {
    /// F(s₀ − 2j) from the analytic engine, then the far generator.
    Function { f: Function, s0: Complex, a: Option<Float>, chi: Option<DirichletCharacter> },
    /// E_n(1), n = n₀ + 2j.
    EulerOne { n0: usize },
    /// E_n(a).
    EulerPoly { n0: usize, a: Rational },
    /// Euler numbers E_n.
    EulerNumber { n0: usize },
    /// B_n(a).
    BernoulliPoly { n0: usize, a: Rational },
    /// B_{n,χ}.
    GenBernoulli { n0: usize, chi: DirichletCharacter },
    /// ζ(2k), k = k₀ + j.
    ZetaEven { k0: usize },
}

pub(crate) enum FamilyValue {
    Value { v: Complex, err: Float, zero: bool },
    /// F has a simple pole at this argument with the given residue.
    Pole(Complex),
}

struct FamilyStream {
    family: Family,
    j: usize,
    far: Option<(FarSequence, Complex)>,
}

fn combo_for(f: Function, a: Option<&Float>, chi: Option<&DirichletCharacter>, ctx: &PrecisionContext) -> HurwitzCombination {
    match f {
        Function::Eta => HurwitzCombination::eta(ctx),
        Function::Zeta => HurwitzCombination::zeta(ctx),
        Function::Hurwitz => HurwitzCombination::hurwitz(a.unwrap(), ctx),
        Function::Beta => HurwitzCombination::beta(ctx),
        Function::Phi => HurwitzCombination::phi_minus1(a.unwrap(), ctx),
        Function::L => HurwitzCombination::l_function(chi.unwrap(), ctx),
    }
}

fn residue(f: Function, chi: Option<&DirichletCharacter>, ctx: &PrecisionContext) -> Option<Complex> {
    match f {
        Function::Zeta | Function::Hurwitz => Some(ctx.complex(1)),
        Function::L => {
            let chi = chi.unwrap();
            chi.is_principal()
                .then(|| ctx.complex(ctx.real(euler_phi(chi.modulus())) / chi.modulus()))
        }
        _ => None,
    }
}

impl FamilyStream {
    fn new(family: Family) -> Self {
        FamilyStream { family, j: 0, far: None }
    }

    fn far_next(&mut self, ctx: &PrecisionContext) -> FamilyValue {
        let (seq, factor) = self.far.as_mut().unwrap();
        let (v, scale) = seq.next().unwrap();
        let v = ctx.complex(&v * &*factor);
        let scale = scale * ctx.real(factor.abs_ref());
        let tiny = ctx.real(&scale * ctx.epsilon()) * 1e8f64;
        let zero = ctx.real(v.abs_ref()) < tiny;
        FamilyValue::Value { v, err: ctx.real(&scale * ctx.epsilon()), zero }
    }

    /// Starts the far generator at F(s₀), with every value scaled by `factor`.
    fn start_far(&mut self, f: &HurwitzCombination, s0: Complex, factor: Complex, ctx: &PrecisionContext) -> Result<()> {
        self.far = Some((FarSequence::new(f, &s0, ctx)?, factor));
        Ok(())
    }

    fn next(&mut self, ctx: &PrecisionContext) -> Result<FamilyValue> {
        let j = self.j;
        self.j += 1;
        if self.far.is_some() {
            // index-dependent factors (−n) are refreshed per step
            if let Some(f) = self.index_factor(j, ctx) {
                self.far.as_mut().unwrap().1 = f;
            }
            return Ok(self.far_next(ctx));
        }
        let exact = |v: Complex| Ok(FamilyValue::Value { zero: v.is_zero(), v, err: ctx.real(0) });
        match self.family.clone() {
            Family::Function { f, s0, a, chi } => {
                let s = ctx.complex(&s0 - 2 * j as u64);
                let re_sigma = ctx.real(1 - s.real()).to_f64();
                if re_sigma >= FarSequence::min_sigma(ctx) {
                    let combo = combo_for(f, a.as_ref(), chi.as_ref(), ctx);
                    self.start_far(&combo, s, ctx.complex(1), ctx)?;
                    return Ok(self.far_next(ctx));
                }
                let mut req = EvalRequest::new(s);
                if let Some(a) = a {
                    req = req.with_a(a);
                }
                if let Some(chi) = chi.clone() {
                    req = req.with_chi(chi);
                }
                match evaluate(f, &req, ctx) {
                    Ok(r) => Ok(FamilyValue::Value { zero: r.value.is_zero(), v: r.value, err: r.error_estimate }),
                    Err(Error::Pole { .. }) => residue(f, chi.as_ref(), ctx)
                        .map(FamilyValue::Pole)
                        .ok_or_else(|| Error::Domain("unexpected pole".into())),
                    Err(e) => Err(e),
                }
            }
            Family::EulerOne { n0 } => {
                let n = n0 + 2 * j;
                if n < EXACT_LIMIT {
                    return exact(ctx.complex(euler_one_float(n, ctx)));
                }
                self.start_far(&HurwitzCombination::eta(ctx), ctx.complex(-(n as i64)), ctx.complex(2), ctx)?;
                Ok(self.far_next(ctx))
            }
            Family::EulerPoly { n0, a } => {
                let n = n0 + 2 * j;
                if n < EXACT_LIMIT {
                    return exact(ctx.complex(&euler_poly(n, &a)));
                }
                let combo = HurwitzCombination::phi_minus1(&ctx.real(&a), ctx);
                self.start_far(&combo, ctx.complex(-(n as i64)), ctx.complex(2), ctx)?;
                Ok(self.far_next(ctx))
            }
            Family::EulerNumber { n0 } => {
                let n = n0 + 2 * j;
                if n < EXACT_LIMIT {
                    return exact(ctx.complex(euler_number_float(n, ctx)));
                }
                self.start_far(&HurwitzCombination::beta(ctx), ctx.complex(-(n as i64)), ctx.complex(2), ctx)?;
                Ok(self.far_next(ctx))
            }
            Family::BernoulliPoly { n0, a } => {
                let n = n0 + 2 * j;
                if n < EXACT_LIMIT {
                    return exact(ctx.complex(&bernoulli_poly(n, &a)));
                }
                let combo = HurwitzCombination::hurwitz(&ctx.real(&a), ctx);
                self.start_far(&combo, ctx.complex(1 - n as i64), ctx.complex(-(n as i64)), ctx)?;
                Ok(self.far_next(ctx))
            }
            Family::GenBernoulli { n0, chi } => {
                let n = n0 + 2 * j;
                if n < EXACT_LIMIT_CHAR {
                    return exact(gen_bernoulli(&chi, n, ctx));
                }
                let combo = HurwitzCombination::l_function(&chi, ctx);
                self.start_far(&combo, ctx.complex(1 - n as i64), ctx.complex(-(n as i64)), ctx)?;
                Ok(self.far_next(ctx))
            }
            Family::ZetaEven { k0 } => {
                let k = k0 + j;
                if 2 * k < EXACT_LIMIT {
                    return exact(ctx.complex(zeta_even_exact(k, ctx)));
                }
                // 1 + 2^{−2k} + 3^{−2k} + … converges at once for large k
                let s = ctx.complex(2 * k as u64);
                let mut sum = ctx.complex(1);
                let eps = ctx.epsilon();
                for n in 2u64.. {
                    let t = pow_neg_u64(n, &s, ctx);
                    if ctx.real(t.abs_ref()) < eps {
                        break;
                    }
                    sum += t;
                }
                exact(sum)
            }
        }
    }

    /// Multiplier −n for Bernoulli-type values taken from ζ(1−n,·) or L(1−n,χ).
    fn index_factor(&self, j: usize, ctx: &PrecisionContext) -> Option<Complex> {
        match &self.family {
            Family::BernoulliPoly { n0, .. } | Family::GenBernoulli { n0, .. } => {
                Some(ctx.complex(-((n0 + 2 * j) as i64)))
            }
            _ => None,
        }
    }
}

/// c·θ^{2·power}.
#[derive(Clone, Debug)]
pub(crate) struct HeadTerm {
    pub power: usize,
    pub coef: Complex,
    pub err: Float,
}

/// Σ_j w_j V_j θ^{2(power0 + j)}. At a pole of V the term is
/// `pole_weight(j)` times the residue: w_j carries a factor that vanishes there.
pub(crate) struct TailSpec {
    pub power0: usize,
    pub family: Family,
    pub weight: Box<dyn FnMut(usize, &PrecisionContext) -> Complex>,
    pub pole_weight: Option<Box<dyn Fn(usize, &PrecisionContext) -> Complex>>,
}

pub(crate) struct RhsPlan {
    pub head: Vec<HeadTerm>,
    pub tail: Option<TailSpec>,
}

/// One RHS value at a grid point.
pub(crate) struct RhsValue {
    pub value: Complex,
    /// Estimated size of the omitted tail.
    pub remainder: Float,
    /// Accumulated evaluation errors of the coefficients.
    pub eval_err: Float,
    pub terms: usize,
}

struct Coef {
    c: Complex,
    err: f64,
}

/// Evaluates an [`RhsPlan`] at many θ, generating tail coefficients once.
pub(crate) struct RhsEvaluator {
    head: Vec<HeadTerm>,
    tail: Option<(TailSpec, FamilyStream)>,
    coefs: Vec<Coef>,
}

impl RhsEvaluator {
    pub fn new(plan: RhsPlan) -> Self {
        let tail = plan.tail.map(|t| {
            let stream = FamilyStream::new(t.family.clone());
            (t, stream)
        });
        RhsEvaluator { head: plan.head, tail, coefs: Vec::new() }
    }

    fn coef(&mut self, j: usize, ctx: &PrecisionContext) -> Result<&Coef> {
        while self.coefs.len() <= j {
            let (spec, stream) = self.tail.as_mut().unwrap();
            let idx = self.coefs.len();
            let w = (spec.weight)(idx, ctx);
            let coef = match stream.next(ctx)? {
                FamilyValue::Value { v, err, zero } => {
                    if zero {
                        Coef { c: ctx.zero(), err: 0.0 }
                    } else {
                        let e = err * ctx.real(w.abs_ref());
                        Coef { c: ctx.complex(&w * &v), err: e.to_f64() }
                    }
                }
                FamilyValue::Pole(res) => {
                    let pw = spec
                        .pole_weight
                        .as_ref()
                        .ok_or_else(|| Error::Domain("tail meets a pole without a regularized weight".into()))?;
                    Coef { c: ctx.complex(pw(idx, ctx) * &res), err: 0.0 }
                }
            };
            self.coefs.push(coef);
        }
        Ok(&self.coefs[j])
    }

    /// RHS at θ, summing the tail until its estimated remainder is at most `target`.
    pub fn eval(&mut self, theta: &Float, target: &Float, ctx: &PrecisionContext) -> Result<RhsValue> {
        let theta2 = ctx.real(theta.square_ref());
        let pow = |k: usize| ctx.real(rug::ops::Pow::pow(&theta2, k as u32));
        let mut value = ctx.zero();
        let mut eval_err = ctx.real(0);
        for h in &self.head {
            let p = pow(h.power);
            value += ctx.complex(&h.coef * &p);
            eval_err += ctx.real(&h.err * &p);
        }
        let mut out = RhsValue { value, remainder: ctx.real(0), eval_err, terms: self.head.len() };
        let Some((spec, _)) = &self.tail else {
            return Ok(out);
        };
        let power0 = spec.power0;
        let mut tpow = pow(power0);
        let mut prev: Option<(Float, usize)> = None;
        let mut zero_run = 0usize;
        for j in 0..MAX_TAIL_TERMS {
            if j > 0 {
                tpow *= &theta2;
            }
            let coef = self.coef(j, ctx)?;
            let t = ctx.complex(&coef.c * &tpow);
            let mag = ctx.real(t.abs_ref());
            let err = ctx.real(coef.err) * &tpow;
            if mag.is_zero() {
                zero_run += 1;
                if zero_run >= ZERO_RUN {
                    // terminating tail: nothing was omitted
                    out.remainder = ctx.real(0);
                    return Ok(out);
                }
                continue;
            }
            zero_run = 0;
            if let Some((p, k)) = &prev {
                let rem = tail_estimate(p, &mag, *k);
                if rem <= *target {
                    out.remainder = rem;
                    return Ok(out);
                }
                out.remainder = rem;
            }
            out.value += t;
            out.eval_err += err;
            out.terms += 1;
            prev = Some((mag, power0 + j));
        }
        Ok(out)
    }
}
