use std::str::FromStr;

use rug::{Complex, Float, Rational};

use super::evaluators::{beta_eval, dirichlet_l, eta_asymptotic, hurwitz_zeta, phi_minus1, riemann_zeta};
use super::exact::{
    beta_special_negative, eta_special_negative, hurwitz_special_negative, l_special_negative, phi_special_negative,
};
use crate::dirichlet::DirichletCharacter;
use crate::error::{Error, Result};
use crate::mp::{abs, PrecisionContext, SeriesResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Function {
    Eta,
    Zeta,
    Hurwitz,
    Beta,
    Phi,
    L,
}

impl FromStr for Function {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "eta" => Function::Eta,
            "zeta" => Function::Zeta,
            "hurwitz" => Function::Hurwitz,
            "beta" => Function::Beta,
            "phi" => Function::Phi,
            "l" => Function::L,
            _ => return Err(Error::Parse(format!("unknown function '{s}'"))),
        })
    }
}

/// Arguments for [`evaluate`]; `m` and `budget` default to [`auto_params`].
#[derive(Clone, Debug)]
pub struct EvalRequest {
    pub s: Complex,
    pub a: Option<Float>,
    pub chi: Option<DirichletCharacter>,
    pub m: Option<u64>,
    pub budget: Option<usize>,
}

impl EvalRequest {
    pub fn new(s: Complex) -> Self {
        EvalRequest { s, a: None, chi: None, m: None, budget: None }
    }

    pub fn with_a(mut self, a: Float) -> Self {
        self.a = Some(a);
        self
    }

    pub fn with_chi(mut self, chi: DirichletCharacter) -> Self {
        self.chi = Some(chi);
        self
    }

    pub fn with_head(mut self, m: u64, budget: usize) -> Self {
        self.m = Some(m);
        self.budget = Some(budget);
        self
    }
}

/// Head length m and tail budget K that put the smallest asymptotic term
/// below the working precision.
///
/// Tail terms behave like (2k)!/(cM)^{2k} with c = 2π for ζ(s,a) and
/// L(s,χ) and c = π for the alternating functions, so the minimum is about
/// e^{−cM}; M must also exceed a multiple of |s| before terms start to fall.
pub fn auto_params(f: Function, s: &Complex, ctx: &PrecisionContext) -> (u64, usize) {
    let wd = ctx.working_digits() as f64 * std::f64::consts::LN_10;
    let size = abs(s).to_f64();
    let pi = std::f64::consts::PI;
    match f {
        Function::Zeta | Function::Hurwitz | Function::L => {
            let m = (wd / (2.0 * pi) + 1.5 * size / (2.0 * pi) + 4.0).ceil();
            (m as u64, (pi * m + 0.5 * size).ceil() as usize + 20)
        }
        Function::Eta | Function::Phi | Function::Beta => {
            let m = (wd / pi + 1.5 * size / pi + 4.0).ceil();
            (m as u64, (pi * m / 2.0 + 0.5 * size).ceil() as usize + 20)
        }
    }
}

pub fn evaluate(f: Function, req: &EvalRequest, ctx: &PrecisionContext) -> Result<SeriesResult> {
    let (m0, k0) = auto_params(f, &req.s, ctx);
    let m = req.m.unwrap_or(m0);
    let budget = req.budget.unwrap_or(if f == Function::L { 2 * k0 } else { k0 });
    // For Re(s) < 1 the head terms grow like M^{1−σ} and cancel; carry
    // enough extra digits that the cancellation stays below working precision.
    let top = match f {
        Function::L => req.chi.as_ref().map_or(1, |c| c.modulus()) * m,
        Function::Beta => 2 * m,
        _ => m + req.a.as_ref().map_or(1, |a| a.to_f64().ceil().max(1.0) as u64),
    };
    let grow = (1.0 - req.s.real().to_f64()).max(0.0) * (top as f64 + 1.0).log10();
    let extra = (grow + abs(&req.s).to_f64().max(1.0).log10()).ceil() as u32 + 2;
    let work = PrecisionContext::with_guard(ctx.digits(), ctx.guard_digits() + extra)?;
    if let Some(v) = special_value(f, req, &work)? {
        return Ok(SeriesResult::exact(ctx.complex(&v), 0));
    }
    let r = evaluate_with(f, req, m, budget, &work)?;
    Ok(SeriesResult {
        value: ctx.complex(&r.value),
        error_estimate: ctx.real(&r.error_estimate),
        terms_used: r.terms_used,
        termination: r.termination,
    })
}

/// Rational closed forms at s = 0, −1, −2, …; the terminating series would
/// otherwise leave cancellation noise where the value is exactly zero.
fn special_value(f: Function, req: &EvalRequest, ctx: &PrecisionContext) -> Result<Option<Complex>> {
    let s = &req.s;
    if !s.imag().is_zero() || !s.real().is_integer() || *s.real() > 0 {
        return Ok(None);
    }
    let Some(n) = Float::with_val(53, -s.real()).to_integer().and_then(|i| i.to_usize()) else {
        return Ok(None);
    };
    // a as an exact dyadic rational
    let shift = || {
        req.a
            .as_ref()
            .and_then(|a| a.to_rational())
            .ok_or_else(|| Error::Domain("this function needs a finite shift a".into()))
    };
    let v = match f {
        Function::Eta => ctx.complex(&eta_special_negative(n)),
        Function::Zeta => ctx.complex(&hurwitz_special_negative(n, &Rational::from(1))),
        Function::Beta => ctx.complex(&beta_special_negative(n)),
        Function::Hurwitz => {
            let a = shift()?;
            if a <= 0 {
                return Ok(None);
            }
            ctx.complex(&hurwitz_special_negative(n, &a))
        }
        Function::Phi => ctx.complex(&phi_special_negative(n, &shift()?)),
        Function::L => match &req.chi {
            Some(chi) => l_special_negative(n, chi, ctx),
            None => return Ok(None),
        },
    };
    Ok(Some(v))
}

fn evaluate_with(f: Function, req: &EvalRequest, m: u64, budget: usize, ctx: &PrecisionContext) -> Result<SeriesResult> {
    let need_a = || req.a.clone().ok_or_else(|| Error::Domain("this function needs a shift a".into()));
    match f {
        Function::Eta => eta_asymptotic(&req.s, m, budget, ctx),
        Function::Zeta => riemann_zeta(&req.s, m, budget, ctx),
        Function::Hurwitz => hurwitz_zeta(&req.s, &need_a()?, m, budget, ctx),
        Function::Beta => beta_eval(&req.s, m, budget, ctx),
        Function::Phi => phi_minus1(&req.s, &need_a()?, m, budget, ctx),
        Function::L => {
            let chi = req.chi.as_ref().ok_or_else(|| Error::Domain("L needs a character".into()))?;
            dirichlet_l(&req.s, chi, m, budget, ctx)
        }
    }
}
