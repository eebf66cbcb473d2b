use rug::{Complex, Float, Integer, Rational};
use serde::Serialize;

use super::lhs::{LhsSeries, Signs, Trig, Weight};
use super::params::IdentityParams;
use super::rhs::{Family, HeadTerm, RhsPlan, TailSpec};
use crate::dirichlet::DirichletCharacter;
use crate::engine::{evaluate, EvalRequest, Function};
use crate::error::{Error, Result};
use crate::mp::{const_pi, PrecisionContext};

/// Which parameters an identity takes.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum ParamKind {
    R { min: u32 },
    M { min: u32 },
    /// s with Re(s) > min_re, or any s when `None`.
    S { min_re: Option<f64> },
    RA { min: u32 },
    SA { min_re: f64 },
    RChi { min: u32 },
    SChi { min_re: f64 },
}

/// The x-range of an identity, as u = x/c.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum URange {
    /// |u| ≤ num/den.
    Symmetric { num: u32, den: u32 },
    /// |u| ≤ 2/q.
    TwoOverQ,
    /// Evaluated only at u = num/den.
    Point { num: u32, den: u32 },
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct IdentityInfo {
    pub id: &'static str,
    pub aliases: &'static [&'static str],
    pub summary: &'static str,
    pub params: ParamKind,
    pub range: URange,
}

const SYM1: URange = URange::Symmetric { num: 1, den: 1 };
const SYM2: URange = URange::Symmetric { num: 2, den: 1 };
const SYM_HALF: URange = URange::Symmetric { num: 1, den: 2 };

pub static REGISTRY: &[IdentityInfo] = &[
    IdentityInfo {
        id: "alt-zeta-odd-cosine",
        aliases: &["lemma2.7"],
        summary: "Σ(−1)^{n−1}n^{−2r−1}cos nθ = Σ_{k≤r} η(2r+1−2k) terms + E_{2k−1}(1) tail",
        params: ParamKind::R { min: 1 },
        range: SYM1,
    },
    IdentityInfo {
        id: "alt-zeta-even-cosine",
        aliases: &["lemma2.8"],
        summary: "Σ(−1)^{n−1}n^{−2r}cos nθ = finite sum of η(2r−2k)",
        params: ParamKind::R { min: 1 },
        range: SYM1,
    },
    IdentityInfo {
        id: "alt-zeta-int-cosine",
        aliases: &["theorem3.3"],
        summary: "Σ(−1)^{n−1}n^{−m}cos nθ = Σ_{k≤[m/2]} η(m−2k) terms + E_{2k−m}(1) tail",
        params: ParamKind::M { min: 2 },
        range: SYM1,
    },
    IdentityInfo {
        id: "alt-zeta-cosine",
        aliases: &["theorem3.6"],
        summary: "Σ(−1)^{n−1}n^{−s}cos nθ = Σ(−1)^kθ^{2k}/(2k)!·η(s−2k), Re s > 1",
        params: ParamKind::S { min_re: Some(1.0) },
        range: SYM1,
    },
    IdentityInfo {
        id: "lerch-alt-cosine",
        aliases: &["theorem3.7"],
        summary: "Σ(−1)^n(n+a)^{−s}cos((n+a)θ) = Σ(−1)^kθ^{2k}/(2k)!·Φ(−1,s−2k,a), Re s > 1",
        params: ParamKind::SA { min_re: 1.0 },
        range: SYM1,
    },
    IdentityInfo {
        id: "eta-shift-third",
        aliases: &["theorem3.8a"],
        summary: "(3/2)(1−3^{−s})η(s) = Σ_{k≥1}(−1)^{k−1}(2π/3)^{2k}/(2k)!·η(s−2k)",
        params: ParamKind::S { min_re: None },
        range: URange::Point { num: 2, den: 3 },
    },
    IdentityInfo {
        id: "eta-shift-quarter",
        aliases: &["theorem3.8b"],
        summary: "(1−2^{−s})η(s) = Σ_{k≥1}(−1)^{k−1}(π/2)^{2k}/(2k)!·η(s−2k)",
        params: ParamKind::S { min_re: None },
        range: URange::Point { num: 1, den: 2 },
    },
    IdentityInfo {
        id: "eta-shift-sixth",
        aliases: &["theorem3.8c"],
        summary: "½(1−2^{2−s}+3^{1−s})ζ(s) = Σ_{k≥1}(−1)^{k−1}(π/3)^{2k}/(2k)!·η(s−2k), s ≠ 1",
        params: ParamKind::S { min_re: None },
        range: URange::Point { num: 1, den: 3 },
    },
    IdentityInfo {
        id: "beta-cosine",
        aliases: &["theorem3.9"],
        summary: "Σ(−1)^n(2n+1)^{−s}cos((2n+1)θ) = Σ(−1)^kθ^{2k}/(2k)!·β(s−2k), Re s > 0",
        params: ParamKind::S { min_re: Some(0.0) },
        range: SYM_HALF,
    },
    IdentityInfo {
        id: "lerch-alt-odd-cosine",
        aliases: &["theorem3.12a"],
        summary: "Σ(−1)^n(n+a)^{−2r−1}cos((n+a)θ) = Φ(−1,2r+1−2k,a) terms + E_{2k−1}(a) tail",
        params: ParamKind::RA { min: 1 },
        range: SYM1,
    },
    IdentityInfo {
        id: "lerch-alt-even-cosine",
        aliases: &["theorem3.12b"],
        summary: "Σ(−1)^n(n+a)^{−2r}cos((n+a)θ) = Φ(−1,2r−2k,a) terms + E_{2k}(a) tail",
        params: ParamKind::RA { min: 1 },
        range: SYM1,
    },
    IdentityInfo {
        id: "beta-odd-cosine",
        aliases: &["theorem3.13a"],
        summary: "Σ(−1)^n(2n+1)^{−2r−1}cos((2n+1)θ) = finite sum of β(2r+1−2k)",
        params: ParamKind::R { min: 1 },
        range: SYM_HALF,
    },
    IdentityInfo {
        id: "beta-even-cosine",
        aliases: &["theorem3.13b"],
        summary: "Σ(−1)^n(2n+1)^{−2r}cos((2n+1)θ) = β(2r−2k) terms + E_{2k} tail",
        params: ParamKind::R { min: 1 },
        range: SYM_HALF,
    },
    IdentityInfo {
        id: "hurwitz-cos-sin",
        aliases: &["theorem3.19"],
        summary: "sΣ(a+n)^{−s−1}cos + θΣ(a+n)^{−s}sin = Σ(−1)^k(s−2k)θ^{2k}/(2k)!·ζ(s+1−2k,a), Re s > 1",
        params: ParamKind::SA { min_re: 1.0 },
        range: SYM2,
    },
    IdentityInfo {
        id: "hurwitz-odd-cos-sin",
        aliases: &["theorem3.20a"],
        summary: "rΣ(a+n)^{−2r−1}cos + (θ/2)Σ(a+n)^{−2r}sin = ζ(2r+1−2k,a) terms + B_{2k}(a) tail",
        params: ParamKind::RA { min: 1 },
        range: SYM2,
    },
    IdentityInfo {
        id: "hurwitz-even-cos-sin",
        aliases: &["theorem3.20b"],
        summary: "(2r−1)Σ(a+n)^{−2r}cos + θΣ(a+n)^{−2r+1}sin = ζ(2r−2k,a) terms + B_{2k+1}(a) tail",
        params: ParamKind::RA { min: 2 },
        range: SYM2,
    },
    IdentityInfo {
        id: "hurwitz-cos-cos",
        aliases: &["theorem3.21"],
        summary: "s(s−1)Σ(a+n)^{−s−1}cos + θ²Σ(a+n)^{−s+1}cos = Σ(−1)^k(s−2k)(s+2k−1)θ^{2k}/(2k)!·ζ(s+1−2k,a), Re s > 2",
        params: ParamKind::SA { min_re: 2.0 },
        range: SYM2,
    },
    IdentityInfo {
        id: "hurwitz-odd-cos-cos",
        aliases: &["theorem3.22"],
        summary: "r(2r−1)Σ(a+n)^{−2r−1}cos + ½θ²Σ(a+n)^{−2r+1}cos = ζ(2r+1−2k,a) terms + B_{2k}(a) tail",
        params: ParamKind::RA { min: 2 },
        range: SYM2,
    },
    IdentityInfo {
        id: "zeta-odd-cos-sin",
        aliases: &["katsurada"],
        summary: "rΣn^{−2r−1}cos nθ + (θ/2)Σn^{−2r}sin nθ = Σ(−1)^k(r−k)θ^{2k}/(2k)!·ζ(2r+1−2k)",
        params: ParamKind::R { min: 1 },
        range: SYM2,
    },
    IdentityInfo {
        id: "dirichlet-cos-sin",
        aliases: &["theorem3.25"],
        summary: "sΣχ(n)n^{−s−1}cos + θΣχ(n)n^{−s}sin = Σ(−1)^k(s−2k)θ^{2k}/(2k)!·L(s+1−2k,χ), Re s > 1",
        params: ParamKind::SChi { min_re: 1.0 },
        range: URange::TwoOverQ,
    },
    IdentityInfo {
        id: "dirichlet-odd-cos-sin",
        aliases: &["theorem3.26a", "theorem3.26"],
        summary: "rΣχ(n)n^{−2r−1}cos + (θ/2)Σχ(n)n^{−2r}sin = L(2r+1−2k,χ) terms + B_{2k,χ} tail",
        params: ParamKind::RChi { min: 1 },
        range: URange::TwoOverQ,
    },
    IdentityInfo {
        id: "dirichlet-even-cos-sin",
        aliases: &["theorem3.26b"],
        summary: "(2r−1)Σχ(n)n^{−2r}cos + θΣχ(n)n^{−2r+1}sin = L(2r−2k,χ) terms + B_{2k+1,χ} tail",
        params: ParamKind::RChi { min: 2 },
        range: URange::TwoOverQ,
    },
    IdentityInfo {
        id: "dirichlet-cos-cos",
        aliases: &["theorem3.27"],
        summary: "s(s−1)Σχ(n)n^{−s−1}cos + θ²Σχ(n)n^{−s+1}cos = Σ(−1)^k(s−2k)(s+2k−1)θ^{2k}/(2k)!·L(s+1−2k,χ), Re s > 2",
        params: ParamKind::SChi { min_re: 2.0 },
        range: URange::TwoOverQ,
    },
    IdentityInfo {
        id: "dirichlet-odd-cos-cos",
        aliases: &["theorem3.28a", "theorem3.28"],
        summary: "r(2r−1)Σχ(n)n^{−2r−1}cos + ½θ²Σχ(n)n^{−2r+1}cos = L(2r+1−2k,χ) terms + B_{2k,χ} tail",
        params: ParamKind::RChi { min: 2 },
        range: URange::TwoOverQ,
    },
    IdentityInfo {
        id: "dirichlet-even-cos-cos",
        aliases: &["theorem3.28b"],
        summary: "r(2r+1)Σχ(n)n^{−2r−2}cos + ½θ²Σχ(n)n^{−2r}cos = L(2r+2−2k,χ) terms + B_{2k+1,χ} tail",
        params: ParamKind::RChi { min: 1 },
        range: URange::TwoOverQ,
    },
    IdentityInfo {
        id: "zeta-odd-cos-cos",
        aliases: &["theorem3.29"],
        summary: "r(2r−1)Σn^{−2r−1}cos nθ + ½θ²Σn^{−2r+1}cos nθ = ζ(2r+1−2k) terms + ζ(2k) tail",
        params: ParamKind::R { min: 1 },
        range: SYM2,
    },
];

/// Finds an identity by canonical id or alias, ignoring ASCII case.
pub fn lookup_identity(id: &str) -> Option<&'static IdentityInfo> {
    let id = id.trim();
    REGISTRY
        .iter()
        .find(|i| i.id.eq_ignore_ascii_case(id) || i.aliases.iter().any(|a| a.eq_ignore_ascii_case(id)))
}

/// Default parameter sets, each inside the identity's validity range.
pub fn default_params(info: &IdentityInfo, ctx: &PrecisionContext) -> Vec<IdentityParams> {
    let half = Rational::from((1, 2));
    let third = Rational::from((1, 3));
    let s = |v: f64| IdentityParams::with_s(ctx.complex(v));
    match info.params {
        ParamKind::R { min } => (min..min + 2).map(IdentityParams::with_r).collect(),
        ParamKind::M { min } => (min..min + 3).map(IdentityParams::with_m).collect(),
        ParamKind::S { min_re: None } => vec![s(2.0), s(3.0), s(2.5), s(-1.5)],
        ParamKind::S { min_re: Some(_) } if info.id == "beta-cosine" => vec![s(3.0), s(1.5)],
        ParamKind::S { .. } => vec![s(2.5), s(3.0), s(3.7)],
        ParamKind::RA { min } => vec![
            IdentityParams::with_r(min).a(half),
            IdentityParams::with_r(min).a(third),
            IdentityParams::with_r(min + 1).a(Rational::from(1)),
        ],
        ParamKind::SA { .. } => {
            let mut out: Vec<IdentityParams> = [2.5, 3.0, 3.7].iter().map(|&v| s(v).a(half.clone())).collect();
            out.push(IdentityParams::with_s(ctx.complex((3.0, 0.5))).a(third));
            out
        }
        ParamKind::RChi { min } => vec![
            IdentityParams::with_r(min).chi(4, 1),
            IdentityParams::with_r(min).chi(5, 1),
            IdentityParams::with_r(min + 1).chi(3, 1),
        ],
        ParamKind::SChi { .. } => vec![
            s(2.5).chi(4, 1),
            s(3.0).chi(5, 2),
            IdentityParams::with_s(ctx.complex((3.0, 0.5))).chi(3, 0),
        ],
    }
}

/// LHS of an identity: trigonometric series, or a closed form at a fixed point.
pub(crate) enum Lhs {
    Series(Vec<LhsSeries>),
    Closed { value: Complex, err: Float },
}

pub(crate) struct Built {
    pub lhs: Lhs,
    pub rhs: RhsPlan,
    /// Largest |u| allowed by the identity for these parameters.
    pub u_max: Rational,
    /// Set for identities that hold at one point only.
    pub point: Option<Rational>,
}

type WeightFn = Box<dyn FnMut(usize, &PrecisionContext) -> Complex>;
type PoleFn = Box<dyn Fn(usize, &PrecisionContext) -> Complex>;

fn inv_factorial(n: usize, ctx: &PrecisionContext) -> Float {
    ctx.real(Integer::from(Integer::factorial(n as u32))).recip()
}

fn sign(k: usize) -> i32 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// j ↦ ± scale·poly(j)/(fact_start + 2j)!, the sign flipping with j when
/// `alternating`. Calls must come in order j = 0, 1, 2, ….
fn fact_weight(
    first_sign: i32,
    alternating: bool,
    fact_start: usize,
    scale: Complex,
    poly: impl Fn(usize, &PrecisionContext) -> Complex + 'static,
) -> WeightFn {
    let mut state: Option<(usize, Float)> = None;
    Box::new(move |j, ctx| {
        let n = fact_start + 2 * j;
        let inv = match state.take() {
            Some((m, v)) if m + 2 == n => v / (m as u32 + 1) / (m as u32 + 2),
            _ => inv_factorial(n, ctx),
        };
        let mut w = ctx.complex(&scale * &inv) * poly(j, ctx);
        state = Some((n, inv));
        let flip = alternating && j % 2 == 1;
        if (first_sign < 0) != flip {
            w = -w;
        }
        w
    })
}

fn unit(_: usize, ctx: &PrecisionContext) -> Complex {
    ctx.complex(1)
}

fn engine_value(
    f: Function,
    s: &Complex,
    a: Option<&Float>,
    chi: Option<&DirichletCharacter>,
    ctx: &PrecisionContext,
) -> Result<(Complex, Float)> {
    let mut req = EvalRequest::new(s.clone());
    if let Some(a) = a {
        req = req.with_a(a.clone());
    }
    if let Some(chi) = chi {
        req = req.with_chi(chi.clone());
    }
    let r = evaluate(f, &req, ctx)?;
    Ok((r.value, r.error_estimate))
}

struct Target<'a> {
    f: Function,
    a: Option<&'a Float>,
    chi: Option<&'a DirichletCharacter>,
}

/// Σ_k w(k)·F(σ(k))·θ^{2k} for k in `ks`.
fn head(
    ks: impl Iterator<Item = usize>,
    t: &Target,
    sigma: impl Fn(usize) -> i64,
    w: impl Fn(usize, &PrecisionContext) -> Complex,
    ctx: &PrecisionContext,
) -> Result<Vec<HeadTerm>> {
    let mut out = Vec::new();
    for k in ks {
        let wk = ctx.complex(w(k, ctx) * sign(k)) * inv_factorial(2 * k, ctx);
        let (v, err) = engine_value(t.f, &ctx.complex(sigma(k)), t.a, t.chi, ctx)?;
        out.push(HeadTerm {
            power: k,
            err: err * ctx.real(wk.abs_ref()),
            coef: ctx.complex(&wk * &v),
        });
    }
    Ok(out)
}

fn series(weight: Weight, p: Complex, trig: Trig, signs: Signs, alpha: u32, a: Float, n_start: u64) -> LhsSeries {
    LhsSeries { weight, p, trig, signs, alpha, a, n_start }
}

fn function_tail(
    power0: usize,
    f: Function,
    s0: Complex,
    a: Option<Float>,
    chi: Option<DirichletCharacter>,
    weight: WeightFn,
    pole_weight: Option<PoleFn>,
) -> TailSpec {
    TailSpec { power0, family: Family::Function { f, s0, a, chi }, weight, pole_weight }
}

fn invalid(id: &str, reason: impl Into<String>) -> Error {
    Error::InvalidParams { id: id.to_string(), reason: reason.into() }
}

/// Validates parameters and assembles both sides.
pub(crate) fn build(info: &IdentityInfo, params: &IdentityParams, ctx: &PrecisionContext) -> Result<Built> {
    let tag = |e: Error| match e {
        Error::InvalidParams { reason, .. } => invalid(info.id, reason),
        e => e,
    };
    let c = |v: i64| ctx.complex(v);
    let zero = ctx.real(0);
    let u_max = |num: u32, den: u32| Rational::from((num, den));
    let mut range = match info.range {
        URange::Symmetric { num, den } | URange::Point { num, den } => u_max(num, den),
        URange::TwoOverQ => Rational::from((2, params.q.unwrap_or(1).max(1))),
    };
    let point = match info.range {
        URange::Point { num, den } => Some(u_max(num, den)),
        _ => None,
    };

    let (lhs, rhs) = match info.id {
        "alt-zeta-odd-cosine" | "alt-zeta-even-cosine" | "alt-zeta-int-cosine" => {
            let m = match info.id {
                "alt-zeta-odd-cosine" => 2 * params.need_r(1).map_err(tag)? + 1,
                "alt-zeta-even-cosine" => 2 * params.need_r(1).map_err(tag)?,
                _ => params.need_m(2).map_err(tag)?,
            } as usize;
            let h = m / 2;
            let lhs = vec![series(Weight::Constant(c(1)), c(m as i64), Trig::Cos, Signs::Alternating, 1, zero, 1)];
            let t = Target { f: Function::Eta, a: None, chi: None };
            let head = head(0..=h, &t, |k| (m - 2 * k) as i64, unit, ctx)?;
            // (−1)^k E_{2k−m}(1)/(2(2k)!), k = h+1+j; E_{even ≥ 2}(1) = 0 ends the tail for even m
            let tail = (m % 2 == 1).then(|| TailSpec {
                power0: h + 1,
                family: Family::EulerOne { n0: 2 * (h + 1) - m },
                weight: fact_weight(sign(h + 1), true, 2 * (h + 1), ctx.complex(0.5), unit),
                pole_weight: None,
            });
            (Lhs::Series(lhs), RhsPlan { head, tail })
        }
        "alt-zeta-cosine" | "lerch-alt-cosine" | "beta-cosine" => {
            let s = params.need_s(Some(if info.id == "beta-cosine" { 0.0 } else { 1.0 }), ctx).map_err(tag)?;
            let (f, a, alpha, af) = match info.id {
                "alt-zeta-cosine" => (Function::Eta, None, 1, zero),
                "beta-cosine" => (Function::Beta, None, 2, ctx.real(0.5)),
                _ => {
                    let a = ctx.real(&params.need_a().map_err(tag)?);
                    (Function::Phi, Some(a.clone()), 1, a)
                }
            };
            let n_start = if info.id == "alt-zeta-cosine" { 1 } else { 0 };
            let lhs = vec![series(Weight::Constant(c(1)), s.clone(), Trig::Cos, Signs::Alternating, alpha, af, n_start)];
            let tail = function_tail(0, f, s, a, None, fact_weight(1, true, 0, c(1), unit), None);
            (Lhs::Series(lhs), RhsPlan { head: vec![], tail: Some(tail) })
        }
        "eta-shift-third" | "eta-shift-quarter" | "eta-shift-sixth" => {
            let s = params.need_s(None, ctx).map_err(tag)?;
            let pow = |b: u32, e: &Complex| ctx.complex(rug::ops::Pow::pow(ctx.complex(b), e));
            let (value, err) = match info.id {
                "eta-shift-third" => {
                    let (eta, err) = engine_value(Function::Eta, &s, None, None, ctx)?;
                    let f = ctx.complex(1 - pow(3, &ctx.complex(-&s))) * 1.5f64;
                    (ctx.complex(&f * &eta), err * ctx.real(f.abs_ref()))
                }
                "eta-shift-quarter" => {
                    let (eta, err) = engine_value(Function::Eta, &s, None, None, ctx)?;
                    let f = ctx.complex(1 - pow(2, &ctx.complex(-&s)));
                    (ctx.complex(&f * &eta), err * ctx.real(f.abs_ref()))
                }
                _ => {
                    if s == 1 {
                        return Err(invalid(info.id, "s = 1 is a removable singularity of the closed form"));
                    }
                    let (zeta, err) = engine_value(Function::Zeta, &s, None, None, ctx)?;
                    let f = ctx.complex(1 - pow(2, &ctx.complex(2 - &s)) + pow(3, &ctx.complex(1 - &s))) / 2u32;
                    (ctx.complex(&f * &zeta), err * ctx.real(f.abs_ref()))
                }
            };
            let s2 = ctx.complex(&s - 2u32);
            let tail = function_tail(1, Function::Eta, s2, None, None, fact_weight(1, true, 2, c(1), unit), None);
            (Lhs::Closed { value, err }, RhsPlan { head: vec![], tail: Some(tail) })
        }
        "lerch-alt-odd-cosine" | "lerch-alt-even-cosine" => {
            let r = params.need_r(1).map_err(tag)? as usize;
            let ar = params.need_a().map_err(tag)?;
            let a = ctx.real(&ar);
            let odd = info.id == "lerch-alt-odd-cosine";
            let m = if odd { 2 * r + 1 } else { 2 * r };
            let lhs = vec![series(Weight::Constant(c(1)), c(m as i64), Trig::Cos, Signs::Alternating, 1, a.clone(), 0)];
            let t = Target { f: Function::Phi, a: Some(&a), chi: None };
            let head = head(0..=r, &t, |k| (m - 2 * k) as i64, unit, ctx)?;
            // (−1)^{r+k} E_{2k−1}(a) or E_{2k}(a) over 2(2r+2k)!, k = j+1
            let tail = TailSpec {
                power0: r + 1,
                family: Family::EulerPoly { n0: if odd { 1 } else { 2 }, a: ar },
                weight: fact_weight(sign(r + 1), true, 2 * r + 2, ctx.complex(0.5), unit),
                pole_weight: None,
            };
            (Lhs::Series(lhs), RhsPlan { head, tail: Some(tail) })
        }
        "beta-odd-cosine" | "beta-even-cosine" => {
            let r = params.need_r(1).map_err(tag)? as usize;
            let odd = info.id == "beta-odd-cosine";
            let m = if odd { 2 * r + 1 } else { 2 * r };
            let lhs = vec![series(Weight::Constant(c(1)), c(m as i64), Trig::Cos, Signs::Alternating, 2, ctx.real(0.5), 0)];
            let t = Target { f: Function::Beta, a: None, chi: None };
            let head = head(0..=r, &t, |k| (m - 2 * k) as i64, unit, ctx)?;
            let tail = (!odd).then(|| TailSpec {
                power0: r + 1,
                family: Family::EulerNumber { n0: 2 },
                weight: fact_weight(sign(r + 1), true, 2 * r + 2, ctx.complex(0.5), unit),
                pole_weight: None,
            });
            (Lhs::Series(lhs), RhsPlan { head, tail })
        }
        "hurwitz-cos-sin" | "dirichlet-cos-sin" | "hurwitz-cos-cos" | "dirichlet-cos-cos" => {
            let cos_cos = info.id.ends_with("cos-cos");
            let s = params.need_s(Some(if cos_cos { 2.0 } else { 1.0 }), ctx).map_err(tag)?;
            let (f, a, chi, signs, af, n_start) = if info.id.starts_with("hurwitz") {
                let a = ctx.real(&params.need_a().map_err(tag)?);
                (Function::Hurwitz, Some(a.clone()), None, Signs::Plain, a, 0)
            } else {
                let chi = params.need_chi().map_err(tag)?;
                (Function::L, None, Some(chi.clone()), Signs::Character(chi), zero.clone(), 1)
            };
            let s1 = ctx.complex(&s + 1u32);
            let lhs = if cos_cos {
                let k = ctx.complex(&s * ctx.complex(&s - 1u32));
                vec![
                    series(Weight::Constant(k), s1.clone(), Trig::Cos, signs.clone(), 1, af.clone(), n_start),
                    series(Weight::ThetaSquared(c(1)), ctx.complex(&s - 1u32), Trig::Cos, signs, 1, af, n_start),
                ]
            } else {
                vec![
                    series(Weight::Constant(s.clone()), s1.clone(), Trig::Cos, signs.clone(), 1, af.clone(), n_start),
                    series(Weight::Theta(c(1)), s.clone(), Trig::Sin, signs, 1, af, n_start),
                ]
            };
            let sw = s.clone();
            let weight = fact_weight(1, true, 0, c(1), move |j, ctx| {
                let lin = ctx.complex(&sw - 2 * j as u64);
                if cos_cos {
                    lin * ctx.complex(&sw + (2.0 * j as f64 - 1.0))
                } else {
                    lin
                }
            });
            // s − 2k = σ_k − 1 vanishes exactly where ζ(σ_k) has its pole
            let sp = s.clone();
            let pole: PoleFn = Box::new(move |j, ctx| {
                let mut w = ctx.complex(inv_factorial(2 * j, ctx) * sign(j));
                if cos_cos {
                    w *= ctx.complex(&sp + (2.0 * j as f64 - 1.0));
                }
                w
            });
            let tail = function_tail(0, f, s1, a, chi, weight, Some(pole));
            (Lhs::Series(lhs), RhsPlan { head: vec![], tail: Some(tail) })
        }
        "zeta-odd-cos-sin" => {
            let r = params.need_r(1).map_err(tag)?;
            let lhs = vec![
                series(Weight::Constant(c(r as i64)), c(2 * r as i64 + 1), Trig::Cos, Signs::Plain, 1, zero.clone(), 1),
                series(Weight::Theta(ctx.complex(0.5)), c(2 * r as i64), Trig::Sin, Signs::Plain, 1, zero, 1),
            ];
            let rr = r as i64;
            let weight = fact_weight(1, true, 0, c(1), move |j, ctx| ctx.complex(rr - j as i64));
            let pole: PoleFn = Box::new(|j, ctx| ctx.complex(inv_factorial(2 * j, ctx) * sign(j)) / 2u32);
            let tail = function_tail(0, Function::Zeta, c(2 * rr + 1), None, None, weight, Some(pole));
            (Lhs::Series(lhs), RhsPlan { head: vec![], tail: Some(tail) })
        }
        "hurwitz-odd-cos-sin" | "hurwitz-even-cos-sin" | "hurwitz-odd-cos-cos" | "dirichlet-odd-cos-sin"
        | "dirichlet-even-cos-sin" | "dirichlet-odd-cos-cos" => {
            let odd = info.id.contains("odd");
            let cos_cos = info.id.ends_with("cos-cos");
            let min_r = if odd && !cos_cos { 1 } else { 2 };
            let r = params.need_r(min_r).map_err(tag)? as usize;
            let hurwitz = info.id.starts_with("hurwitz");
            let (ar, chi) = if hurwitz {
                (Some(params.need_a().map_err(tag)?), None)
            } else {
                (None, Some(params.need_chi().map_err(tag)?))
            };
            let a = ar.as_ref().map(|a| ctx.real(a));
            let (signs, af, n_start) = match &chi {
                Some(chi) => (Signs::Character(chi.clone()), zero.clone(), 1),
                None => (Signs::Plain, a.clone().unwrap(), 0),
            };
            let ri = r as i64;
            let ser = |w: Weight, p: i64, trig| series(w, c(p), trig, signs.clone(), 1, af.clone(), n_start);
            let lhs = match (odd, cos_cos) {
                (true, false) => vec![
                    ser(Weight::Constant(c(ri)), 2 * ri + 1, Trig::Cos),
                    ser(Weight::Theta(ctx.complex(0.5)), 2 * ri, Trig::Sin),
                ],
                (false, false) => vec![
                    ser(Weight::Constant(c(2 * ri - 1)), 2 * ri, Trig::Cos),
                    ser(Weight::Theta(c(1)), 2 * ri - 1, Trig::Sin),
                ],
                _ => vec![
                    ser(Weight::Constant(c(ri * (2 * ri - 1))), 2 * ri + 1, Trig::Cos),
                    ser(Weight::ThetaSquared(ctx.complex(0.5)), 2 * ri - 1, Trig::Cos),
                ],
            };
            let f = if hurwitz { Function::Hurwitz } else { Function::L };
            let t = Target { f, a: a.as_ref(), chi: chi.as_ref() };
            let head = match (odd, cos_cos) {
                (true, false) => head(0..r, &t, |k| (2 * r + 1 - 2 * k) as i64, |k, ctx| ctx.complex((r - k) as u64), ctx)?,
                (false, false) => head(0..r, &t, |k| (2 * r - 2 * k) as i64, |k, ctx| ctx.complex((2 * r - 1 - 2 * k) as u64), ctx)?,
                _ => head(
                    0..r,
                    &t,
                    |k| (2 * r + 1 - 2 * k) as i64,
                    |k, ctx| ctx.complex(((r - k) * (2 * r + 2 * k - 1)) as u64),
                    ctx,
                )?,
            };
            let n0 = if odd { 0 } else { 1 };
            let family = match (ar, chi) {
                (Some(a), _) => Family::BernoulliPoly { n0, a },
                (None, Some(chi)) => Family::GenBernoulli { n0, chi },
                _ => unreachable!(),
            };
            // (−1)^{r+k}·B/(2(2r+2k)!), with (4r+2k−1) for cos-cos and no ½ for the even case
            let weight = match (odd, cos_cos) {
                (true, false) => fact_weight(sign(r), true, 2 * r, ctx.complex(0.5), unit),
                (false, false) => fact_weight(sign(r), true, 2 * r, c(1), unit),
                _ => fact_weight(sign(r), true, 2 * r, ctx.complex(0.5), move |j, ctx| {
                    ctx.complex((4 * r + 2 * j - 1) as u64)
                }),
            };
            let tail = TailSpec { power0: r, family, weight, pole_weight: None };
            (Lhs::Series(lhs), RhsPlan { head, tail: Some(tail) })
        }
        "dirichlet-even-cos-cos" => {
            let r = params.need_r(1).map_err(tag)? as usize;
            let chi = params.need_chi().map_err(tag)?;
            let ri = r as i64;
            let signs = Signs::Character(chi.clone());
            let lhs = vec![
                series(Weight::Constant(c(ri * (2 * ri + 1))), c(2 * ri + 2), Trig::Cos, signs.clone(), 1, zero.clone(), 1),
                series(Weight::ThetaSquared(ctx.complex(0.5)), c(2 * ri), Trig::Cos, signs, 1, zero, 1),
            ];
            let t = Target { f: Function::L, a: None, chi: Some(&chi) };
            let head = head(
                0..=r,
                &t,
                |k| (2 * r + 2 - 2 * k) as i64,
                |k, ctx| ctx.complex(((2 * r + 1 - 2 * k) * (r + k)) as u64),
                ctx,
            )?;
            let weight = fact_weight(sign(r + 1), true, 2 * r + 2, c(1), move |j, ctx| {
                ctx.complex((2 * r + j + 1) as u64)
            });
            let tail = TailSpec { power0: r + 1, family: Family::GenBernoulli { n0: 1, chi }, weight, pole_weight: None };
            (Lhs::Series(lhs), RhsPlan { head, tail: Some(tail) })
        }
        "zeta-odd-cos-cos" => {
            let r = params.need_r(1).map_err(tag)? as usize;
            if r == 1 {
                // the series identity is stated on −2 ≤ u < 2 only
                range = Rational::from((19, 10));
            }
            let ri = r as i64;
            let lhs = vec![
                series(Weight::Constant(c(ri * (2 * ri - 1))), c(2 * ri + 1), Trig::Cos, Signs::Plain, 1, zero.clone(), 1),
                series(Weight::ThetaSquared(ctx.complex(0.5)), c(2 * ri - 1), Trig::Cos, Signs::Plain, 1, zero, 1),
            ];
            let t = Target { f: Function::Zeta, a: None, chi: None };
            let head = head(
                0..r,
                &t,
                |k| (2 * r + 1 - 2 * k) as i64,
                |k, ctx| ctx.complex(((r - k) * (2 * r + 2 * k - 1)) as u64),
                ctx,
            )?;
            // (−1)^{r−1}(2k)!(4r+2k−1)/((2r+2k)!(2π)^{2k})·ζ(2k)
            let two_pi_sq = ctx.real(const_pi(ctx) * 2u32).square();
            let mut scale = ctx.real(1);
            let mut weight_state = 0usize;
            let weight: WeightFn = Box::new(move |j, ctx| {
                if j == 0 {
                    scale = ctx.real(1);
                } else if j == weight_state + 1 {
                    scale /= &two_pi_sq;
                } else {
                    scale = ctx.real(rug::ops::Pow::pow(&two_pi_sq, j as u32)).recip();
                }
                weight_state = j;
                // (2j)!/(2r+2j)! = 1/((2j+1)…(2j+2r))
                let mut w = ctx.real(&scale * (4 * r + 2 * j - 1) as u64);
                for i in 1..=2 * r {
                    w /= (2 * j + i) as u64;
                }
                let w = ctx.complex(w);
                if r % 2 == 0 {
                    -w
                } else {
                    w
                }
            });
            let tail = TailSpec { power0: r, family: Family::ZetaEven { k0: 0 }, weight, pole_weight: None };
            (Lhs::Series(lhs), RhsPlan { head, tail: Some(tail) })
        }
        other => return Err(Error::UnknownIdentity(other.to_string())),
    };
    Ok(Built { lhs, rhs, u_max: range, point })
}
