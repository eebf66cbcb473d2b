use std::collections::HashMap;

use rug::{Complex, Float, Rational};
use serde::{Serialize, Serializer};

use super::lhs::PreparedSeries;
use super::params::IdentityParams;
use super::registry::{build, lookup_identity, Built, IdentityInfo, Lhs, REGISTRY};
use super::rhs::RhsEvaluator;
use crate::error::{Error, Result};
use crate::mp::{const_pi, format_sci, PrecisionContext};

/// Pass when the largest residual is at most this multiple of the tail bound.
pub const TAIL_BOUND_MULTIPLIER: u32 = 10;
pub const DEFAULT_GRID: usize = 21;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub identity_id: String,
    pub params: IdentityParams,
    #[serde(rename = "N")]
    pub n_terms: usize,
    /// Grid points u = x/c.
    #[serde(serialize_with = "ser_rationals")]
    pub grid: Vec<Rational>,
    #[serde(serialize_with = "ser_floats")]
    pub residuals: Vec<Float>,
    #[serde(serialize_with = "ser_float")]
    pub tail_bound: Float,
    pub multiplier: u32,
    pub verdict: Verdict,
}

impl IdentityReport {
    pub fn max_residual(&self) -> Float {
        self.residuals.iter().fold(Float::with_val(self.tail_bound.prec(), 0), |m, r| if *r > m { r.clone() } else { m })
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

fn ser_float<S: Serializer>(v: &Float, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_sci(v, 6))
}

fn ser_floats<S: Serializer>(v: &[Float], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|f| format_sci(f, 6)))
}

fn ser_rationals<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|r| r.to_string()))
}

/// Canonical id, aliases and a one-line statement of every registered identity.
pub fn list_identities() -> &'static [IdentityInfo] {
    REGISTRY
}

/// `size` equispaced points on [−u_max, u_max], endpoints included.
pub fn symmetric_grid(u_max: &Rational, size: usize) -> Vec<Rational> {
    match size {
        0 => vec![],
        1 => vec![Rational::new()],
        _ => (0..size)
            .map(|i| {
                let t = Rational::from((2 * i as i64 - (size as i64 - 1), size as i64 - 1));
                t * u_max
            })
            .collect(),
    }
}

/// Evaluates both sides of an identity on a grid and compares them.
///
/// Each point's bound is the LHS truncation bound plus the RHS remainder and
/// coefficient errors plus a precision floor; the RHS tail is summed until
/// its remainder is below the LHS bound at that point.
pub fn verify_identity(
    id: &str,
    params: &IdentityParams,
    grid_size: usize,
    n_terms: usize,
    ctx: &PrecisionContext,
) -> Result<IdentityReport> {
    let info = lookup_identity(id).ok_or_else(|| Error::UnknownIdentity(id.to_string()))?;
    if grid_size == 0 || n_terms == 0 {
        return Err(Error::InvalidParams { id: info.id.into(), reason: "grid size and N must be positive".into() });
    }
    let Built { lhs, rhs, u_max, point } = build(info, params, ctx)?;
    let grid = match point {
        Some(p) => vec![p],
        None => symmetric_grid(&u_max, grid_size),
    };
    let prepared: Option<Vec<PreparedSeries>> = match &lhs {
        Lhs::Series(list) => Some(list.iter().map(|s| s.prepare(n_terms, ctx)).collect::<Result<_>>()?),
        Lhs::Closed { .. } => None,
    };
    let pi = const_pi(ctx);
    let floor_scale = ctx.report_epsilon() * 1e5f64;
    let mut rhs_eval = RhsEvaluator::new(rhs);
    let mut memo: HashMap<Rational, (Complex, Float)> = HashMap::new();
    let mut residuals = Vec::with_capacity(grid.len());
    let mut tail_bound = ctx.real(0);
    for u in &grid {
        let theta = ctx.real(&pi * ctx.real(u));
        let (lhs_value, lhs_bound) = match (&lhs, &prepared) {
            (Lhs::Closed { value, err }, _) => (value.clone(), err.clone()),
            (_, Some(list)) => {
                let mut v = ctx.zero();
                let mut b = ctx.real(0);
                for s in list {
                    let (sv, sb) = s.eval(&theta, ctx);
                    v += sv;
                    b += sb;
                }
                (v, b)
            }
            _ => unreachable!(),
        };
        let floor = ctx.real(&floor_scale * (ctx.real(lhs_value.abs_ref()) + 1u32));
        let target = if lhs_bound > floor { lhs_bound.clone() } else { floor.clone() };
        // both sides are even in u
        let key = Rational::from(u.abs_ref());
        let (rhs_value, rhs_err) = match memo.get(&key) {
            Some(hit) => hit.clone(),
            None => {
                let r = rhs_eval.eval(&theta, &target, ctx)?;
                let err = ctx.real(&r.remainder + &r.eval_err);
                memo.insert(key, (r.value.clone(), err.clone()));
                (r.value, err)
            }
        };
        let residual = ctx.real(ctx.complex(&lhs_value - &rhs_value).abs_ref());
        let bound = lhs_bound + rhs_err + floor;
        if bound > tail_bound || bound.is_nan() {
            tail_bound = bound;
        }
        residuals.push(residual);
    }
    let max_res = residuals.iter().fold(ctx.real(0), |m, r| if *r > m { r.clone() } else { m });
    let pass = tail_bound.is_finite() && max_res <= ctx.real(&tail_bound * TAIL_BOUND_MULTIPLIER);
    Ok(IdentityReport {
        identity_id: info.id.to_string(),
        params: params.clone(),
        n_terms,
        grid,
        residuals,
        tail_bound,
        multiplier: TAIL_BOUND_MULTIPLIER,
        verdict: if pass { Verdict::Pass } else { Verdict::Fail },
    })
}
