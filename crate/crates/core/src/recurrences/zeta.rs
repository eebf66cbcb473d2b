use rug::{Complex, Float, Integer};
use serde::Serialize;

use super::tail::{sum_real_tail, EulerOneStream, TailOutcome};
use crate::engine::zeta_even_exact;
use crate::error::{Error, Result};
use crate::mp::{const_ln2, const_pi, PrecisionContext, SeriesResult, Termination};

/// Recursions for ζ(2r+1) whose tails carry E_{2k−1}(1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ZetaVariant {
    /// Angle π/3, weights 3^{2k}(2^{2k}−1).
    Dy,
    /// Angle π/2, weights 2^{2k}−1.
    Dyj,
    /// Angle π, factorials shifted by one.
    Dh,
}

impl ZetaVariant {
    pub const ALL: [ZetaVariant; 3] = [ZetaVariant::Dy, ZetaVariant::Dyj, ZetaVariant::Dh];
}

/// Denominator base m of the fast ζ(2r+1) series, whose tail terms carry
/// ζ(2k)/m^{2k}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FastBase {
    M3,
    M4,
    M6,
}

impl FastBase {
    pub const ALL: [FastBase; 3] = [FastBase::M3, FastBase::M4, FastBase::M6];

    pub fn m(&self) -> u32 {
        match self {
            FastBase::M3 => 3,
            FastBase::M4 => 4,
            FastBase::M6 => 6,
        }
    }

    pub fn from_m(m: u32) -> Result<Self> {
        match m {
            3 => Ok(FastBase::M3),
            4 => Ok(FastBase::M4),
            6 => Ok(FastBase::M6),
            _ => Err(Error::Domain(format!("fast ζ series exists for m ∈ {{3, 4, 6}}, got {m}"))),
        }
    }
}

fn ipow(b: u32, e: u32) -> Integer {
    Integer::from(Integer::u_pow_u(b, e))
}

fn int_factorial(n: u32) -> Integer {
    Integer::from(Integer::factorial(n))
}

fn finish(vals: &mut Vec<Float>, errs: &mut Vec<Float>, last: (usize, Termination), ctx: &PrecisionContext) -> SeriesResult {
    SeriesResult {
        value: Complex::with_val(ctx.prec(), vals.pop().unwrap()),
        error_estimate: errs.pop().unwrap(),
        terms_used: last.0,
        termination: last.1,
    }
}

fn zeta_odd_impl(
    r: u32,
    variant: ZetaVariant,
    budget: usize,
    tolerance: Option<&Float>,
    ctx: &PrecisionContext,
) -> Result<SeriesResult> {
    if r == 0 {
        return Err(Error::Domain("ζ(2r+1) recursion needs r ≥ 1".into()));
    }
    let pi = const_pi(ctx);
    let ln2 = const_ln2(ctx);
    // vals[k] = ζ(2k+1), k ≥ 1; index 0 unused
    let mut vals = vec![ctx.real(0)];
    let mut errs = vec![ctx.real(0)];
    let mut last = (0usize, Termination::Converged);
    for j in 1..=r {
        let (value, err, out) = match variant {
            ZetaVariant::Dy | ZetaVariant::Dyj => {
                let (y, x, prefactor) = if variant == ZetaVariant::Dy {
                    let den = ipow(3, 2 * j) * (ipow(2, 2 * j - 1) - 1u32) + ipow(2, 2 * j - 1);
                    (ctx.real(&pi * 2u32), ctx.real(&pi / 3u32), ctx.real(&den).recip())
                } else {
                    let den = (ipow(2, 2 * j) - 1u32) * (ipow(2, 2 * j + 1) - 1u32);
                    (ctx.real(&pi), ctx.real(&pi / 2u32), ctx.real(ipow(2, 2 * j + 1)) / ctx.real(&den))
                };
                let prefactor = if j % 2 == 1 { -prefactor } else { prefactor };
                let mut head = ctx.real(0);
                let mut head_err = ctx.real(0);
                for k in 1..j {
                    let weight = if variant == ZetaVariant::Dy {
                        ipow(3, 2 * k) * (ipow(2, 2 * k) - 1u32)
                    } else {
                        ipow(2, 2 * k) - 1u32
                    };
                    let c = ctx.real(y.pow_u(2 * (j - k))) / ctx.real(int_factorial(2 * (j - k))) * ctx.real(&weight);
                    let t = ctx.real(&c * &vals[k as usize]);
                    if k % 2 == 1 {
                        head += &t;
                    } else {
                        head -= &t;
                    }
                    head_err += c * &errs[k as usize];
                }
                let y2r = ctx.real(y.pow_u(2 * j));
                head -= ctx.real(&y2r * &ln2) / ctx.real(int_factorial(2 * j));
                let x2 = ctx.real(x.square_ref());
                let mut w = ctx.real(int_factorial(2 * j)).recip() / 2u32;
                let mut euler = EulerOneStream::new(ctx);
                let scaled_ref = ctx.real(&head / &y2r);
                let tol = tolerance.map(|t| ctx.real(t / ctx.real(&y2r * &prefactor).abs()));
                let out = sum_real_tail(budget, tol.as_ref(), &scaled_ref, ctx, |k| {
                    let n = 2 * j as u64 + 2 * k as u64;
                    w *= &x2;
                    w /= (n - 1) * n;
                    let e = euler.next_value()?;
                    let t = ctx.real(&e * &w);
                    Ok(if k % 2 == 0 { -t } else { t })
                })?;
                let bracket = head + ctx.real(&y2r * &out.sum);
                let value = ctx.real(&bracket * &prefactor);
                let abs_p = ctx.real(prefactor.abs_ref());
                let err = (head_err + ctx.real(&y2r * &out.error)) * abs_p;
                (value, err, out)
            }
            ZetaVariant::Dh => {
                let mut head = ctx.real(0);
                let mut head_err = ctx.real(0);
                let two_2j = ipow(2, 2 * j);
                for k in 1..j {
                    // (2^{2k−2r} − 1) = (2^{2k} − 2^{2r}) / 2^{2r}
                    let diff = ipow(2, 2 * k) - two_2j.clone();
                    let c = ctx.real(pi.pow_u(2 * k)) / ctx.real(int_factorial(2 * k + 1)) * ctx.real(&diff)
                        / ctx.real(&two_2j);
                    let t = ctx.real(&c * &vals[(j - k) as usize]);
                    if k % 2 == 1 {
                        head -= &t;
                    } else {
                        head += &t;
                    }
                    head_err += ctx.real(c.abs_ref()) * &errs[(j - k) as usize];
                }
                let pi2r = ctx.real(pi.pow_u(2 * j));
                let signed = if j % 2 == 1 { -pi2r.clone() } else { pi2r.clone() };
                head -= ctx.real(&signed * &ln2) / ctx.real(int_factorial(2 * j + 1));
                let x2 = ctx.real(pi.square_ref());
                let mut w = ctx.real(int_factorial(2 * j + 1)).recip() / 2u32;
                let mut euler = EulerOneStream::new(ctx);
                let scaled_ref = ctx.real(&head / &pi2r);
                let lhs_factor = ctx.real(Integer::from(&two_2j - 1u32)) / ctx.real(&two_2j);
                let tol = tolerance.map(|t| ctx.real(t * &lhs_factor) / &pi2r);
                let out = sum_real_tail(budget, tol.as_ref(), &scaled_ref, ctx, |k| {
                    let n = 2 * j as u64 + 2 * k as u64 + 1;
                    w *= &x2;
                    w /= (n - 1) * n;
                    let e = euler.next_value()?;
                    let t = ctx.real(&e * &w);
                    Ok(if k % 2 == 0 { -t } else { t })
                })?;
                let value = (head + ctx.real(&signed * &out.sum)) / &lhs_factor;
                let err = (head_err + ctx.real(&pi2r * &out.error)) / &lhs_factor;
                (value, err, out)
            }
        };
        let err = err + ctx.real(value.abs_ref()) * ctx.epsilon();
        vals.push(value);
        errs.push(err);
        last = (out.terms, out.termination);
    }
    Ok(finish(&mut vals, &mut errs, last, ctx))
}

/// ζ(2r+1) from the chosen recursion, seeded only with ln 2; every level
/// sums at most `budget` tail terms.
pub fn zeta_odd(r: u32, variant: ZetaVariant, budget: usize, ctx: &PrecisionContext) -> Result<SeriesResult> {
    zeta_odd_impl(r, variant, budget, None, ctx)
}

/// As [`zeta_odd`], but each level stops once its estimated tail remainder
/// drops below `tolerance`, or after `max_terms` terms.
pub fn zeta_odd_to_tolerance(
    r: u32,
    variant: ZetaVariant,
    tolerance: &Float,
    max_terms: usize,
    ctx: &PrecisionContext,
) -> Result<SeriesResult> {
    zeta_odd_impl(r, variant, max_terms, Some(tolerance), ctx)
}

/// Coefficients of one fast level: ζ(2r+1) = A ζ(2r−1) + B [head + (−1)^r x^{2r} tail].
struct FastLevel {
    a: Float,
    b: Float,
    x: Float,
}

fn fast_level(r: u32, base: FastBase, ctx: &PrecisionContext) -> FastLevel {
    let pi = const_pi(ctx);
    let pi2 = ctx.real(pi.square_ref());
    let rr = Integer::from(r) * Integer::from(2 * r - 1);
    let e = 2 * r - 2;
    let (a_num, b_num, den, x) = match base {
        FastBase::M3 => {
            let den = rr * (ipow(3, 2 * r + 1) - 1u32);
            (-(ipow(3, e) - 1u32) * 2u32, ipow(3, 2 * r) * 2u32, den, ctx.real(&pi * 2u32) / 3u32)
        }
        FastBase::M4 => {
            let den = rr * (ipow(2, 4 * r + 1) + ipow(2, 2 * r) - 1u32);
            (-(ipow(2, 2 * r - 1) - 2u32), ipow(2, 4 * r + 1), den, ctx.real(&pi / 2u32))
        }
        FastBase::M6 => {
            let den = rr * (ipow(3, 2 * r) * (ipow(2, 2 * r) + 1u32) + ipow(2, 2 * r) - 1u32);
            let a = (ipow(6, e) - ipow(3, e) - ipow(2, e) + 1u32) * 2u32;
            (a, ipow(6, 2 * r) * 2u32, den, ctx.real(&pi / 3u32))
        }
    };
    let den = ctx.real(&den);
    FastLevel { a: ctx.real(&a_num) * &pi2 / &den, b: ctx.real(&b_num) / &den, x }
}

/// The tail Σ_{k≥0} (2k)!(4r+2k−1)/(2r+2k)! · ζ(2k)/m^{2k}, term by term
/// (index k in the returned closure's argument is k−1).
fn fast_tail_term(r: u32, base: FastBase, ctx: &PrecisionContext) -> impl FnMut(usize) -> Result<Float> + '_ {
    let m2 = (base.m() * base.m()) as u64;
    // ratio (2k)!/(2r+2k)!, starting at 1/(2r)!
    let mut ratio = ctx.real(int_factorial(2 * r)).recip();
    let mut mpow = ctx.real(1);
    move |i| {
        let k = (i - 1) as u64;
        if k > 0 {
            let n = 2 * r as u64 + 2 * k;
            ratio *= (2 * k - 1) * 2 * k;
            ratio /= (n - 1) * n;
            mpow /= m2;
        }
        let z = zeta_even_exact(k as usize, ctx);
        Ok(ctx.real(&ratio * &z) * &mpow * (4 * r as u64 + 2 * k - 1))
    }
}

fn fast_level_value(
    r: u32,
    base: FastBase,
    lower: &[Float],
    lower_err: &[Float],
    budget: usize,
    ctx: &PrecisionContext,
) -> Result<FastLevelValue> {
    let lv = fast_level(r, base, ctx);
    let x2 = ctx.real(lv.x.square_ref());
    let mut head = ctx.real(0);
    let mut head_err = ctx.real(0);
    let mut p = ctx.real(1);
    for k in 1..r {
        p *= &x2;
        p /= ((2 * k - 1) * 2 * k) as u64;
        let c = ctx.real(&p * ((r - k) as u64 * (2 * r + 2 * k - 1) as u64));
        let t = ctx.real(&c * &lower[(r - k) as usize]);
        if k % 2 == 1 {
            head += &t;
        } else {
            head -= &t;
        }
        head_err += c * &lower_err[(r - k) as usize];
    }
    let x2r = ctx.real(lv.x.pow_u(2 * r));
    let signed = if r % 2 == 1 { -x2r.clone() } else { x2r.clone() };
    let scaled_ref = ctx.real(&head / &x2r);
    let out = sum_real_tail(budget + 1, None, &scaled_ref, ctx, fast_tail_term(r, base, ctx))?;
    let mut fixed = ctx.real(&lv.b * &head);
    let mut err = ctx.real(lv.b.abs_ref()) * (head_err + ctx.real(&x2r * &out.error));
    if r >= 2 {
        fixed += ctx.real(&lv.a * &lower[r as usize - 1]);
        err += ctx.real(lv.a.abs_ref()) * &lower_err[r as usize - 1];
    }
    let value = ctx.real(&fixed + ctx.real(&lv.b * ctx.real(&signed * &out.sum)));
    err += ctx.real(value.abs_ref()) * ctx.epsilon();
    Ok(FastLevelValue { value, err, fixed, out })
}

struct FastLevelValue {
    value: Float,
    err: Float,
    /// Everything except the ζ(2k)/m^{2k} tail.
    fixed: Float,
    out: TailOutcome,
}

fn fast_levels(r: u32, base: FastBase, budget: usize, ctx: &PrecisionContext) -> Result<(Vec<Float>, Vec<Float>, FastLevelValue)> {
    if r == 0 {
        return Err(Error::Domain("ζ(2r+1) recursion needs r ≥ 1".into()));
    }
    if r == 1 && base != FastBase::M6 {
        return Err(Error::Unsupported(format!(
            "fast series with m = {} needs r ≥ 2; ζ(3) is available for m = 6 only",
            base.m()
        )));
    }
    let mut vals = vec![ctx.real(0)];
    let mut errs = vec![ctx.real(0)];
    for j in 1..r {
        let b = if j == 1 { FastBase::M6 } else { base };
        let lv = fast_level_value(j, b, &vals, &errs, budget, ctx)?;
        vals.push(lv.value);
        errs.push(lv.err);
    }
    let top = fast_level_value(r, base, &vals, &errs, budget, ctx)?;
    Ok((vals, errs, top))
}

/// Part of ζ(2r+1) outside the fast tail, i.e. the value with every tail
/// term removed. Lower orders use the same recursion with `budget`.
pub(crate) fn zeta_odd_fast_fixed(r: u32, base: FastBase, budget: usize, ctx: &PrecisionContext) -> Result<Float> {
    Ok(fast_levels(r, base, budget, ctx)?.2.fixed)
}

/// ζ(2r+1) from the fast series with tail terms ζ(2k)/m^{2k}, k = 0..=K,
/// using exact even zeta values. For r = 1 only m = 6 is available; the
/// other bases are seeded with that ζ(3).
pub fn zeta_odd_fast(r: u32, base: FastBase, budget: usize, ctx: &PrecisionContext) -> Result<SeriesResult> {
    let (_, _, top) = fast_levels(r, base, budget, ctx)?;
    Ok(SeriesResult {
        value: Complex::with_val(ctx.prec(), top.value),
        error_estimate: top.err,
        terms_used: top.out.terms,
        termination: top.out.termination,
    })
}

/// The first `count` contributions to ζ(2r+1) from the tail of the fast
/// series (k = 0, 1, …), including all constant factors.
pub fn zeta_odd_fast_terms(r: u32, base: FastBase, count: usize, ctx: &PrecisionContext) -> Result<Vec<Float>> {
    if r == 0 {
        return Err(Error::Domain("ζ(2r+1) recursion needs r ≥ 1".into()));
    }
    let lv = fast_level(r, base, ctx);
    let mut factor = ctx.real(&lv.b * ctx.real(lv.x.pow_u(2 * r)));
    if r % 2 == 1 {
        factor = -factor;
    }
    let mut term = fast_tail_term(r, base, ctx);
    (1..=count).map(|i| Ok(ctx.real(&factor * &term(i)?))).collect()
}

trait PowU {
    fn pow_u(&self, e: u32) -> Float;
}

impl PowU for Float {
    fn pow_u(&self, e: u32) -> Float {
        use rug::ops::Pow;
        Float::with_val(self.prec(), Pow::pow(self, e))
    }
}
