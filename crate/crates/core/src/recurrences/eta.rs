use rug::ops::Pow;
use rug::{Complex, Float, Integer};
use serde::Serialize;

use super::tail::{sum_real_tail, EulerOneStream};
use crate::error::{Error, Result};
use crate::mp::{const_ln2, const_pi, PrecisionContext, SeriesResult, Termination};

/// The three recursions for η(2r+1), named by the angle of the underlying
/// cosine sum: 2π/3, π/2 and π/3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EtaScheme {
    Third,
    Quarter,
    Sixth,
}

impl EtaScheme {
    pub const ALL: [EtaScheme; 3] = [EtaScheme::Third, EtaScheme::Quarter, EtaScheme::Sixth];
}

/// Real-valued recursion level: head weight H, angle x and tail weight T in
/// η(2r+1) = H Σ_{k=1}^r (−1)^{k−1} x^{2k}/(2k)! η(2r+1−2k)
///         + T Σ_{k≥1} (−1)^{r+k−1} E_{2k−1}(1) x^{2k}/(2r+2k)!.
struct Level {
    head: Float,
    x: Float,
    tail: Float,
}

fn level(r: u32, scheme: EtaScheme, ctx: &PrecisionContext) -> Level {
    let pi = const_pi(ctx);
    let pow = |b: u32, e: u32| Integer::from(Integer::u_pow_u(b, e));
    match scheme {
        EtaScheme::Third => {
            let den = pow(3, 2 * r + 1) - 1u32;
            let head = ctx.real(pow(3, 2 * r) * 2u32) / ctx.real(&den);
            let two_pi = ctx.real(&pi * 2u32);
            let tail = ctx.real(Pow::pow(&two_pi, 2 * r)) / ctx.real(&den);
            Level { head, x: two_pi / 3u32, tail }
        }
        EtaScheme::Quarter => {
            let den = pow(2, 2 * r + 1) - 1u32;
            let head = ctx.real(pow(2, 2 * r + 1)) / ctx.real(&den);
            let tail = ctx.real(Pow::pow(&pi, 2 * r)) / ctx.real(&den);
            Level { head, x: pi / 2u32, tail }
        }
        EtaScheme::Sixth => {
            let num = pow(3, 2 * r) * (pow(2, 2 * r) - 1u32);
            let den = pow(3, 2 * r) * (pow(2, 2 * r - 1) - 1u32) + pow(2, 2 * r - 1);
            let head = ctx.real(&num) / ctx.real(&den);
            let x = pi / 3u32;
            let tail = ctx.real(&head * ctx.real(Pow::pow(&x, 2 * r))) / 2u32;
            Level { head, x, tail }
        }
    }
}

fn inv_factorial(n: u32, ctx: &PrecisionContext) -> Float {
    ctx.real(Integer::from(Integer::factorial(n))).recip()
}

/// One computed tail term of the top recursion level, with the sign of the
/// explicit prefactor (−1)^{r+k−1}.
#[derive(Clone, Debug)]
pub struct EtaTailTerm {
    pub k: usize,
    pub prefactor_sign: i32,
    pub value: Float,
}

fn tail_term(r: u32, k: usize, lv: &Level, e: &Float, weight: &Float) -> Float {
    let sign_neg = (r as usize + k - 1) % 2 == 1;
    let t = Float::with_val(e.prec(), &lv.tail * e) * weight;
    if sign_neg {
        -t
    } else {
        t
    }
}

/// x^{2k}/(2r+2k)! for successive k, starting at k = 1.
struct Weights {
    r: u32,
    k: u32,
    w: Float,
    x2: Float,
}

impl Weights {
    fn new(r: u32, x: &Float, ctx: &PrecisionContext) -> Self {
        Weights { r, k: 0, w: inv_factorial(2 * r, ctx), x2: ctx.real(x.square_ref()) }
    }

    fn next(&mut self) -> &Float {
        self.k += 1;
        let n = 2 * self.r + 2 * self.k;
        self.w *= &self.x2;
        self.w /= (n - 1) as u64 * n as u64;
        &self.w
    }
}

/// The first `count` computed tail terms at order r.
pub fn eta_odd_terms(r: u32, scheme: EtaScheme, count: usize, ctx: &PrecisionContext) -> Result<Vec<EtaTailTerm>> {
    if r == 0 {
        return Err(Error::Domain("η(2r+1) recursion needs r ≥ 1".into()));
    }
    let lv = level(r, scheme, ctx);
    let mut euler = EulerOneStream::new(ctx);
    let mut weights = Weights::new(r, &lv.x, ctx);
    let mut out = Vec::with_capacity(count);
    for k in 1..=count {
        let e = euler.next_value()?;
        let w = weights.next().clone();
        out.push(EtaTailTerm {
            k,
            prefactor_sign: if (r as usize + k - 1) % 2 == 0 { 1 } else { -1 },
            value: tail_term(r, k, &lv, &e, &w),
        });
    }
    Ok(out)
}

/// η(2r+1) from the chosen recursion, seeded only with η(1) = ln 2. Each
/// level sums at most `budget` tail terms.
pub fn eta_odd(r: u32, scheme: EtaScheme, budget: usize, ctx: &PrecisionContext) -> Result<SeriesResult> {
    let ln2 = const_ln2(ctx);
    if r == 0 {
        return Ok(SeriesResult::exact(Complex::with_val(ctx.prec(), &ln2), 0));
    }
    let mut vals = vec![ln2];
    let mut errs = vec![ctx.real(0)];
    let mut last = (0usize, Termination::Converged);
    for j in 1..=r {
        let lv = level(j, scheme, ctx);
        let x2 = ctx.real(lv.x.square_ref());
        let mut head = ctx.real(0);
        let mut head_err = ctx.real(0);
        let mut p = ctx.real(1);
        for k in 1..=j as usize {
            p *= &x2;
            p /= ((2 * k - 1) * 2 * k) as u64;
            let t = ctx.real(&p * &vals[j as usize - k]);
            if k % 2 == 1 {
                head += &t;
            } else {
                head -= &t;
            }
            head_err += ctx.real(&p * &errs[j as usize - k]);
        }
        head *= &lv.head;
        head_err *= &lv.head;

        let mut euler = EulerOneStream::new(ctx);
        let mut weights = Weights::new(j, &lv.x, ctx);
        let out = sum_real_tail(budget, None, &head, ctx, |k| {
            let e = euler.next_value()?;
            let w = weights.next().clone();
            Ok(tail_term(j, k, &lv, &e, &w))
        })?;
        let value = head + &out.sum;
        let err = head_err + &out.error + ctx.real(value.abs_ref()) * ctx.epsilon();
        vals.push(value);
        errs.push(err);
        last = (out.terms, out.termination);
    }
    Ok(SeriesResult {
        value: Complex::with_val(ctx.prec(), vals.pop().unwrap()),
        error_estimate: errs.pop().unwrap(),
        terms_used: last.0,
        termination: last.1,
    })
}

/// η(m) for any integer m ≥ 0 from the mixed-parity recursion seeded with
/// η(0) = 1/2 and η(1) = ln 2. For even m the tail vanishes identically.
pub fn eta_all(m: u32, budget: usize, ctx: &PrecisionContext) -> Result<SeriesResult> {
    let pi = const_pi(ctx);
    let x = ctx.real(&pi / 3u32);
    let x2 = ctx.real(x.square_ref());
    let mut vals = vec![ctx.real(0.5), const_ln2(ctx)];
    let mut errs = vec![ctx.real(0), ctx.real(0)];
    let mut last = (0usize, Termination::ExactTerminating);
    if m < 2 {
        return Ok(SeriesResult::exact(Complex::with_val(ctx.prec(), &vals[m as usize]), 0));
    }
    let pow = |b: u32, e: u32| Integer::from(Integer::u_pow_u(b, e));
    for j in 2..=m {
        let num = pow(3, j - 1) * (pow(2, j - 1) - 1u32);
        let den = pow(3, j - 1) * (pow(2, j - 2) - 1u32) + pow(2, j - 2);
        let c = ctx.real(&num) / ctx.real(&den);
        let half = (j / 2) as usize;
        let mut head = ctx.real(0);
        let mut head_err = ctx.real(0);
        let mut p = ctx.real(1);
        for k in 1..=half {
            p *= &x2;
            p /= ((2 * k - 1) * 2 * k) as u64;
            let t = ctx.real(&p * &vals[j as usize - 2 * k]);
            if k % 2 == 1 {
                head += &t;
            } else {
                head -= &t;
            }
            head_err += ctx.real(&p * &errs[j as usize - 2 * k]);
        }
        // p now holds x^{2·half}/(2·half)!
        let (tail, tail_err, terms, termination) = if j % 2 == 0 {
            (ctx.real(0), ctx.real(0), 0, Termination::ExactTerminating)
        } else {
            let mut euler = EulerOneStream::new(ctx);
            let mut w = ctx.real(&p / 2u32);
            let out = sum_real_tail(budget, None, &head, ctx, |i| {
                let k = half + i;
                w *= &x2;
                w /= ((2 * k - 1) * 2 * k) as u64;
                let e = euler.next_value()?;
                let t = ctx.real(&e * &w);
                Ok(if (k - 1) % 2 == 1 { -t } else { t })
            })?;
            (out.sum, out.error, out.terms, out.termination)
        };
        let value = ctx.real(&head + &tail) * &c;
        let rounding = if j % 2 == 0 && errs.iter().all(|e| e.is_zero()) {
            ctx.real(0)
        } else {
            ctx.real(value.abs_ref()) * ctx.epsilon()
        };
        let err = (head_err + tail_err) * &c + rounding;
        vals.push(value);
        errs.push(err);
        last = (terms, termination);
    }
    Ok(SeriesResult {
        value: Complex::with_val(ctx.prec(), vals.pop().unwrap()),
        error_estimate: errs.pop().unwrap(),
        terms_used: last.0,
        termination: last.1,
    })
}
