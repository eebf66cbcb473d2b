use rug::{Complex, Float};

use super::truncation::sum_tail;
use crate::dirichlet::{euler_phi, gen_bernoulli, DirichletCharacter};
use crate::error::{Error, Result};
use crate::mp::{abs, nonpositive_integer, pow_neg, PrecisionContext, SeriesResult, Termination};
use crate::poly::{bernoulli_float, euler_number_float, euler_one_float};

/// n^{−s}, with an integer-power fast path for real integral s.
pub(crate) fn inv_pow(n: &Float, s: &Complex, ctx: &PrecisionContext) -> Complex {
    if s.imag().is_zero() && s.real().is_integer() {
        if let Some(k) = s.real().to_i32_saturating().filter(|k| k.unsigned_abs() < 1 << 20) {
            let v = ctx.real(n.pow_ref_i32(-k));
            return ctx.complex((v, 0));
        }
    }
    pow_neg(n, s, ctx)
}

trait PowI32 {
    fn pow_ref_i32(&self, k: i32) -> Float;
}

impl PowI32 for Float {
    fn pow_ref_i32(&self, k: i32) -> Float {
        use rug::ops::Pow;
        Float::with_val(self.prec(), self.pow(k))
    }
}

fn require_positive_a(a: &Float) -> Result<()> {
    if *a <= 0 {
        return Err(Error::Domain(format!("shift a must be positive, got {}", a.to_f64())));
    }
    Ok(())
}

fn is_one(s: &Complex) -> bool {
    s.imag().is_zero() && *s.real() == 1
}

/// (−1)^m / 2.
fn half_sign(m: u64, ctx: &PrecisionContext) -> Float {
    ctx.real(if m % 2 == 0 { 0.5 } else { -0.5 })
}

/// Σ_{n=1}^{N} (−1)^{n−1} n^{−s}; the error estimate is |(N+1)^{−s}|.
pub fn eta_direct(s: &Complex, n_terms: u64, ctx: &PrecisionContext) -> Result<SeriesResult> {
    if *s.real() <= 0 {
        return Err(Error::Domain("direct η series needs Re(s) > 0".into()));
    }
    let mut sum = ctx.zero();
    for n in 1..=n_terms {
        let t = inv_pow(&ctx.real(n), s, ctx);
        if n % 2 == 1 {
            sum += t;
        } else {
            sum -= t;
        }
    }
    let next = abs(&inv_pow(&ctx.real(n_terms + 1), s, ctx));
    Ok(SeriesResult { value: sum, error_estimate: next, terms_used: n_terms as usize, termination: Termination::BudgetExhausted })
}

/// η(s) = Σ_{n≤m} (−1)^{n−1} n^{−s}
///        + (−1)^m/2 [m^{−s} + Σ_k C(−s,2k−1) E_{2k−1}(1) m^{−s−2k+1}].
pub fn eta_asymptotic(s: &Complex, m: u64, budget: usize, ctx: &PrecisionContext) -> Result<SeriesResult> {
    if m == 0 {
        return Err(Error::Domain("head length m must be at least 1".into()));
    }
    let mut head = ctx.zero();
    for n in 1..=m {
        let t = inv_pow(&ctx.real(n), s, ctx);
        if n % 2 == 1 {
            head += t;
        } else {
            head -= t;
        }
    }
    let mf = ctx.real(m);
    let sign = half_sign(m, ctx);
    let m_s = inv_pow(&mf, s, ctx);
    head += m_s.clone() * &sign;

    let inv_m2 = ctx.real(mf.square_ref()).recip();
    let t = ctx.complex(-s);
    let mut binom = t.clone();
    let mut pw = m_s / &mf * &sign;
    let exact_last = nonpositive_integer(s).map(|n| (n as usize).div_ceil(2));
    Ok(sum_tail(head, m as usize, budget, exact_last, ctx, |k| {
        let term = ctx.complex(&binom * &pw) * euler_one_float(2 * k - 1, ctx);
        let j = 2 * k as u64;
        binom *= ctx.complex(&t - (j - 1)) * ctx.complex(&t - j);
        binom /= j * (j + 1);
        pw *= &inv_m2;
        Some(term)
    }))
}

/// Φ(−1,s,a) = Σ_{n<m} (−1)^n (n+a)^{−s}
///           + (−1)^m/2 [M^{−s} + Σ_k E_{2k−1}(1) s^{(2k−1)}/(2k−1)! M^{−s−2k+1}],  M = m+a.
pub fn phi_minus1(s: &Complex, a: &Float, m: u64, budget: usize, ctx: &PrecisionContext) -> Result<SeriesResult> {
    require_positive_a(a)?;
    let mut head = ctx.zero();
    for n in 0..m {
        let t = inv_pow(&ctx.real(a + n), s, ctx);
        if n % 2 == 0 {
            head += t;
        } else {
            head -= t;
        }
    }
    let mm = ctx.real(a + m);
    let sign = half_sign(m, ctx);
    let m_s = inv_pow(&mm, s, ctx);
    head += m_s.clone() * &sign;

    let inv_m2 = ctx.real(mm.square_ref()).recip();
    let mut ratio = ctx.complex(s);
    let mut pw = m_s / &mm * &sign;
    let exact_last = nonpositive_integer(s).map(|n| (n as usize).div_ceil(2));
    Ok(sum_tail(head, m as usize, budget, exact_last, ctx, |k| {
        let term = ctx.complex(&ratio * &pw) * euler_one_float(2 * k - 1, ctx);
        let j = 2 * k as u64;
        ratio *= ctx.complex(s + (j - 1)) * ctx.complex(s + j);
        ratio /= j * (j + 1);
        pw *= &inv_m2;
        Some(term)
    }))
}

/// β(s) = Σ_{n<m} (−1)^n (2n+1)^{−s}
///      + (−1)^m/2 [(2m)^{−s} + Σ_k C(−s,2k) E_{2k} (2m)^{−s−2k}].
pub fn beta_eval(s: &Complex, m: u64, budget: usize, ctx: &PrecisionContext) -> Result<SeriesResult> {
    if m == 0 {
        return Err(Error::Domain("head length m must be at least 1".into()));
    }
    let mut head = ctx.zero();
    for n in 0..m {
        let t = inv_pow(&ctx.real(2 * n + 1), s, ctx);
        if n % 2 == 0 {
            head += t;
        } else {
            head -= t;
        }
    }
    let mm = ctx.real(2 * m);
    let sign = half_sign(m, ctx);
    let m_s = inv_pow(&mm, s, ctx);
    head += m_s.clone() * &sign;

    let inv_m2 = ctx.real(mm.square_ref()).recip();
    let t = ctx.complex(-s);
    let mut binom = ctx.complex(&t * ctx.complex(&t - 1u32)) / 2u32;
    let mut pw = m_s * &inv_m2 * &sign;
    let exact_last = nonpositive_integer(s).map(|n| n as usize / 2);
    Ok(sum_tail(head, m as usize, budget, exact_last, ctx, |k| {
        let term = ctx.complex(&binom * &pw) * euler_number_float(2 * k, ctx);
        let j = 2 * k as u64;
        binom *= ctx.complex(&t - j) * ctx.complex(&t - (j + 1));
        binom /= (j + 1) * (j + 2);
        pw *= &inv_m2;
        Some(term)
    }))
}

/// ζ(s,a) = Σ_{n<m} (n+a)^{−s} + M^{1−s}/(s−1) + M^{−s}/2
///        + Σ_k B_{2k} s^{(2k−1)}/(2k)! M^{−s−2k+1},  M = m+a.
pub fn hurwitz_zeta(s: &Complex, a: &Float, m: u64, budget: usize, ctx: &PrecisionContext) -> Result<SeriesResult> {
    hurwitz_named(s, a, m, budget, ctx, "Hurwitz zeta")
}

pub fn riemann_zeta(s: &Complex, m: u64, budget: usize, ctx: &PrecisionContext) -> Result<SeriesResult> {
    hurwitz_named(s, &ctx.real(1), m, budget, ctx, "Riemann zeta")
}

fn hurwitz_named(
    s: &Complex,
    a: &Float,
    m: u64,
    budget: usize,
    ctx: &PrecisionContext,
    function: &'static str,
) -> Result<SeriesResult> {
    require_positive_a(a)?;
    if is_one(s) {
        return Err(Error::Pole { function, residue: "1".into() });
    }
    let mut head = ctx.zero();
    for n in 0..m {
        head += inv_pow(&ctx.real(a + n), s, ctx);
    }
    let mm = ctx.real(a + m);
    let m_s = inv_pow(&mm, s, ctx);
    let s_minus_1 = ctx.complex(s - 1u32);
    head += ctx.complex(&m_s * &mm) / &s_minus_1;
    head += ctx.complex(&m_s / 2u32);

    let inv_m2 = ctx.real(mm.square_ref()).recip();
    let mut ratio = ctx.complex(s / 2u32);
    let mut pw = m_s / &mm;
    let exact_last = nonpositive_integer(s).map(|n| (n as usize).div_ceil(2));
    Ok(sum_tail(head, m as usize, budget, exact_last, ctx, |k| {
        let term = ctx.complex(&ratio * &pw) * bernoulli_float(2 * k, ctx);
        let j = 2 * k as u64;
        ratio *= ctx.complex(s + (j - 1)) * ctx.complex(s + j);
        ratio /= (j + 1) * (j + 2);
        pw *= &inv_m2;
        Some(term)
    }))
}

/// L(s,χ) = Σ_{n≤qm} χ(n) n^{−s} + M^{1−s} B_{0,χ}/(s−1)
///        + Σ_k (−1)^k B_{k,χ} s^{(k−1)}/k! M^{−s−k+1},  M = qm.
pub fn dirichlet_l(
    s: &Complex,
    chi: &DirichletCharacter,
    m: u64,
    budget: usize,
    ctx: &PrecisionContext,
) -> Result<SeriesResult> {
    if m == 0 {
        return Err(Error::Domain("head length m must be at least 1".into()));
    }
    let q = chi.modulus();
    let principal = chi.is_principal();
    if principal && is_one(s) {
        let phi = euler_phi(q);
        let g = crate::dirichlet::gcd(phi, q);
        let residue = if q / g == 1 { format!("{}", phi / g) } else { format!("{}/{}", phi / g, q / g) };
        return Err(Error::Pole { function: "Dirichlet L (principal character)", residue });
    }
    let values = chi.materialize(ctx);
    let mut head = ctx.zero();
    for n in 1..=q * m {
        let v = &values[(n % q) as usize];
        if !v.is_zero() {
            head += inv_pow(&ctx.real(n), s, ctx) * v;
        }
    }
    let mm = ctx.real(q * m);
    let m_s = inv_pow(&mm, s, ctx);
    if principal {
        let b0 = gen_bernoulli(chi, 0, ctx);
        head += ctx.complex(&m_s * &mm) * b0 / ctx.complex(s - 1u32);
    }
    let even = chi.is_even();
    let mut ratio = ctx.complex(1);
    let mut pw = m_s.clone();
    let exact_last = nonpositive_integer(s).map(|n| n as usize + 1);
    Ok(sum_tail(head, (q * m) as usize, budget, exact_last, ctx, |k| {
        let term = ctx.complex(&ratio * &pw);
        ratio *= ctx.complex(s + (k as u64 - 1));
        ratio /= k as u64 + 1;
        pw /= &mm;
        // B_{k,χ} = 0 when k and χ have opposite parity, except B_1 = 1/2 for q = 1
        if (k % 2 == 0) != even && !(k == 1 && q == 1) {
            return None;
        }
        let b = gen_bernoulli(chi, k, ctx);
        Some(if k % 2 == 1 { -(term * b) } else { term * b })
    }))
}
