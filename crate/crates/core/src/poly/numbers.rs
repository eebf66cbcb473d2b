use std::sync::LazyLock;

use rug::{Float, Integer, Rational};

use super::cache::{FloatTable, SeqCache};
use crate::mp::PrecisionContext;

pub fn binomial(n: u64, k: u64) -> Integer {
    Integer::from(Integer::binomial_u(n as u32, k as u32))
}

// Σ_{k=0}^{m} C(m+1,k) B_k = 0 for m ≥ 1.
fn bernoulli_step(prev: &[Rational], m: usize) -> Rational {
    if m == 0 {
        return Rational::from(1);
    }
    if m >= 3 && m % 2 == 1 {
        return Rational::new();
    }
    let mut acc = Rational::new();
    for (k, b) in prev.iter().enumerate() {
        if !b.is_zero() {
            acc += Rational::from(b * binomial(m as u64 + 1, k as u64));
        }
    }
    -acc / Integer::from(m + 1)
}

// 2/(e^t+1) = Σ E_n(0) t^n/n!, so E_n(0) = −½ Σ_{k<n} C(n,k) E_k(0).
fn euler_zero_step(prev: &[Rational], n: usize) -> Rational {
    if n == 0 {
        return Rational::from(1);
    }
    if n >= 2 && n % 2 == 0 {
        return Rational::new();
    }
    let mut acc = Rational::new();
    for (k, e) in prev.iter().enumerate() {
        if !e.is_zero() {
            acc += Rational::from(e * binomial(n as u64, k as u64));
        }
    }
    -acc / 2
}

// sech t = Σ E_n t^n/n!, so Σ_{j} C(n,2j) E_{n−2j} = 0 for n ≥ 1.
fn euler_number_step(prev: &[Rational], n: usize) -> Rational {
    if n == 0 {
        return Rational::from(1);
    }
    if n % 2 == 1 {
        return Rational::new();
    }
    let mut acc = Rational::new();
    for j in 1..=n / 2 {
        acc += Rational::from(&prev[n - 2 * j] * binomial(n as u64, 2 * j as u64));
    }
    -acc
}

static BERNOULLI: SeqCache = SeqCache::new(bernoulli_step);
static EULER_ZERO: SeqCache = SeqCache::new(euler_zero_step);
static EULER_NUMBERS: SeqCache = SeqCache::new(euler_number_step);

static BERNOULLI_F: LazyLock<FloatTable> = LazyLock::new(FloatTable::new);
static EULER_ONE_F: LazyLock<FloatTable> = LazyLock::new(FloatTable::new);
static EULER_NUMBERS_F: LazyLock<FloatTable> = LazyLock::new(FloatTable::new);

/// B_m with B_1 = −1/2.
pub fn bernoulli_number(m: usize) -> Rational {
    BERNOULLI.get(m)
}

/// E_n, the coefficients of sech.
pub fn euler_number(n: usize) -> Rational {
    EULER_NUMBERS.get(n)
}

/// E_n(0).
pub fn euler_poly_at_zero(n: usize) -> Rational {
    EULER_ZERO.get(n)
}

/// E_n(1) = (−1)^n E_n(0).
pub fn euler_poly_at_one(n: usize) -> Rational {
    let e = EULER_ZERO.get(n);
    if n % 2 == 1 {
        -e
    } else {
        e
    }
}

pub fn bernoulli_poly(n: usize, x: &Rational) -> Rational {
    expand(n, x, bernoulli_number)
}

pub fn euler_poly(n: usize, x: &Rational) -> Rational {
    expand(n, x, euler_poly_at_zero)
}

// Σ_k C(n,k) c_k x^{n−k}, Horner in x.
fn expand(n: usize, x: &Rational, c: fn(usize) -> Rational) -> Rational {
    let mut acc = Rational::new();
    for k in 0..=n {
        acc *= x;
        let ck = c(k);
        if !ck.is_zero() {
            acc += ck * binomial(n as u64, k as u64);
        }
    }
    acc
}

pub(crate) fn bernoulli_float(m: usize, ctx: &PrecisionContext) -> Float {
    BERNOULLI_F.get(m, ctx.prec(), bernoulli_number)
}

pub(crate) fn euler_one_float(n: usize, ctx: &PrecisionContext) -> Float {
    EULER_ONE_F.get(n, ctx.prec(), euler_poly_at_one)
}

pub(crate) fn euler_number_float(n: usize, ctx: &PrecisionContext) -> Float {
    EULER_NUMBERS_F.get(n, ctx.prec(), euler_number)
}
