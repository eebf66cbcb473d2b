//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library except for `PrecisionContext`.
#![allow(dead_code)]

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Complex, Float, Integer, Rational};
use zetalab::PrecisionContext;

pub fn ctx(digits: u32) -> PrecisionContext {
    PrecisionContext::new(digits).unwrap()
}

pub fn fl(prec: u32, v: f64) -> Float {
    Float::with_val(prec, v)
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::from((n, d))
}

pub fn pi(prec: u32) -> Float {
    Float::with_val(prec, Constant::Pi)
}

pub fn ln2(prec: u32) -> Float {
    Float::with_val(prec, Constant::Log2)
}

/// 10^{−d} at the given precision.
pub fn tol(prec: u32, d: i32) -> Float {
    Float::with_val(prec, 10).pow(-d)
}

pub fn absdiff(a: &Complex, b: &Complex) -> Float {
    Complex::with_val(a.prec().0, a - b).abs().real().clone()
}

pub fn absdiff_re(a: &Complex, b: &Float) -> Float {
    let c = Complex::with_val(a.prec().0, b);
    absdiff(a, &c)
}

pub fn c_of(prec: u32, x: &Float) -> Complex {
    Complex::with_val(prec, x)
}

pub fn c_rat(prec: u32, r: &Rational) -> Complex {
    Complex::with_val(prec, r)
}

pub fn c_f64(prec: u32, v: f64) -> Complex {
    Complex::with_val(prec, v)
}

/// Σ_{k≥0} (−1)^k a_k by the Cohen–Rodriguez Villegas–Zagier acceleration;
/// relative error about 5.8^{−n} when a_k is a moment sequence, e.g.
/// (k+a)^{−s} with s, a > 0.
pub fn alt_sum(prec: u32, n: u32, a: impl Fn(u32) -> Float) -> Float {
    let root = Float::with_val(prec, 8).sqrt() + 3u32;
    let mut d = root.pow(n);
    d = (Float::with_val(prec, d.recip_ref()) + &d) / 2u32;
    let mut b = Float::with_val(prec, -1);
    let mut c = Float::with_val(prec, -&d);
    let mut s = Float::with_val(prec, 0);
    for k in 0..n {
        c = Float::with_val(prec, &b - &c);
        s += Float::with_val(prec, &c * a(k));
        let kk = k as i64;
        let nn = n as i64;
        b *= (kk + nn) * (kk - nn);
        b /= Float::with_val(prec, kk as f64 + 0.5) * (kk + 1);
    }
    s / d
}

/// Term count for [`alt_sum`] to reach about `digits` digits.
pub fn alt_terms(digits: u32) -> u32 {
    (digits as f64 / 5.8f64.log10()).ceil() as u32 + 10
}

/// (k+a)^{−s}.
pub fn inv_pow(prec: u32, base: &Float, s: &Float) -> Float {
    Float::with_val(prec, base.pow(Float::with_val(prec, -s)))
}

/// η(s) = Σ (−1)^{n−1} n^{−s}, real s > 0.
pub fn eta_oracle(prec: u32, s: f64) -> Float {
    let s = fl(prec, s);
    alt_sum(prec, alt_terms(prec / 3), |k| inv_pow(prec, &fl(prec, (k + 1) as f64), &s))
}

/// ζ(s) = η(s)/(1−2^{1−s}), real s > 0, s ≠ 1.
pub fn zeta_oracle(prec: u32, s: f64) -> Float {
    let f = Float::with_val(prec, 1) - Float::with_val(prec, 2).pow(1.0 - s);
    eta_oracle(prec, s) / f
}

/// β(s) = Σ (−1)^n (2n+1)^{−s}, real s > 0.
pub fn beta_oracle(prec: u32, s: f64) -> Float {
    let s = fl(prec, s);
    alt_sum(prec, alt_terms(prec / 3), |k| inv_pow(prec, &fl(prec, (2 * k + 1) as f64), &s))
}

/// Φ(−1,s,a) = Σ (−1)^n (n+a)^{−s}, real s > 0, a > 0.
pub fn phi_oracle(prec: u32, s: f64, a: &Rational) -> Float {
    let s = fl(prec, s);
    let a = Float::with_val(prec, a);
    alt_sum(prec, alt_terms(prec / 3), |k| inv_pow(prec, &Float::with_val(prec, &a + k), &s))
}

/// Bernoulli numbers B_0..=B_n (B_1 = −1/2) by the Akiyama–Tanigawa
/// algorithm.
pub fn bernoulli_table(n: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n + 1);
    let mut row: Vec<Rational> = Vec::new();
    for m in 0..=n {
        row.push(Rational::from((1, m as i64 + 1)));
        for j in (1..=m).rev() {
            let d = Rational::from(&row[j - 1] - &row[j]) * Integer::from(j);
            row[j - 1] = d;
        }
        out.push(row[0].clone());
    }
    if n >= 1 {
        out[1] = rat(-1, 2);
    }
    out
}

/// Published Euler numbers E_0, E_2, …, E_20.
pub const EULER_EVEN: [&str; 11] = [
    "1",
    "-1",
    "5",
    "-61",
    "1385",
    "-50521",
    "2702765",
    "-199360981",
    "19391512145",
    "-2404879675441",
    "370371188237525",
];

/// E_n for n ≤ 20 from the published table.
pub fn euler_table(n: usize) -> Rational {
    if n % 2 == 1 {
        Rational::new()
    } else {
        EULER_EVEN[n / 2].parse::<Integer>().unwrap().into()
    }
}

pub fn binom(n: u64, k: u64) -> Integer {
    Integer::from(Integer::binomial_u(n as u32, k as u32))
}

/// B_n(x) = Σ C(n,k) B_k x^{n−k}.
pub fn bernoulli_poly_oracle(n: usize, x: &Rational) -> Rational {
    let b = bernoulli_table(n);
    let mut acc = Rational::new();
    for k in 0..=n {
        acc += Rational::from(x.pow((n - k) as i32)) * &b[k] * binom(n as u64, k as u64);
    }
    acc
}

/// E_n(x) = Σ C(n,k) E_k 2^{−k} (x−½)^{n−k}, n ≤ 20.
pub fn euler_poly_oracle(n: usize, x: &Rational) -> Rational {
    let y = Rational::from(x - rat(1, 2));
    let mut acc = Rational::new();
    for k in 0..=n {
        let e = euler_table(k) / Rational::from(Integer::from(1) << k as u32);
        acc += Rational::from(y.clone().pow((n - k) as i32)) * e * binom(n as u64, k as u64);
    }
    acc
}

/// Σ_{n=0}^{N−1} (n+a)^{−s} plus the Euler–Maclaurin tail at x = N+a with
/// ten Bernoulli corrections. Real s > 1, a > 0; error ≲ (s)_{21}/(2πx)^{22}.
pub fn hurwitz_oracle(prec: u32, s: f64, a: &Rational) -> Float {
    let n_head = 200u32;
    let sf = fl(prec, s);
    let a = Float::with_val(prec, a);
    let mut sum = Float::with_val(prec, 0);
    for n in 0..n_head {
        sum += inv_pow(prec, &Float::with_val(prec, &a + n), &sf);
    }
    let x = Float::with_val(prec, &a + n_head);
    let xs = inv_pow(prec, &x, &sf);
    sum += Float::with_val(prec, &xs * &x) / (s - 1.0);
    sum += Float::with_val(prec, &xs / 2u32);
    let b = bernoulli_table(20);
    // s(s+1)…(s+2k−2)/(2k)! · x^{−s−2k+1}
    let mut rising = Float::with_val(prec, &sf);
    let mut fact = Float::with_val(prec, 2);
    let mut pw = Float::with_val(prec, &xs / &x);
    let x2 = Float::with_val(prec, x.square_ref());
    for k in 1..=10usize {
        sum += Float::with_val(prec, &rising * &pw) / &fact * Float::with_val(prec, &b[2 * k]);
        let j = (2 * k) as f64;
        rising *= Float::with_val(prec, &sf + (j - 1.0)) * Float::with_val(prec, &sf + j);
        fact *= (j + 1.0) * (j + 2.0);
        pw /= &x2;
    }
    sum
}

/// Σ_{n=1}^{N} w(n) n^{−s} computed naively.
pub fn brute_sum(prec: u32, n_terms: u64, s: f64, w: impl Fn(u64) -> Float) -> Float {
    let sf = fl(prec, s);
    let mut acc = Float::with_val(prec, 0);
    for n in 1..=n_terms {
        acc += w(n) * inv_pow(prec, &fl(prec, n as f64), &sf);
    }
    acc
}
