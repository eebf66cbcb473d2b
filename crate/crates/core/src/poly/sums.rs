use rug::ops::Pow;
use rug::{Integer, Rational};

use super::numbers::{bernoulli_poly, euler_poly};

/// Σ_{k=0}^{m−1} (−1)^k (k+a)^n as ½(E_n(a) − (−1)^m E_n(a+m)).
pub fn alternating_power_sum(a: &Rational, m: u64, n: usize) -> Rational {
    let shifted = Rational::from(a + Integer::from(m));
    let tail = euler_poly(n, &shifted);
    let closed = if m % 2 == 0 {
        (euler_poly(n, a) - tail) / 2
    } else {
        (euler_poly(n, a) + tail) / 2
    };
    debug_assert_eq!(closed, alternating_power_sum_brute(a, m, n));
    closed
}

/// Σ_{k=0}^{m−1} (k+a)^n as (B_{n+1}(a+m) − B_{n+1}(a))/(n+1).
pub fn power_sum(a: &Rational, m: u64, n: usize) -> Rational {
    let shifted = Rational::from(a + Integer::from(m));
    let closed = (bernoulli_poly(n + 1, &shifted) - bernoulli_poly(n + 1, a)) / Integer::from(n + 1);
    debug_assert_eq!(closed, power_sum_brute(a, m, n));
    closed
}

pub fn alternating_power_sum_brute(a: &Rational, m: u64, n: usize) -> Rational {
    let mut acc = Rational::new();
    for k in 0..m {
        let t = Rational::from(a + Integer::from(k)).pow(n as i32);
        if k % 2 == 0 {
            acc += t;
        } else {
            acc -= t;
        }
    }
    acc
}

pub fn power_sum_brute(a: &Rational, m: u64, n: usize) -> Rational {
    let mut acc = Rational::new();
    for k in 0..m {
        acc += Rational::from(a + Integer::from(k)).pow(n as i32);
    }
    acc
}
