use rug::{Complex, Float, Integer, Rational};

use crate::dirichlet::DirichletCharacter;
use crate::mp::{const_pi, factorial, PrecisionContext};
use crate::poly::{bernoulli_number, bernoulli_poly, euler_number, euler_poly, euler_poly_at_one};

/// η(−n) = ½E_n(1).
pub fn eta_special_negative(n: usize) -> Rational {
    euler_poly_at_one(n) / 2
}

/// Φ(−1,−n,a) = ½E_n(a).
pub fn phi_special_negative(n: usize, a: &Rational) -> Rational {
    euler_poly(n, a) / 2
}

/// ζ(−n,a) = −B_{n+1}(a)/(n+1).
pub fn hurwitz_special_negative(n: usize, a: &Rational) -> Rational {
    -bernoulli_poly(n + 1, a) / Integer::from(n + 1)
}

/// β(−n) = ½E_n.
pub fn beta_special_negative(n: usize) -> Rational {
    euler_number(n) / 2
}

/// L(−n,χ) = −B_{n+1,χ}/(n+1), with B_{k,χ} = q^{k−1} Σ_{a=1}^{q} χ(a) B_k(a/q)
/// summed over exact Bernoulli values. Zero when k and χ have opposite
/// parity, except B_1 = 1/2 for q = 1.
pub fn l_special_negative(n: usize, chi: &DirichletCharacter, ctx: &PrecisionContext) -> Complex {
    let k = n + 1;
    let q = chi.modulus();
    if (k % 2 == 0) != chi.is_even() && !(k == 1 && q == 1) {
        return ctx.zero();
    }
    let mut acc = ctx.zero();
    for a in 1..=q {
        let v = chi.value(a);
        if v.is_zero() {
            continue;
        }
        acc += v.to_complex(ctx) * ctx.real(&bernoulli_poly(k, &Rational::from((a, q))));
    }
    let scale = Rational::from((Integer::from(Integer::u_pow_u(q as u32, n as u32)), Integer::from(k)));
    -acc * ctx.real(&scale)
}

/// ζ(2k) = (−1)^{k−1} (2π)^{2k} B_{2k} / (2 (2k)!); gives ζ(0) = −1/2.
pub fn zeta_even_exact(k: usize, ctx: &PrecisionContext) -> Float {
    let two_pi = const_pi(ctx) * 2u32;
    let pw = ctx.real(two_pi.pow_ref_u(2 * k as u32));
    let v = pw * ctx.real(&bernoulli_number(2 * k)) / factorial(2 * k as u64, ctx) / 2u32;
    if k % 2 == 0 {
        -v
    } else {
        v
    }
}

trait PowU {
    fn pow_ref_u(&self, k: u32) -> Float;
}

impl PowU for Float {
    fn pow_ref_u(&self, k: u32) -> Float {
        use rug::ops::Pow;
        Float::with_val(self.prec(), self.pow(k))
    }
}
