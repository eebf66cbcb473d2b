use std::collections::HashMap;
use std::sync::{LazyLock, Mutex};

use rug::ops::Pow;
use rug::{Complex, Integer};

use super::character::{CharValue, DirichletCharacter};
use crate::mp::PrecisionContext;
use crate::poly::binomial;

type Key = (DirichletCharacter, u32);

static CACHE: LazyLock<Mutex<HashMap<Key, Vec<Complex>>>> = LazyLock::new(Default::default);

/// Σ_{k=1}^{upto} χ(k) k^n, with the integer parts accumulated exactly per
/// root of unity before materializing.
fn weighted_power_sum(chi: &DirichletCharacter, n: u32, upto: u64, ctx: &PrecisionContext) -> Complex {
    let l = chi.order();
    let mut groups: Vec<Integer> = vec![Integer::new(); l as usize];
    for k in 1..=upto {
        if let CharValue::Root { j, order } = chi.value(k) {
            groups[(j * (l / order)) as usize] += Integer::from(k).pow(n);
        }
    }
    let mut acc = ctx.zero();
    for (t, g) in groups.iter().enumerate() {
        if *g != 0 {
            acc += CharValue::root(t as u64, l).to_complex(ctx) * ctx.real(g);
        }
    }
    acc
}

/// Σ_{k=1}^{q} χ(k) k^n.
pub fn power_sum_values(chi: &DirichletCharacter, n: u32, ctx: &PrecisionContext) -> Complex {
    weighted_power_sum(chi, n, chi.modulus(), ctx)
}

/// B_{n,χ} from the triangular system
/// (1/(n+1)) Σ_{k=0}^{n} C(n+1,k) q^{n+1−k} B_{k,χ} = Σ_{k=1}^{q} χ(k) k^n,
/// whose diagonal coefficient is q.
pub fn gen_bernoulli(chi: &DirichletCharacter, n: usize, ctx: &PrecisionContext) -> Complex {
    let key = (chi.clone(), ctx.prec());
    let mut cache = CACHE.lock().unwrap();
    let table = cache.entry(key).or_default();
    let q = chi.modulus();
    while table.len() <= n {
        let m = table.len();
        let mut acc = ctx.zero();
        for (k, b) in table.iter().enumerate() {
            let c = Integer::from(binomial(m as u64 + 1, k as u64) * Integer::from(q).pow((m + 1 - k) as u32));
            acc += Complex::with_val(ctx.prec(), b * ctx.real(&c));
        }
        acc /= (m + 1) as u64;
        let rhs = power_sum_values(chi, m as u32, ctx);
        let next = (rhs - acc) / q;
        table.push(next);
    }
    table[n].clone()
}

/// Σ_{k=1}^{qm} χ(k) k^n by the closed form
/// (1/(n+1)) Σ_{k=0}^{n} C(n+1,k) (qm)^{n+1−k} B_{k,χ}.
pub fn character_power_sum(chi: &DirichletCharacter, n: usize, m: u64, ctx: &PrecisionContext) -> Complex {
    let qm = Integer::from(chi.modulus() * m);
    let mut acc = ctx.zero();
    for k in 0..=n {
        let c = Integer::from(binomial(n as u64 + 1, k as u64) * Integer::from((&qm).pow((n + 1 - k) as u32)));
        acc += gen_bernoulli(chi, k, ctx) * ctx.real(&c);
    }
    acc / (n as u64 + 1)
}

pub fn character_power_sum_brute(chi: &DirichletCharacter, n: usize, m: u64, ctx: &PrecisionContext) -> Complex {
    weighted_power_sum(chi, n as u32, chi.modulus() * m, ctx)
}
