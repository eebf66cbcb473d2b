use super::character::{CharValue, DirichletCharacter};
use crate::error::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn euler_phi(q: u64) -> u64 {
    factor(q).iter().map(|&(p, e)| (p - 1) * p.pow(e - 1)).product()
}

fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

fn primitive_root_mod_p(p: u64) -> u64 {
    let primes: Vec<u64> = factor(p - 1).into_iter().map(|(r, _)| r).collect();
    (2..p)
        .find(|&g| primes.iter().all(|&r| pow_mod(g, (p - 1) / r, p) != 1))
        .unwrap_or(1)
}

/// Cyclic factors of (ℤ/p^e)^× with a discrete-log table: `logs[r]` holds
/// the exponent vector of residue r (empty for non-units).
struct Local {
    modulus: u64,
    orders: Vec<u64>,
    logs: Vec<Vec<u64>>,
}

impl Local {
    fn new(p: u64, e: u32) -> Local {
        let modulus = p.pow(e);
        let mut logs = vec![Vec::new(); modulus as usize];
        if p == 2 && e >= 3 {
            let half = modulus / 4;
            let mut five = 1;
            for b in 0..half {
                logs[five as usize] = vec![0, b];
                logs[(modulus - five) as usize] = vec![1, b];
                five = five * 5 % modulus;
            }
            return Local { modulus, orders: vec![2, half], logs };
        }
        let (g, order) = match (p, e) {
            (2, 1) => (1, 1),
            (2, _) => (3, 2),
            _ => {
                let g = primitive_root_mod_p(p);
                // g stays primitive mod p^e unless g^{p−1} ≡ 1 mod p².
                let g = if e > 1 && pow_mod(g, p - 1, p * p) == 1 { g + p } else { g };
                (g, (p - 1) * p.pow(e - 1))
            }
        };
        let mut x = 1 % modulus;
        for k in 0..order {
            logs[x as usize] = vec![k];
            x = x * g % modulus;
        }
        if modulus == 1 {
            logs[0] = vec![0];
        }
        Local { modulus, orders: vec![order], logs }
    }
}

/// All φ(q) characters mod q, principal first.
///
/// Characters are indexed in mixed radix over the cyclic factors of the unit
/// group, the first factor varying fastest.
pub fn enumerate_characters(q: u64) -> Result<Vec<DirichletCharacter>> {
    if q == 0 || q > 10_000 {
        return Err(Error::Domain(format!("modulus must satisfy 1 ≤ q ≤ 10^4, got {q}")));
    }
    let locals: Vec<Local> = factor(q).into_iter().map(|(p, e)| Local::new(p, e)).collect();
    let orders: Vec<u64> = locals.iter().flat_map(|l| l.orders.iter().copied()).collect();

    // Exponent vector of every residue on the unit group.
    let logs: Vec<Option<Vec<u64>>> = (0..q)
        .map(|n| {
            if gcd(n, q) != 1 {
                return None;
            }
            Some(locals.iter().flat_map(|l| l.logs[(n % l.modulus) as usize].clone()).collect())
        })
        .collect();

    let count: u64 = orders.iter().product();
    let mut out = Vec::with_capacity(count as usize);
    for index in 0..count {
        let mut c = Vec::with_capacity(orders.len());
        let mut rest = index;
        for &o in &orders {
            c.push(rest % o);
            rest /= o;
        }
        let table = logs
            .iter()
            .map(|l| match l {
                None => CharValue::Zero,
                Some(l) => l
                    .iter()
                    .zip(&c)
                    .zip(&orders)
                    .fold(CharValue::ONE, |acc, ((&x, &ci), &o)| acc.mul(CharValue::root(x * ci % o, o))),
            })
            .collect();
        out.push(DirichletCharacter::from_table_unchecked(q, table));
    }
    Ok(out)
}
