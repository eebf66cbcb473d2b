use rug::{Complex, Float};
use serde::ser::{SerializeMap, SerializeStruct, Serializer};
use serde::Serialize;

use super::enumerate::gcd;
use crate::error::{Error, Result};
use crate::mp::{const_pi, PrecisionContext};

/// χ(n) as 0 or e^{2πi·j/order}, always reduced (gcd(j, order) = 1, or
/// j = 0 with order 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CharValue {
    Zero,
    Root { j: u64, order: u64 },
}

impl CharValue {
    pub const ONE: CharValue = CharValue::Root { j: 0, order: 1 };

    pub fn root(j: u64, order: u64) -> CharValue {
        let j = j % order;
        let g = gcd(j, order);
        CharValue::Root { j: j / g, order: order / g }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, CharValue::Zero)
    }

    pub fn mul(self, other: CharValue) -> CharValue {
        match (self, other) {
            (CharValue::Root { j: a, order: p }, CharValue::Root { j: b, order: r }) => {
                let l = p / gcd(p, r) * r;
                CharValue::root(a * (l / p) + b * (l / r), l)
            }
            _ => CharValue::Zero,
        }
    }

    pub fn conj(self) -> CharValue {
        match self {
            CharValue::Root { j, order } => CharValue::root(order - j, order),
            CharValue::Zero => CharValue::Zero,
        }
    }

    /// Exact for orders 1, 2 and 4.
    pub fn to_complex(self, ctx: &PrecisionContext) -> Complex {
        match self {
            CharValue::Zero => ctx.zero(),
            CharValue::Root { j, order } => match (4 * j) / order {
                _ if order == 1 => ctx.complex(1),
                _ if order == 2 => ctx.complex(-1),
                _ if order == 4 && j == 1 => ctx.complex((0, 1)),
                _ if order == 4 => ctx.complex((0, -1)),
                _ => {
                    let angle: Float = const_pi(ctx) * 2u32 * j / order;
                    let (s, c) = angle.sin_cos(ctx.real(0));
                    ctx.complex((c, s))
                }
            },
        }
    }
}

impl Serialize for CharValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        match self {
            CharValue::Zero => map.serialize_entry("zero", &true)?,
            CharValue::Root { j, order } => {
                map.serialize_entry("j", j)?;
                map.serialize_entry("order", order)?;
            }
        }
        map.end()
    }
}

/// A Dirichlet character mod q; `table[n]` holds χ(n) for 0 ≤ n < q.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DirichletCharacter {
    q: u64,
    table: Vec<CharValue>,
}

impl Serialize for DirichletCharacter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("DirichletCharacter", 2)?;
        st.serialize_field("q", &self.q)?;
        st.serialize_field("values", &self.table)?;
        st.end()
    }
}

impl DirichletCharacter {
    /// Validates periodic support, χ(1) = 1 and complete multiplicativity.
    pub fn from_table(q: u64, table: Vec<CharValue>) -> Result<Self> {
        let bad = |why: &str| Err(Error::Domain(format!("not a Dirichlet character mod {q}: {why}")));
        if q == 0 || table.len() as u64 != q {
            return bad("table length must equal the modulus");
        }
        let chi = DirichletCharacter { q, table };
        if chi.value(1) != CharValue::ONE {
            return bad("χ(1) ≠ 1");
        }
        for n in 0..q {
            if chi.value(n).is_zero() != (gcd(n, q) != 1) {
                return bad("χ(n) must vanish exactly off the units");
            }
        }
        if !chi.is_multiplicative() {
            return bad("not completely multiplicative");
        }
        Ok(chi)
    }

    pub(crate) fn from_table_unchecked(q: u64, table: Vec<CharValue>) -> Self {
        DirichletCharacter { q, table }
    }

    /// The principal character mod q.
    pub fn principal(q: u64) -> Self {
        let table = (0..q)
            .map(|n| if gcd(n, q) == 1 { CharValue::ONE } else { CharValue::Zero })
            .collect();
        DirichletCharacter { q, table }
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    pub fn table(&self) -> &[CharValue] {
        &self.table
    }

    pub fn value(&self, n: u64) -> CharValue {
        self.table[(n % self.q) as usize]
    }

    pub fn value_at(&self, n: i64) -> CharValue {
        self.value(n.rem_euclid(self.q as i64) as u64)
    }

    pub fn is_principal(&self) -> bool {
        self.table.iter().all(|v| v.is_zero() || *v == CharValue::ONE)
    }

    /// χ(−1) = 1.
    pub fn is_even(&self) -> bool {
        self.value_at(-1) == CharValue::ONE
    }

    pub fn is_multiplicative(&self) -> bool {
        (1..self.q).all(|m| (1..self.q).all(|n| self.value(m * n) == self.value(m).mul(self.value(n))))
    }

    /// χ(0..q) as complex numbers.
    pub fn materialize(&self, ctx: &PrecisionContext) -> Vec<Complex> {
        self.table.iter().map(|v| v.to_complex(ctx)).collect()
    }

    /// Least common order of the character values.
    pub fn order(&self) -> u64 {
        self.table.iter().fold(1, |l, v| match v {
            CharValue::Root { order, .. } => l / gcd(l, *order) * order,
            CharValue::Zero => l,
        })
    }
}
