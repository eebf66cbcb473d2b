use rug::{Complex, Rational};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::dirichlet::{enumerate_characters, DirichletCharacter};
use crate::error::{Error, Result};
use crate::mp::{format_complex, PrecisionContext};

/// Parameters of a registered identity; which fields are needed depends on
/// the identity.
#[derive(Clone, Debug, Default)]
pub struct IdentityParams {
    pub r: Option<u32>,
    pub m: Option<u32>,
    pub s: Option<Complex>,
    pub a: Option<Rational>,
    /// Character modulus and index into [`enumerate_characters`].
    pub q: Option<u64>,
    pub char_index: Option<usize>,
}

impl IdentityParams {
    pub fn with_r(r: u32) -> Self {
        IdentityParams { r: Some(r), ..Default::default() }
    }

    pub fn with_m(m: u32) -> Self {
        IdentityParams { m: Some(m), ..Default::default() }
    }

    pub fn with_s(s: Complex) -> Self {
        IdentityParams { s: Some(s), ..Default::default() }
    }

    pub fn a(mut self, a: Rational) -> Self {
        self.a = Some(a);
        self
    }

    pub fn chi(mut self, q: u64, index: usize) -> Self {
        self.q = Some(q);
        self.char_index = Some(index);
        self
    }

    pub(crate) fn need_r(&self, min: u32) -> Result<u32> {
        let r = self.r.ok_or_else(|| Error::InvalidParams { id: String::new(), reason: "missing r".into() })?;
        if r < min {
            return Err(Error::InvalidParams { id: String::new(), reason: format!("needs r ≥ {min}, got {r}") });
        }
        Ok(r)
    }

    pub(crate) fn need_m(&self, min: u32) -> Result<u32> {
        let m = self.m.or(self.r).ok_or_else(|| Error::InvalidParams { id: String::new(), reason: "missing m".into() })?;
        if m < min {
            return Err(Error::InvalidParams { id: String::new(), reason: format!("needs m ≥ {min}, got {m}") });
        }
        Ok(m)
    }

    /// s with Re(s) > `min_re` (no constraint when `None`).
    pub(crate) fn need_s(&self, min_re: Option<f64>, ctx: &PrecisionContext) -> Result<Complex> {
        let s = self.s.as_ref().ok_or_else(|| Error::InvalidParams { id: String::new(), reason: "missing s".into() })?;
        if let Some(min) = min_re {
            if s.real().to_f64() <= min {
                return Err(Error::InvalidParams {
                    id: String::new(),
                    reason: format!("needs Re(s) > {min}, got {}", s.real().to_f64()),
                });
            }
        }
        Ok(ctx.complex(s))
    }

    pub(crate) fn need_a(&self) -> Result<Rational> {
        let a = self.a.clone().ok_or_else(|| Error::InvalidParams { id: String::new(), reason: "missing a".into() })?;
        if a <= 0 {
            return Err(Error::InvalidParams { id: String::new(), reason: format!("needs a > 0, got {a}") });
        }
        Ok(a)
    }

    pub(crate) fn need_chi(&self) -> Result<DirichletCharacter> {
        let (Some(q), Some(i)) = (self.q, self.char_index) else {
            return Err(Error::InvalidParams { id: String::new(), reason: "missing character (q, index)".into() });
        };
        let chars = enumerate_characters(q)?;
        chars.get(i).cloned().ok_or_else(|| Error::InvalidParams {
            id: String::new(),
            reason: format!("modulus {q} has {} characters, index {i} out of range", chars.len()),
        })
    }
}

impl Serialize for IdentityParams {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(None)?;
        if let Some(r) = self.r {
            map.serialize_entry("r", &r)?;
        }
        if let Some(m) = self.m {
            map.serialize_entry("m", &m)?;
        }
        if let Some(s) = &self.s {
            let digits = ((s.prec().0 as f64) / std::f64::consts::LOG2_10).floor() as u32;
            map.serialize_entry("s", &format_complex(s, digits.clamp(1, 20)))?;
        }
        if let Some(a) = &self.a {
            map.serialize_entry("a", &a.to_string())?;
        }
        if let Some(q) = self.q {
            map.serialize_entry("q", &q)?;
        }
        if let Some(i) = self.char_index {
            map.serialize_entry("char_index", &i)?;
        }
        map.end()
    }
}
