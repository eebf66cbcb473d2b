use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{beta_even, beta_odd, eta_all, eta_odd, zeta_odd, zeta_odd_fast, EtaScheme, FastBase, ZetaVariant};
use crate::error::{Error, Result};
use crate::mp::{PrecisionContext, SeriesResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SchemeId {
    EtaThird,
    EtaQuarter,
    EtaSixth,
    ZetaDy,
    ZetaDyj,
    ZetaDh,
    ZetaM3,
    ZetaM4,
    ZetaM6,
    BetaOdd,
    BetaEven,
    EtaAll,
}

impl SchemeId {
    pub const ALL: [SchemeId; 12] = [
        SchemeId::EtaThird,
        SchemeId::EtaQuarter,
        SchemeId::EtaSixth,
        SchemeId::ZetaDy,
        SchemeId::ZetaDyj,
        SchemeId::ZetaDh,
        SchemeId::ZetaM3,
        SchemeId::ZetaM4,
        SchemeId::ZetaM6,
        SchemeId::BetaOdd,
        SchemeId::BetaEven,
        SchemeId::EtaAll,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SchemeId::EtaThird => "eta_third",
            SchemeId::EtaQuarter => "eta_quarter",
            SchemeId::EtaSixth => "eta_sixth",
            SchemeId::ZetaDy => "zeta_dy",
            SchemeId::ZetaDyj => "zeta_dyj",
            SchemeId::ZetaDh => "zeta_dh",
            SchemeId::ZetaM3 => "zeta_m3",
            SchemeId::ZetaM4 => "zeta_m4",
            SchemeId::ZetaM6 => "zeta_m6",
            SchemeId::BetaOdd => "beta_odd",
            SchemeId::BetaEven => "beta_even",
            SchemeId::EtaAll => "eta_all",
        }
    }

    /// Base m for the fast ζ schemes.
    pub fn fast_base(&self) -> Option<FastBase> {
        match self {
            SchemeId::ZetaM3 => Some(FastBase::M3),
            SchemeId::ZetaM4 => Some(FastBase::M4),
            SchemeId::ZetaM6 => Some(FastBase::M6),
            _ => None,
        }
    }

    /// True when the scheme computes ζ(2r+1).
    pub fn is_odd_zeta(&self) -> bool {
        matches!(
            self,
            SchemeId::ZetaDy | SchemeId::ZetaDyj | SchemeId::ZetaDh | SchemeId::ZetaM3 | SchemeId::ZetaM4 | SchemeId::ZetaM6
        )
    }
}

impl fmt::Display for SchemeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Accepts the full names and the short forms `third`, `dy`, `m6`, ….
impl FromStr for SchemeId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        let short = match key.as_str() {
            "third" => "eta_third",
            "quarter" => "eta_quarter",
            "sixth" => "eta_sixth",
            "dy" => "zeta_dy",
            "dyj" => "zeta_dyj",
            "dh" => "zeta_dh",
            "m3" => "zeta_m3",
            "m4" => "zeta_m4",
            "m6" => "zeta_m6",
            other => other,
        };
        SchemeId::ALL
            .into_iter()
            .find(|id| id.name() == short)
            .ok_or_else(|| Error::Parse(format!("unknown scheme '{s}'")))
    }
}

/// A recursion together with its order (r, or m for `eta_all`) and tail budget K.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesScheme {
    pub id: SchemeId,
    pub order: u32,
    pub budget: usize,
}

impl SeriesScheme {
    pub const DEFAULT_BUDGET: usize = 60;

    pub fn new(id: SchemeId, order: u32, budget: usize) -> Result<Self> {
        let min = match id {
            SchemeId::EtaAll => 2,
            SchemeId::BetaOdd => 0,
            SchemeId::ZetaM3 | SchemeId::ZetaM4 => 2,
            _ => 1,
        };
        if order < min {
            return Err(Error::Domain(format!("{id} needs order ≥ {min}, got {order}")));
        }
        Ok(SeriesScheme { id, order, budget })
    }

    /// The computed value: η(2r+1), ζ(2r+1), β(2r+1), β(2r) or η(m).
    pub fn evaluate(&self, ctx: &PrecisionContext) -> Result<SeriesResult> {
        let (r, k) = (self.order, self.budget);
        match self.id {
            SchemeId::EtaThird => eta_odd(r, EtaScheme::Third, k, ctx),
            SchemeId::EtaQuarter => eta_odd(r, EtaScheme::Quarter, k, ctx),
            SchemeId::EtaSixth => eta_odd(r, EtaScheme::Sixth, k, ctx),
            SchemeId::ZetaDy => zeta_odd(r, ZetaVariant::Dy, k, ctx),
            SchemeId::ZetaDyj => zeta_odd(r, ZetaVariant::Dyj, k, ctx),
            SchemeId::ZetaDh => zeta_odd(r, ZetaVariant::Dh, k, ctx),
            SchemeId::ZetaM3 => zeta_odd_fast(r, FastBase::M3, k, ctx),
            SchemeId::ZetaM4 => zeta_odd_fast(r, FastBase::M4, k, ctx),
            SchemeId::ZetaM6 => zeta_odd_fast(r, FastBase::M6, k, ctx),
            SchemeId::BetaOdd => Ok(SeriesResult::exact(beta_odd(r, ctx), r as usize)),
            SchemeId::BetaEven => beta_even(r, k, ctx),
            SchemeId::EtaAll => eta_all(r, k, ctx),
        }
    }
}
