use rug::ops::Pow;
use rug::{Assign, Complex, Float};
use serde::Serialize;

use crate::error::{Error, Result};

const LOG2_10: f64 = std::f64::consts::LOG2_10;

/// Decimal working precision. Immutable once built.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PrecisionContext {
    digits: u32,
    guard_digits: u32,
}

impl Default for PrecisionContext {
    fn default() -> Self {
        PrecisionContext { digits: 60, guard_digits: 10 }
    }
}

impl PrecisionContext {
    pub const DEFAULT_GUARD: u32 = 10;

    pub fn new(digits: u32) -> Result<Self> {
        Self::with_guard(digits, Self::DEFAULT_GUARD)
    }

    pub fn with_guard(digits: u32, guard_digits: u32) -> Result<Self> {
        if digits < 10 {
            return Err(Error::Precision(digits));
        }
        Ok(PrecisionContext { digits, guard_digits })
    }

    /// Reported digits.
    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn guard_digits(&self) -> u32 {
        self.guard_digits
    }

    pub fn working_digits(&self) -> u32 {
        self.digits + self.guard_digits
    }

    /// Binary precision in bits for the working digits.
    pub fn prec(&self) -> u32 {
        (self.working_digits() as f64 * LOG2_10).ceil() as u32 + 2
    }

    pub fn real<T>(&self, v: T) -> Float
    where
        Float: Assign<T>,
    {
        Float::with_val(self.prec(), v)
    }

    pub fn complex<T>(&self, v: T) -> Complex
    where
        Complex: Assign<T>,
    {
        Complex::with_val(self.prec(), v)
    }

    pub fn zero(&self) -> Complex {
        Complex::new(self.prec())
    }

    /// 10^(-working digits): relative size below which a term is negligible.
    pub fn epsilon(&self) -> Float {
        let ten = self.real(10);
        ten.pow(-(self.working_digits() as i32))
    }

    /// 10^(-digits): the resolution of reported values.
    pub fn report_epsilon(&self) -> Float {
        let ten = self.real(10);
        ten.pow(-(self.digits as i32))
    }
}
