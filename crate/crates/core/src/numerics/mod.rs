//! Arbitrary-precision arithmetic shared by every other module.
//!
//! Reals are MPFR floats ([`rug::Float`]); [`Complex`] is a pair of them.
//! There is no ambient precision: every routine takes a [`Prec`] and creates
//! its values at `prec.bits()`.

mod complex;
mod decimal;
pub(crate) mod series;
mod special;

pub use complex::Complex;
pub use decimal::{format_decimal, format_sci, parse_real};
pub use series::{
    prod_infinite, sum_bilateral, sum_series, Product, TailPolicy, DEFAULT_MAX_TERMS,
};
pub use special::{agm, gamma};

use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;

use crate::error::{Error, Result};

/// Arbitrary-precision real.
pub type Real = Float;

const LOG2_10: f64 = std::f64::consts::LOG2_10;

/// Requested decimal accuracy plus extra working digits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Prec {
    digits: u32,
    guard: u32,
}

impl Prec {
    pub const MIN_DIGITS: u32 = 10;
    pub const MIN_GUARD: u32 = 15;

    /// `digits` of target accuracy with the default guard `max(15, digits / 10)`.
    pub fn new(digits: u32) -> Result<Self> {
        Self::with_guard(digits, Self::default_guard(digits))
    }

    pub fn with_guard(digits: u32, guard: u32) -> Result<Self> {
        if digits < Self::MIN_DIGITS {
            return Err(Error::domain(format!(
                "precision of {digits} digits is below the minimum of {}",
                Self::MIN_DIGITS
            )));
        }
        if guard < Self::MIN_GUARD {
            return Err(Error::domain(format!(
                "{guard} guard digits is below the minimum of {}",
                Self::MIN_GUARD
            )));
        }
        Ok(Prec { digits, guard })
    }

    pub fn default_guard(digits: u32) -> u32 {
        Self::MIN_GUARD.max(digits / 10)
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn guard(&self) -> u32 {
        self.guard
    }

    pub fn working_digits(&self) -> u32 {
        self.digits + self.guard
    }

    /// Binary precision used for every intermediate value.
    pub fn bits(&self) -> u32 {
        (f64::from(self.working_digits()) * LOG2_10).ceil() as u32 + 8
    }

    /// Same guard policy, `extra` more target digits.
    pub fn raised(&self, extra: u32) -> Prec {
        let digits = self.digits + extra;
        Prec {
            digits,
            guard: self.guard.max(Self::default_guard(digits)),
        }
    }

    pub fn real<T>(&self, value: T) -> Real
    where
        Float: rug::Assign<T>,
    {
        Float::with_val(self.bits(), value)
    }

    pub fn zero(&self) -> Real {
        Float::new(self.bits())
    }

    pub fn one(&self) -> Real {
        self.real(1)
    }

    /// `p / q` rounded once.
    pub fn ratio(&self, p: i64, q: i64) -> Real {
        let mut x = self.real(p);
        x /= q;
        x
    }

    pub fn pi(&self) -> Real {
        Float::with_val(self.bits(), Constant::Pi)
    }

    /// `10^exponent` at working precision.
    pub fn pow10(&self, exponent: i32) -> Real {
        self.real(10).pow(exponent)
    }

    /// Working epsilon `10^-(digits + guard)`; tail bounds are closed below it.
    pub fn eps(&self) -> Real {
        self.pow10(-(self.working_digits() as i32))
    }

    /// Target accuracy `10^-digits`.
    pub fn target_eps(&self) -> Real {
        self.pow10(-(self.digits as i32))
    }
}

/// `|x|` as an `f64` in log10 space; `-inf` for zero.
pub fn log10_abs(x: &Real) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let ln = Float::with_val(64, x.abs_ref()).ln();
    ln.to_f64() / std::f64::consts::LN_10
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn guard_defaults() {
        assert_eq!(Prec::new(50).unwrap().guard(), 15);
        assert_eq!(Prec::new(300).unwrap().guard(), 30);
        assert!(Prec::new(9).is_err());
        assert!(Prec::with_guard(40, 10).is_err());
    }

    #[test]
    fn bits_cover_working_digits() {
        let p = Prec::new(100).unwrap();
        assert!(f64::from(p.bits()) >= 115.0 * LOG2_10);
        assert_eq!(p.raised(20).digits(), 120);
    }

    #[test]
    fn eps_values() {
        let p = Prec::new(20).unwrap();
        assert!((log10_abs(&p.eps()) + 35.0).abs() < 1e-9);
        assert!((log10_abs(&p.target_eps()) + 20.0).abs() < 1e-9);
        assert_eq!(log10_abs(&p.zero()), f64::NEG_INFINITY);
    }
}
