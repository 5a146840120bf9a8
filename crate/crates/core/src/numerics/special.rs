use rug::Float;

use super::{Prec, Real};
use crate::error::{Error, Result};

/// Arithmetic-geometric mean of two positive reals.
pub fn agm(a: &Real, b: &Real, prec: &Prec) -> Result<Real> {
    if *a <= 0 || *b <= 0 {
        return Err(Error::domain("agm requires positive arguments"));
    }
    let bits = prec.bits();
    let eps = prec.eps();
    let mut x = Float::with_val(bits, a);
    let mut y = Float::with_val(bits, b);
    // quadratic convergence: a few dozen steps cover any sane precision
    for _ in 0..200 {
        let diff = Float::with_val(bits, &x - &y).abs();
        if diff <= Float::with_val(bits, &eps * &x) {
            return Ok(x);
        }
        let mean = Float::with_val(bits, &x + &y) / 2u32;
        y = Float::with_val(bits, &x * &y).sqrt();
        x = mean;
    }
    Err(Error::no_convergence("agm", 200))
}

/// Euler's gamma function for positive real arguments, evaluated by MPFR.
pub fn gamma(x: &Real, prec: &Prec) -> Result<Real> {
    if *x <= 0 {
        return Err(Error::domain("gamma is only provided for x > 0"));
    }
    Ok(Float::with_val(prec.bits(), x.gamma_ref()))
}
