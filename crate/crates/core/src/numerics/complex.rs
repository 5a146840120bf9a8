use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use rug::Float;

use super::{format_sci, Prec, Real};

/// Arbitrary-precision complex number built on two MPFR floats.
///
/// Results take the larger precision of their operands. All multivalued
/// functions (`ln`, `pow`, `sqrt`) use the principal branch.
#[derive(Clone, Debug, PartialEq)]
pub struct Complex {
    pub re: Real,
    pub im: Real,
}

impl Complex {
    pub fn new(re: Real, im: Real) -> Self {
        Complex { re, im }
    }

    pub fn from_real(re: Real) -> Self {
        let im = Float::new(re.prec());
        Complex { re, im }
    }

    pub fn zero(prec: &Prec) -> Self {
        Complex::from_real(prec.zero())
    }

    pub fn one(prec: &Prec) -> Self {
        Complex::from_real(prec.one())
    }

    pub fn i(prec: &Prec) -> Self {
        Complex::new(prec.zero(), prec.one())
    }

    pub fn from_f64(prec: &Prec, re: f64, im: f64) -> Self {
        Complex::new(prec.real(re), prec.real(im))
    }

    pub fn from_i64(prec: &Prec, re: i64) -> Self {
        Complex::from_real(prec.real(re))
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Complex {
        Complex::new(self.re.clone(), Float::with_val(self.im.prec(), -&self.im))
    }

    /// `|z|`.
    pub fn abs(&self) -> Real {
        Float::with_val(self.prec(), self.re.hypot_ref(&self.im))
    }

    /// `|z|` as an `f64`; used only for tail-bound bookkeeping.
    pub fn abs_f64(&self) -> f64 {
        self.re.to_f64().hypot(self.im.to_f64())
    }

    pub fn scale(&self, factor: &Real) -> Complex {
        let p = self.prec();
        Complex::new(
            Float::with_val(p, &self.re * factor),
            Float::with_val(p, &self.im * factor),
        )
    }

    pub fn add_real(&self, x: &Real) -> Complex {
        Complex::new(Float::with_val(self.prec(), &self.re + x), self.im.clone())
    }

    /// `i * z`.
    pub fn mul_i(&self) -> Complex {
        Complex::new(Float::with_val(self.prec(), -&self.im), self.re.clone())
    }

    pub fn recip(&self) -> Complex {
        let p = self.prec();
        let denom = Float::with_val(p, self.re.square_ref()) + Float::with_val(p, self.im.square_ref());
        Complex::new(
            Float::with_val(p, &self.re / &denom),
            Float::with_val(p, -&self.im) / &denom,
        )
    }

    pub fn exp(&self) -> Complex {
        let p = self.prec();
        let modulus = Float::with_val(p, self.re.exp_ref());
        let (sin, cos) = Float::with_val(p, &self.im).sin_cos(Float::new(p));
        Complex::new(Float::with_val(p, &modulus * &cos), modulus * sin)
    }

    /// Principal logarithm; the imaginary part lies in `(-pi, pi]`.
    pub fn ln(&self) -> Complex {
        let p = self.prec();
        let arg = Float::with_val(p, &self.im).atan2(&self.re);
        Complex::new(self.abs().ln(), arg)
    }

    /// Principal power `exp(w * ln z)`; `0^w = 0` for every `w` with positive real part.
    pub fn pow(&self, w: &Complex) -> Complex {
        if self.is_zero() {
            let p = self.prec().max(w.prec());
            return if w.is_zero() {
                Complex::from_real(Float::with_val(p, 1))
            } else {
                Complex::from_real(Float::new(p))
            };
        }
        (w * &self.ln()).exp()
    }

    pub fn pow_real(&self, x: &Real) -> Complex {
        self.pow(&Complex::from_real(x.clone()))
    }

    /// Integer power by repeated squaring; exact sign handling for negative exponents.
    pub fn powi(&self, n: i64) -> Complex {
        let mut result = Complex::from_real(Float::with_val(self.prec(), 1));
        let mut base = self.clone();
        let mut e = n.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        if n < 0 {
            result.recip()
        } else {
            result
        }
    }

    pub fn sqrt(&self) -> Complex {
        if self.is_zero() {
            return self.clone();
        }
        let p = self.prec();
        let r = self.abs();
        // sqrt((r + |re|)/2) is computed without cancellation, then the other
        // component follows from im / (2 * that).
        let t = Float::with_val(p, self.re.abs_ref()) + &r;
        let t = t / 2u32;
        let t = t.sqrt();
        let other = Float::with_val(p, &self.im / &t) / 2u32;
        if self.re >= 0 {
            Complex::new(t, other)
        } else if self.im >= 0 {
            Complex::new(other, t)
        } else {
            Complex::new(Float::with_val(p, -&other), Float::with_val(p, -&t))
        }
    }

    /// Scientific decimal rendering of both parts with `digits` significant digits.
    pub fn to_decimal_pair(&self, digits: usize) -> (String, String) {
        (format_sci(&self.re, digits), format_sci(&self.im, digits))
    }

    /// Returns the real part after checking the imaginary part is below `tol` in magnitude.
    pub fn real_part_if(&self, tol: &Real) -> Option<Real> {
        if self.im.clone().abs() <= *tol {
            Some(self.re.clone())
        } else {
            None
        }
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = self.to_decimal_pair(20);
        write!(f, "({re}, {im})")
    }
}

impl From<Real> for Complex {
    fn from(re: Real) -> Self {
        Complex::from_real(re)
    }
}

impl<'a> Add<&'a Complex> for &'a Complex {
    type Output = Complex;
    fn add(self, rhs: &'a Complex) -> Complex {
        let p = self.prec().max(rhs.prec());
        Complex::new(
            Float::with_val(p, &self.re + &rhs.re),
            Float::with_val(p, &self.im + &rhs.im),
        )
    }
}

impl<'a> Sub<&'a Complex> for &'a Complex {
    type Output = Complex;
    fn sub(self, rhs: &'a Complex) -> Complex {
        let p = self.prec().max(rhs.prec());
        Complex::new(
            Float::with_val(p, &self.re - &rhs.re),
            Float::with_val(p, &self.im - &rhs.im),
        )
    }
}

impl<'a> Mul<&'a Complex> for &'a Complex {
    type Output = Complex;
    fn mul(self, rhs: &'a Complex) -> Complex {
        let p = self.prec().max(rhs.prec());
        if self.is_real() && rhs.is_real() {
            return Complex::new(Float::with_val(p, &self.re * &rhs.re), Float::new(p));
        }
        let ac = Float::with_val(p, &self.re * &rhs.re);
        let bd = Float::with_val(p, &self.im * &rhs.im);
        let ad = Float::with_val(p, &self.re * &rhs.im);
        let bc = Float::with_val(p, &self.im * &rhs.re);
        Complex::new(ac - bd, ad + bc)
    }
}

impl<'a> Div<&'a Complex> for &'a Complex {
    type Output = Complex;
    fn div(self, rhs: &'a Complex) -> Complex {
        if self.is_real() && rhs.is_real() {
            let p = self.prec().max(rhs.prec());
            return Complex::new(Float::with_val(p, &self.re / &rhs.re), Float::new(p));
        }
        self * &rhs.recip()
    }
}

impl Neg for &Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        let p = self.prec();
        Complex::new(Float::with_val(p, -&self.re), Float::with_val(p, -&self.im))
    }
}

impl Neg for Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex::new(-self.re, -self.im)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<Complex> for Complex {
            type Output = Complex;
            fn $method(self, rhs: Complex) -> Complex {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Complex> for Complex {
            type Output = Complex;
            fn $method(self, rhs: &'a Complex) -> Complex {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<Complex> for &'a Complex {
            type Output = Complex;
            fn $method(self, rhs: Complex) -> Complex {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&Complex> for Complex {
    fn add_assign(&mut self, rhs: &Complex) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&Complex> for Complex {
    fn sub_assign(&mut self, rhs: &Complex) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&Complex> for Complex {
    fn mul_assign(&mut self, rhs: &Complex) {
        *self = &*self * rhs;
    }
}
