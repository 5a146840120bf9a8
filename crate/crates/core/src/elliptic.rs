//! Complete elliptic integral `K`, nomes `q = e^{-pi sqrt r}`, the modulus
//! attached to a nome, singular moduli and the descending Landen step.

use rug::ops::Pow;
use rug::{Float, Rational};

use crate::error::{Error, Result};
use crate::numerics::{agm, Complex, Prec, Real};
use crate::qfunctions::{euler_f, nome_pow_real, weber_phi};

/// A nome `q` with `|q| < 1`, optionally tagged with the `r` it came from.
#[derive(Clone, Debug, PartialEq)]
pub struct Nome {
    pub q: Complex,
    pub r: Option<Rational>,
}

impl Nome {
    pub fn new(q: Complex) -> Result<Self> {
        if q.abs() >= 1 {
            return Err(Error::domain("nome must satisfy |q| < 1"));
        }
        Ok(Nome { q, r: None })
    }

    pub fn from_real(q: Real) -> Result<Self> {
        Self::new(Complex::from_real(q))
    }

    /// `q` as a real in `(0, 1)`, if it is one.
    pub fn real(&self) -> Option<&Real> {
        if self.q.is_real() && self.q.re > 0 {
            Some(&self.q.re)
        } else {
            None
        }
    }

    fn require_real(&self, what: &str) -> Result<&Real> {
        self.real()
            .ok_or_else(|| Error::domain(format!("{what} needs a real nome in (0, 1)")))
    }
}

/// `k`, `k' = sqrt(1 - k^2)` and the complete integrals `K(k)`, `K(k')`.
#[derive(Clone, Debug, PartialEq)]
pub struct Modulus {
    pub k: Real,
    pub k_prime: Real,
    pub big_k: Real,
    pub big_k_prime: Real,
}

impl Modulus {
    /// `K(k') / K(k)`, which equals `sqrt r` for the modulus of `e^{-pi sqrt r}`.
    pub fn period_ratio(&self) -> Real {
        Float::with_val(self.big_k.prec(), &self.big_k_prime / &self.big_k)
    }
}

/// `q = exp(-pi sqrt r)` for a positive rational `r`.
pub fn nome_from_r(r: &Rational, prec: &Prec) -> Result<Nome> {
    if *r <= 0 {
        return Err(Error::domain("r must be positive"));
    }
    let sqrt_r = prec.real(r).sqrt();
    let q = Float::with_val(prec.bits(), -prec.pi() * sqrt_r).exp();
    Ok(Nome {
        q: Complex::from_real(q),
        r: Some(r.clone()),
    })
}

/// `K(k) = pi / (2 agm(1, sqrt(1 - k^2)))` for `0 <= k < 1`.
pub fn elliptic_k(k: &Real, prec: &Prec) -> Result<Real> {
    if *k < 0 || *k >= 1 {
        return Err(Error::domain("K(k) needs 0 <= k < 1"));
    }
    let k_prime = Float::with_val(prec.bits(), 1 - Float::with_val(prec.bits(), k.square_ref())).sqrt();
    let m = agm(&prec.one(), &k_prime, prec)?;
    Ok(prec.pi() / (m * 2u32))
}

/// Modulus of a real nome from the Weber and Euler products:
/// `k = 8 q^{1/2} phi^12 / (1 + sqrt(1 + 64 q phi^24))` and
/// `K = f^2 pi sqrt(1 + sqrt(1 + 64 q phi^24)) / (2 sqrt 2 phi^2)`,
/// where `f = (q; q)_inf`, `phi = (-q; q)_inf`.
pub fn modulus_from_nome(nome: &Nome, prec: &Prec) -> Result<Modulus> {
    let q = nome.require_real("modulus_from_nome")?;
    let bits = prec.bits();
    let qc = Complex::from_real(q.clone());
    let phi = weber_phi(&qc, prec)?.re;
    let f = euler_f(&qc, prec)?.re;

    let phi12 = Float::with_val(bits, (&phi).pow(12u32));
    let phi24 = Float::with_val(bits, phi12.square_ref());
    let s = (Float::with_val(bits, q * phi24) * 64u32 + 1u32).sqrt();
    let one_plus_s = Float::with_val(bits, &s + 1u32);
    let sqrt_q = nome_pow_real(&qc, &prec.ratio(1, 2)).re;

    let k = Float::with_val(bits, sqrt_q * &phi12) * 8u32 / &one_plus_s;
    let sqrt2 = prec.real(2).sqrt();
    let big_k = Float::with_val(bits, f.square_ref()) * prec.pi() * one_plus_s.sqrt()
        / (sqrt2 * 2u32 * Float::with_val(bits, phi.square_ref()));

    let k_prime = Float::with_val(bits, 1 - Float::with_val(bits, k.square_ref())).sqrt();
    let big_k_prime = elliptic_k(&k_prime, prec)?;
    Ok(Modulus {
        k,
        k_prime,
        big_k,
        big_k_prime,
    })
}

/// Modulus of `e^{-pi sqrt r}`, asserting `K(k')/K(k) = sqrt r` before returning.
pub fn singular_modulus_full(r: &Rational, prec: &Prec) -> Result<Modulus> {
    let nome = nome_from_r(r, prec)?;
    let modulus = modulus_from_nome(&nome, prec)?;
    let sqrt_r = prec.real(r).sqrt();
    let residual = Float::with_val(prec.bits(), modulus.period_ratio() - sqrt_r).abs();
    let tol = prec.pow10(-(prec.digits() as i32) + (prec.guard() / 2) as i32);
    if residual >= tol {
        return Err(Error::Verification(format!(
            "K(k')/K(k) misses sqrt({r}) by {}",
            residual.to_f64()
        )));
    }
    Ok(modulus)
}

/// The singular modulus `k_r`: the `k` in `(0, 1)` with `K(k')/K(k) = sqrt r`.
pub fn singular_modulus(r: &Rational, prec: &Prec) -> Result<Real> {
    Ok(singular_modulus_full(r, prec)?.k)
}

/// One descending Landen step from `k11`: returns `(k12, k21, k22)` with
/// `k12 = sqrt(1 - k11^2)`, `k21 = (2 - k11^2 - 2 k12) / k11^2`, `k22 = sqrt(1 - k21^2)`.
///
/// `k21` is evaluated as `k11^2 / (1 + k12)^2` and `k22` as
/// `2 sqrt(k12) / (1 + k12)`, which are the same quantities without the
/// cancellation of the textbook forms for small `k11`.
pub fn landen_descend(k11: &Real, prec: &Prec) -> Result<(Real, Real, Real)> {
    if *k11 <= 0 || *k11 >= 1 {
        return Err(Error::domain("Landen descent needs 0 < k < 1"));
    }
    let bits = prec.bits();
    let k_sq = Float::with_val(bits, k11.square_ref());
    let k12 = Float::with_val(bits, 1 - &k_sq).sqrt();
    let one_plus = Float::with_val(bits, &k12 + 1u32);
    let k21 = k_sq / Float::with_val(bits, one_plus.square_ref());
    let k22 = Float::with_val(bits, k12.sqrt_ref()) * 2u32 / &one_plus;
    Ok((k12, k21, k22))
}
