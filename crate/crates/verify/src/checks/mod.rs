//! The built-in registry. Each check samples its parameters, evaluates both
//! sides through independent routes and records the scaled gap.

mod algebraic;
mod elliptic;
mod fractions;
mod hypergeometric;
mod ramanujan;

use ellq_core::elliptic::{elliptic_k, landen_descend, modulus_from_nome, nome_from_r};
use ellq_core::qfunctions::{theta2, theta3};
use ellq_core::{Complex, Prec, Real, Result};
use rug::ops::Pow;
use rug::{Float, Rational};

use crate::check::IdentityCheck;

/// Every built-in check, in registration order.
pub fn register_builtin_checks() -> Vec<IdentityCheck> {
    let mut all = Vec::new();
    all.extend(elliptic::checks());
    all.extend(fractions::checks());
    all.extend(ramanujan::checks());
    all.extend(hypergeometric::checks());
    all.extend(algebraic::checks());
    all
}

pub(crate) fn cx(x: Real) -> Complex {
    Complex::from_real(x)
}

pub(crate) fn real(x: &Rational, prec: &Prec) -> Real {
    prec.real(x)
}

/// `e^{-pi sqrt r}`.
pub(crate) fn nome(r: &Rational, prec: &Prec) -> Real {
    let root = prec.real(r).sqrt();
    Float::with_val(prec.bits(), -prec.pi() * root).exp()
}

/// `x^{n/d}` for real `x > 0`.
pub(crate) fn rpow(x: &Real, n: i64, d: i64, prec: &Prec) -> Real {
    Float::with_val(prec.bits(), x).pow(&prec.ratio(n, d))
}

/// `x^y` for real `x > 0`.
pub(crate) fn rpow_real(x: &Real, y: &Real, prec: &Prec) -> Real {
    Float::with_val(prec.bits(), x).pow(y)
}


/// Modulus data from theta sums and the AGM, independent of the product formulas.
pub(crate) struct ThetaModulus {
    pub k: Real,
    pub k_prime: Real,
    pub big_k: Real,
}

pub(crate) fn theta_modulus(q: &Real, prec: &Prec) -> Result<ThetaModulus> {
    let bits = prec.bits();
    let qc = cx(q.clone());
    let t2 = theta2(&qc, prec)?.re;
    let t3 = theta3(&Complex::zero(prec), &qc, prec)?.re;
    let k = Float::with_val(bits, t2.square_ref()) / Float::with_val(bits, t3.square_ref());
    let k_prime = Float::with_val(bits, 1 - Float::with_val(bits, k.square_ref())).sqrt();
    let big_k = elliptic_k(&k, prec)?;
    Ok(ThetaModulus { k, k_prime, big_k })
}

/// `(q, k11, k12, k21, k22, sqrt(K(k11)/pi))` with `k11` from the closed form of the modulus.
pub(crate) struct Chain {
    pub q: Real,
    pub k11: Real,
    pub k12: Real,
    pub k21: Real,
    pub k22: Real,
    pub root_k: Real,
}

pub(crate) fn chain(r: &Rational, prec: &Prec) -> Result<Chain> {
    let nome = nome_from_r(r, prec)?;
    let k11 = modulus_from_nome(&nome, prec)?.k;
    let (k12, k21, k22) = landen_descend(&k11, prec)?;
    let root_k = Float::with_val(prec.bits(), elliptic_k(&k11, prec)? / prec.pi()).sqrt();
    Ok(Chain {
        q: nome.q.re,
        k11,
        k12,
        k21,
        k22,
        root_k,
    })
}

/// `2^{5/6} q^{-lin^2/4} (k11 k12 k21)^{1/6} / k22^{1/3} sqrt(K(k11)/pi)`, the value of
/// `sum_n q^{n^2 + lin n}` for odd `lin`.
pub(crate) fn odd_sum_closed(c: &Chain, lin: i64, prec: &Prec) -> Real {
    let bits = prec.bits();
    let k = Float::with_val(bits, &c.k11 * &c.k12) * &c.k21;
    rpow(&prec.real(2), 5, 6, prec) * rpow(&c.q, -lin * lin, 4, prec) * rpow(&k, 1, 6, prec)
        / rpow(&c.k22, 1, 3, prec)
        * &c.root_k
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn ids_are_unique_and_dotted() {
        let checks = register_builtin_checks();
        assert!(checks.len() >= 25);
        let mut seen = HashSet::new();
        for c in &checks {
            assert!(seen.insert(c.id), "duplicate id {}", c.id);
            assert!(c.id.contains('.'), "id {} has no group", c.id);
            assert!(!c.statement.is_empty() && !c.description.is_empty());
        }
    }
}
