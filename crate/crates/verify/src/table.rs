//! Closed-form constants next to their computed values: three infinite
//! products at singular moduli, the modulus data they use, and two values of
//! `dR/dq` at `q = e^{-pi}`.

use ellq_core::numerics::gamma;
use ellq_core::qfunctions::{euler_f, weber_phi};
use ellq_core::rquantity::{drq_dq, RqParams};
use ellq_core::elliptic::{elliptic_k, singular_modulus_full};
use ellq_core::{Complex, Prec, Real, Result};
use rug::ops::Pow;
use rug::{Float, Integer, Rational};

/// `16 - 240 t^2 + 800 t^3 - 2900 t^4 - 6000 t^5 - 6500 t^6 + 17500 t^7 + 625 t^8`,
/// ascending; the normalized derivative of the Rogers-Ramanujan fraction at
/// `q = e^{-pi}` is one of its roots.
pub const RHO_POLY: [i64; 9] = [16, 0, -240, 800, -2900, -6000, -6500, 17500, 625];

pub fn rho_poly() -> Vec<Integer> {
    RHO_POLY.iter().map(|&c| Integer::from(c)).collect()
}

#[derive(Clone, Debug)]
pub struct TableRow {
    pub label: &'static str,
    pub closed_form: &'static str,
    pub computed: Real,
    pub closed: Real,
}

impl TableRow {
    /// `|computed - closed| / max(1, |closed|)`.
    pub fn gap(&self) -> Real {
        let bits = self.closed.prec();
        let scale = Float::with_val(bits, self.closed.abs_ref()).max(&Float::with_val(bits, 1));
        Float::with_val(bits, &self.computed - &self.closed).abs() / scale
    }
}

fn q_of(r: &Rational, prec: &Prec) -> Real {
    let root = prec.real(r).sqrt();
    Float::with_val(prec.bits(), -prec.pi() * root).exp()
}

/// The products at `r = 2/5` and `r = 3`, and the `r = 3` modulus data.
pub fn worked_products(prec: &Prec) -> Result<Vec<TableRow>> {
    let bits = prec.bits();
    let pi = prec.pi();
    let sqrt3 = prec.real(3).sqrt();
    let sqrt5 = prec.real(5).sqrt();
    let gamma_third = gamma(&prec.ratio(1, 3), prec)?;

    let q = q_of(&Rational::from((2, 5)), prec);
    let plus_25 = weber_phi(&Complex::from_real(q), prec)?.re.pow(8u32);
    let closed_25 = (Float::with_val(bits, &sqrt5 * 3u32) + 7u32) / 8u32
        * Float::with_val(bits, prec.ratio(2, 5).sqrt() * &pi / 3u32).exp();

    let q3 = Complex::from_real(q_of(&Rational::from(3), prec));
    let e_pi_root3 = Float::with_val(bits, &pi / &sqrt3).exp();
    let plus_3 = weber_phi(&q3, prec)?.re.pow(8u32);
    let cube = (Float::with_val(bits, &sqrt3 * 15u32) + 26u32).pow(&prec.ratio(1, 3));
    let closed_plus_3 = Float::with_val(bits, &e_pi_root3 / prec.real(2).pow(&prec.ratio(2, 3))) / cube;

    let minus_3 = euler_f(&q3, prec)?.re.pow(8u32);
    let closed_minus_3 = Float::with_val(bits, &sqrt3 + 2u32) * 3u32 * &e_pi_root3
        * Float::with_val(bits, (&gamma_third).pow(12u32))
        / (Float::with_val(bits, (&pi).pow(8u32)) * 1024u32);

    let modulus = singular_modulus_full(&Rational::from(3), prec)?;
    let closed_k_prime = Float::with_val(bits, &sqrt3 + 2u32).sqrt() / 2u32;
    let closed_big_k = prec.real(3).pow(&prec.ratio(1, 4)) * Float::with_val(bits, (&gamma_third).pow(3u32))
        / (prec.real(2).pow(&prec.ratio(7, 3)) * &pi);

    Ok(vec![
        TableRow {
            label: "prod (1 + q^n)^8, r = 2/5",
            closed_form: "(7 + 3 sqrt5)/8 exp(pi sqrt(2/5)/3)",
            computed: plus_25,
            closed: closed_25,
        },
        TableRow {
            label: "prod (1 + q^n)^8, r = 3",
            closed_form: "exp(pi/sqrt3) / (2^(2/3) (26 + 15 sqrt3)^(1/3))",
            computed: plus_3,
            closed: closed_plus_3,
        },
        TableRow {
            label: "prod (1 - q^n)^8, r = 3",
            closed_form: "3 (2 + sqrt3) exp(pi/sqrt3) Gamma(1/3)^12 / (1024 pi^8)",
            computed: minus_3,
            closed: closed_minus_3,
        },
        TableRow {
            label: "k', r = 3",
            closed_form: "sqrt(2 + sqrt3)/2",
            computed: modulus.k_prime,
            closed: closed_k_prime,
        },
        TableRow {
            label: "K(k), r = 3",
            closed_form: "3^(1/4) Gamma(1/3)^3 / (2^(7/3) pi)",
            computed: elliptic_k(&modulus.k, prec)?,
            closed: closed_big_k,
        },
    ])
}

/// `e^pi Gamma(1/4)^4 / pi^3`.
pub fn derivative_scale(prec: &Prec) -> Result<Real> {
    let pi = prec.pi();
    let g = gamma(&prec.ratio(1, 4), prec)?;
    Ok(Float::with_val(prec.bits(), pi.exp_ref()) * g.pow(4u32) / pi.pow(3u32))
}

/// The root of [`RHO_POLY`] reached by Newton's method from `start`.
pub fn rho_root_near(start: &Real, prec: &Prec) -> Real {
    let bits = prec.bits();
    let poly = rho_poly();
    let mut x = Float::with_val(bits, start);
    for _ in 0..200 {
        let mut v = Float::with_val(bits, 0);
        let mut dv = Float::with_val(bits, 0);
        for c in poly.iter().rev() {
            dv = dv * &x + &v;
            v = v * &x + c;
        }
        let step = v / dv;
        x -= &step;
        if step.is_zero() || step.abs() < prec.eps() {
            break;
        }
    }
    x
}

/// `R'(1, 2, 4; e^{-pi})` and `R'(1, 2, 5; e^{-pi})` against their closed forms.
pub fn derivative_constants(prec: &Prec) -> Result<Vec<TableRow>> {
    let bits = prec.bits();
    let q = q_of(&Rational::from(1), prec);
    let scale = derivative_scale(prec)?;

    let d124 = drq_dq(&RqParams::ints(1, 2, 4, prec)?, &q, prec)?;
    let closed_124 = Float::with_val(bits, &scale / prec.real(2).pow(&prec.ratio(5, 8))) / 64u32;

    let d125 = drq_dq(&RqParams::ints(1, 2, 5, prec)?, &q, prec)?;
    let unit = Float::with_val(bits, &scale / 16u32);
    let rho = rho_root_near(&Float::with_val(bits, &d125 / &unit), prec);
    Ok(vec![
        TableRow {
            label: "dR(1,2,4;q)/dq at q = e^-pi",
            closed_form: "e^pi Gamma(1/4)^4 / (64 2^(5/8) pi^3)",
            computed: d124,
            closed: closed_124,
        },
        TableRow {
            label: "dR(1,2,5;q)/dq at q = e^-pi",
            closed_form: "e^pi Gamma(1/4)^4 rho / (16 pi^3), rho a root of 16 - 240t^2 + ... + 625t^8",
            computed: d125,
            closed: unit * rho,
        },
    ])
}

/// All rows of the constants table.
pub fn worked_constants(prec: &Prec) -> Result<Vec<TableRow>> {
    let mut rows = worked_products(prec)?;
    rows.extend(derivative_constants(prec)?);
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_match_at_40_digits() {
        let prec = Prec::new(40).unwrap();
        let rows = worked_constants(&prec).unwrap();
        assert_eq!(rows.len(), 7);
        for row in &rows {
            assert!(row.gap() < prec.pow10(-35), "{}: {}", row.label, row.gap().to_f64());
        }
        // mpmath: prod (1 + e^{-n pi sqrt(2/5)})^8
        let expected = ellq_core::numerics::parse_real("3.3229695419617941418", &prec).unwrap();
        assert!(Float::with_val(prec.bits(), &rows[0].computed - &expected).abs() < prec.pow10(-18));
    }
}
