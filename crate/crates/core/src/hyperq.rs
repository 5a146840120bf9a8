//! Basic hypergeometric series `2phi1` and `psi`, the q-binomial and Gauss
//! summations, and residual checks for the identities built from them.

use rug::Float;

use crate::cfrac::p_cf;
use crate::error::{Error, Result};
use crate::numerics::{sum_series, Complex, Prec, Real, TailPolicy};
use crate::qfunctions::{agile, nome_pow_real, pochhammer, theta4, AgileParams, Order, Route};

/// Arguments of `2phi1[a, b; c; q, z]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Phi21Params {
    pub a: Complex,
    pub b: Complex,
    pub c: Complex,
    pub q: Complex,
    pub z: Complex,
}

/// `sum_{n >= 0} (a;q)_n (b;q)_n / ((c;q)_n (q;q)_n) z^n` for `|q| < 1`, `|z| < 1`.
pub fn phi21(params: &Phi21Params, prec: &Prec) -> Result<Complex> {
    let Phi21Params { a, b, c, q, z } = params;
    if q.abs() >= 1 {
        return Err(Error::domain("2phi1 needs |q| < 1"));
    }
    let zabs = z.abs_f64();
    if zabs >= 1.0 {
        return Err(Error::domain("2phi1 series needs |z| < 1"));
    }
    if z.is_zero() {
        return Ok(Complex::one(prec));
    }
    let one = Complex::one(prec);
    let eps = prec.eps();
    let mut qn = Complex::one(prec);
    let mut term = Complex::one(prec);
    let mut pole = None;
    let sum = sum_series(
        |n| {
            if n == 0 || pole.is_some() {
                return if pole.is_some() { Complex::zero(prec) } else { term.clone() };
            }
            // qn holds q^{n-1}
            let lower = &one - &(c * &qn);
            if lower.abs() < eps {
                pole = Some(n - 1);
                return Complex::zero(prec);
            }
            let num = &(&one - &(a * &qn)) * &(&one - &(b * &qn));
            qn = &qn * q;
            let den = &lower * &(&one - &qn);
            term = &(&(&term * &num) / &den) * z;
            term.clone()
        },
        TailPolicy::Geometric { ratio: zabs.sqrt() },
        prec,
    )?;
    if let Some(k) = pole {
        return Err(Error::domain(format!("2phi1 lower parameter c hits q^-{k}")));
    }
    Ok(sum)
}

/// `psi(a, q, z) = 2phi1[a, 0; 0; q, z]`.
pub fn psi_small(a: &Complex, q: &Complex, z: &Complex, prec: &Prec) -> Result<Complex> {
    let zero = Complex::zero(prec);
    phi21(
        &Phi21Params {
            a: a.clone(),
            b: zero.clone(),
            c: zero,
            q: q.clone(),
            z: z.clone(),
        },
        prec,
    )
}

/// q-binomial product `(az; q)_inf / (z; q)_inf`.
pub fn psi_product(a: &Complex, q: &Complex, z: &Complex, prec: &Prec) -> Result<Complex> {
    let num = pochhammer(&(a * z), q, Order::Infinite, prec)?;
    let den = pochhammer(z, q, Order::Infinite, prec)?;
    if den.is_zero() {
        return Err(Error::DivisionByZero("(z; q)_inf vanishes".into()));
    }
    Ok(&num / &den)
}

/// Gauss sum `2phi1[a, b; c; q, c/(ab)] = (c/a;q)(c/b;q) / ((c;q)(c/(ab);q))`,
/// returned as `(series, product)`; needs `|c/(ab)| < 1`.
pub fn gauss_sum_sides(
    a: &Complex,
    b: &Complex,
    c: &Complex,
    q: &Complex,
    prec: &Prec,
) -> Result<(Complex, Complex)> {
    let ab = a * b;
    if ab.is_zero() {
        return Err(Error::domain("Gauss sum needs ab != 0"));
    }
    let z = c / &ab;
    let series = phi21(
        &Phi21Params {
            a: a.clone(),
            b: b.clone(),
            c: c.clone(),
            q: q.clone(),
            z: z.clone(),
        },
        prec,
    )?;
    let num = &pochhammer(&(c / a), q, Order::Infinite, prec)?
        * &pochhammer(&(c / b), q, Order::Infinite, prec)?;
    let den = &pochhammer(c, q, Order::Infinite, prec)? * &pochhammer(&z, q, Order::Infinite, prec)?;
    Ok((series, &num / &den))
}

fn qpow(q: &Real, x: &Real) -> Complex {
    nome_pow_real(&Complex::from_real(q.clone()), x)
}

fn rq_star_product(a: &Real, b: &Real, p: &Real, q: &Real, prec: &Prec) -> Result<Complex> {
    let qc = Complex::from_real(q.clone());
    let num = agile(&AgileParams::real(a.clone(), p.clone())?, &qc, Route::Auto, prec)?;
    let den = agile(&AgileParams::real(b.clone(), p.clone())?, &qc, Route::Auto, prec)?;
    if den.is_zero() {
        return Err(Error::DivisionByZero("[b, p; q] vanishes".into()));
    }
    Ok(&num / &den)
}

/// `(a, b, p) = (2A + 3p/4, 2B + p/4, 4(A + B))`.
pub fn thm6_parameters(big_a: &Real, big_b: &Real, prec: &Prec) -> (Real, Real, Real) {
    let bits = prec.bits();
    let p = Float::with_val(bits, big_a + big_b) * 4u32;
    let a = Float::with_val(bits, big_a * 2u32) + Float::with_val(bits, &p * 3u32) / 4u32;
    let b = Float::with_val(bits, big_b * 2u32) + Float::with_val(bits, &p / 4u32);
    (a, b, p)
}

/// `|psi(q^a, q^p, q^{p-a}) R*(a, b, p; q) - P(q^A, q^B, q^{A+B})|` with the
/// parameters of [`thm6_parameters`]. The `psi` series only converges for
/// `A < B` (`a < p`).
pub fn thm6_check_i(big_a: &Real, big_b: &Real, q: &Real, prec: &Prec) -> Result<Real> {
    if *big_a <= 0 || *big_b <= 0 {
        return Err(Error::domain("A and B must be positive"));
    }
    if big_a >= big_b {
        return Err(Error::domain(
            "psi(q^a, q^p, q^{p-a}) diverges unless A < B (its argument q^{p-a} has modulus >= 1)",
        ));
    }
    let (a, b, p) = thm6_parameters(big_a, big_b, prec);
    let bits = prec.bits();
    let qc = Complex::from_real(q.clone());
    let psi = psi_small(
        &qpow(q, &a),
        &qpow(q, &p),
        &qpow(q, &Float::with_val(bits, &p - &a)),
        prec,
    )?;
    let lhs = &psi * &rq_star_product(&a, &b, &p, q, prec)?;
    let sum_ab = Float::with_val(bits, big_a + big_b);
    let rhs = p_cf(&qpow(q, big_a), &qpow(q, big_b), &nome_pow_real(&qc, &sum_ab), prec)?;
    Ok((&lhs - &rhs).abs())
}

/// Residuals of the second part of the `2phi1` theta-quotient identities.
#[derive(Clone, Debug, PartialEq)]
pub struct Thm6iiResiduals {
    /// `2phi1[q^{b-a}, q^{a+b-p}; q^b; q^p, q^{p-b}]` against `R*(a, b, p; q)`.
    pub gauss_form: Real,
    /// The same series against `theta4((p-2a) i ln q / 4, q^{p/2}) / theta4((p-2b) i ln q / 4, q^{p/2})`.
    pub theta_form: Real,
    /// `2phi1[q^a, q^b; q^b; q^p, q^{(p-a-b)/2}]` against
    /// `theta4((a-b) i ln q / 4, q^{p/2}) / theta4((a+b) i ln q / 4, q^{p/2})`;
    /// `None` outside `a + b < p`.
    pub repeated_parameter: Option<Real>,
    /// `2phi1[A, B; sqrt(ABC); C, sqrt(C/(AB))]` with `A = q^a`, `B = q^b`,
    /// `C = q^p`, against the same theta quotient; `None` outside `a + b < p`.
    pub symmetric_parameter: Option<Real>,
}

fn theta_quotient(u: &Real, v: &Real, q: &Real, p: &Real, prec: &Prec) -> Result<Complex> {
    let bits = prec.bits();
    let ln_q = Float::with_val(bits, q.ln_ref());
    let nome = qpow(q, &Float::with_val(bits, p / 2u32));
    let arg = |x: &Real| Complex::new(prec.zero(), Float::with_val(bits, x * &ln_q) / 4u32);
    Ok(&theta4(&arg(u), &nome, prec)? / &theta4(&arg(v), &nome, prec)?)
}

/// Evaluates all four readings at real `(a, b, p)` with `0 < a, b < p` and `0 < q < 1`.
pub fn thm6_check_ii(a: &Real, b: &Real, p: &Real, q: &Real, prec: &Prec) -> Result<Thm6iiResiduals> {
    if *a <= 0 || *b <= 0 || a >= p || b >= p {
        return Err(Error::domain("need 0 < a, b < p"));
    }
    let bits = prec.bits();
    let big_q = qpow(q, p);
    let rstar = rq_star_product(a, b, p, q, prec)?;
    let gauss = phi21(
        &Phi21Params {
            a: qpow(q, &Float::with_val(bits, b - a)),
            b: qpow(q, &(Float::with_val(bits, a + b) - p)),
            c: qpow(q, b),
            q: big_q.clone(),
            z: qpow(q, &Float::with_val(bits, p - b)),
        },
        prec,
    )?;
    let two_a = Float::with_val(bits, a * 2u32);
    let two_b = Float::with_val(bits, b * 2u32);
    let theta = theta_quotient(
        &Float::with_val(bits, p - &two_a),
        &Float::with_val(bits, p - &two_b),
        q,
        p,
        prec,
    )?;

    let sum_ab = Float::with_val(bits, a + b);
    let (repeated, symmetric) = if sum_ab < *p {
        let diff = Float::with_val(bits, a - b);
        let target = theta_quotient(&diff, &sum_ab, q, p, prec)?;
        let half_gap = Float::with_val(bits, p - &sum_ab) / 2u32;
        let repeated = phi21(
            &Phi21Params {
                a: qpow(q, a),
                b: qpow(q, b),
                c: qpow(q, b),
                q: big_q.clone(),
                z: qpow(q, &half_gap),
            },
            prec,
        )?;
        let sym_lower = Float::with_val(bits, &sum_ab + p) / 2u32;
        let symmetric = phi21(
            &Phi21Params {
                a: qpow(q, a),
                b: qpow(q, b),
                c: qpow(q, &sym_lower),
                q: big_q,
                z: qpow(q, &half_gap),
            },
            prec,
        )?;
        (
            Some((&repeated - &target).abs()),
            Some((&symmetric - &target).abs()),
        )
    } else {
        (None, None)
    };

    Ok(Thm6iiResiduals {
        gauss_form: (&gauss - &rstar).abs(),
        theta_form: (&gauss - &theta).abs(),
        repeated_parameter: repeated,
        symmetric_parameter: symmetric,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::parse_real;
    use proptest::prelude::*;

    fn p40() -> Prec {
        Prec::new(40).unwrap()
    }

    fn real(p: &Prec, s: &str) -> Real {
        parse_real(s, p).unwrap()
    }

    fn c(p: &Prec, s: &str) -> Complex {
        Complex::from_real(real(p, s))
    }

    #[test]
    fn phi21_trivial_cases() {
        let p = p40();
        let zero = Complex::zero(&p);
        let params = Phi21Params {
            a: c(&p, "0.2"),
            b: c(&p, "0.3"),
            c: c(&p, "0.7"),
            q: c(&p, "0.1"),
            z: zero,
        };
        assert_eq!(phi21(&params, &p).unwrap(), Complex::one(&p));
        // a = q, b = c collapses to the geometric series 1/(1 - z)
        let params = Phi21Params {
            a: c(&p, "0.3"),
            b: c(&p, "0.55"),
            c: c(&p, "0.55"),
            q: c(&p, "0.3"),
            z: c(&p, "0.4"),
        };
        let v = phi21(&params, &p).unwrap();
        assert!((&v - &Complex::from_real(p.ratio(5, 3))).abs() < p.pow10(-38));
        let pole = Phi21Params {
            c: Complex::from_real(p.real(10)),
            q: c(&p, "0.1"),
            ..params
        };
        assert!(phi21(&pole, &p).is_err());
    }

    #[test]
    fn q_binomial() {
        let p = p40();
        let q = c(&p, "0.2");
        let z = c(&p, "0.3");
        // mpmath: 1/qp(0.3, 0.2) = 1.542841634859781...
        let v = psi_small(&Complex::zero(&p), &q, &z, &p).unwrap();
        assert!((v.re.to_f64() - 1.542_841_634_859_78).abs() < 1e-13);
        let a = c(&p, "0.5");
        let (q, z) = (c(&p, "0.1"), c(&p, "0.4"));
        let series = psi_small(&a, &q, &z, &p).unwrap();
        let product = psi_product(&a, &q, &z, &p).unwrap();
        assert!((&series - &product).abs() < p.pow10(-38));
    }

    #[test]
    fn gauss_summation() {
        let p = p40();
        let (s, prod) = gauss_sum_sides(&c(&p, "0.5"), &c(&p, "0.6"), &c(&p, "0.2"), &c(&p, "0.1"), &p).unwrap();
        let expected = c(&p, "1.5241387018492285593674622958550415172276656879611");
        assert!((&s - &expected).abs() < p.pow10(-38));
        assert!((&prod - &expected).abs() < p.pow10(-38));
        // with z = ab/c the series lies inside the disc but the sides differ
        assert!(gauss_sum_sides(&c(&p, "0.2"), &c(&p, "0.3"), &c(&p, "0.7"), &c(&p, "0.1"), &p).is_err());
    }

    #[test]
    fn thm6_first_part() {
        let p = p40();
        // the residual equals (q^p; q^p) - (q^{2p-a}; q^p) up to a common factor: ~ q^12 here
        let r = thm6_check_i(&p.real(1), &p.real(2), &real(&p, "0.1"), &p).unwrap();
        assert!(r > p.pow10(-13) && r < p.pow10(-11));
        assert!(thm6_check_i(&p.real(1), &p.real(1), &real(&p, "0.15"), &p).is_err());
    }

    #[test]
    fn thm6_second_part() {
        let p = p40();
        let res = thm6_check_ii(&p.real(1), &p.real(2), &p.real(5), &real(&p, "0.1"), &p).unwrap();
        assert!(res.gauss_form < p.pow10(-38));
        assert!(res.theta_form < p.pow10(-38));
        assert!(res.symmetric_parameter.unwrap() < p.pow10(-38));
        // mpmath: 1.10000099001089... against 1.09901088021869...
        assert!(res.repeated_parameter.unwrap() > p.pow10(-4));
        let res = thm6_check_ii(&p.real(1), &p.real(3), &p.real(8), &real(&p, "0.05"), &p).unwrap();
        assert!(res.gauss_form < p.pow10(-38));
        let same = thm6_check_ii(&p.real(2), &p.real(2), &p.real(5), &real(&p, "0.2"), &p).unwrap();
        assert!(same.gauss_form < p.pow10(-38));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(27))]

        #[test]
        fn q_binomial_grid(a in -0.9f64..0.9, q in 0.05f64..0.8, z in -0.8f64..0.8) {
            let p = Prec::new(30).unwrap();
            let (a, q, z) = (Complex::from_f64(&p, a, 0.0), Complex::from_f64(&p, q, 0.0), Complex::from_f64(&p, z, 0.0));
            let series = psi_small(&a, &q, &z, &p).unwrap();
            let product = psi_product(&a, &q, &z, &p).unwrap();
            prop_assert!((&series - &product).abs() < p.pow10(-25));
        }
    }
}
