//! Continued fractions `b0 + a1/(b1 + a2/(b2 + ...))` and the named
//! fractions: Rogers-Ramanujan `R`, the cubic `R2`, the octic `R3` (also
//! written `H`), the `M(c, q)` fraction and the `P(a, b, q)` fraction.

use std::fmt;

use rug::Float;

use crate::error::{Error, Result};
use crate::numerics::{format_sci, sum_series, Complex, Prec, TailPolicy};
use crate::qfunctions::{nome_pow_real, pochhammer, Order};

type Rule = Box<dyn Fn(u64) -> Complex + Send + Sync>;

/// Generated continued fraction `b0 + a_1/(b_1 + a_2/(b_2 + ...))`.
pub struct ContinuedFraction {
    pub b0: Complex,
    /// `a_n` for `n >= 1`.
    pub num: Rule,
    /// `b_n` for `n >= 1`.
    pub den: Rule,
    pub max_terms: u64,
}

impl fmt::Debug for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ContinuedFraction")
            .field("b0", &self.b0)
            .field("max_terms", &self.max_terms)
            .finish_non_exhaustive()
    }
}

impl ContinuedFraction {
    pub const DEFAULT_MAX_TERMS: u64 = 1 << 16;
    const FIRST_DEPTH: u64 = 50;

    pub fn new<A, B>(b0: Complex, num: A, den: B) -> Self
    where
        A: Fn(u64) -> Complex + Send + Sync + 'static,
        B: Fn(u64) -> Complex + Send + Sync + 'static,
    {
        ContinuedFraction {
            b0,
            num: Box::new(num),
            den: Box::new(den),
            max_terms: Self::DEFAULT_MAX_TERMS,
        }
    }

    pub fn with_max_terms(mut self, max_terms: u64) -> Self {
        self.max_terms = max_terms.max(1);
        self
    }

    /// Exact value of the fraction truncated after `a_depth / b_depth`.
    pub fn backward(&self, depth: u64, prec: &Prec) -> Complex {
        let tiny = tiny(prec);
        let mut t = (self.den)(depth);
        for n in (1..depth).rev() {
            if t.is_zero() {
                t = tiny.clone();
            }
            t = &(self.den)(n) + &(&(self.num)(n + 1) / &t);
        }
        if t.is_zero() {
            t = tiny;
        }
        &self.b0 + &(&(self.num)(1) / &t)
    }
}

fn tiny(prec: &Prec) -> Complex {
    Complex::from_real(prec.pow10(-(prec.working_digits() as i32) - 10))
}

fn relative_gap(a: &Complex, b: &Complex) -> Float {
    let scale = Float::with_val(64, b.abs()).max(&Float::with_val(64, 1));
    Float::with_val(64, (a - b).abs()) / scale
}

/// Forward modified-Lentz evaluation with depth doubling from 50 terms.
///
/// A depth is accepted when the approximants at `N` and `2N` agree to
/// `10^-digits` and the backward recurrence at `2N` reproduces the forward
/// value to the same tolerance. A zero partial numerator ends the fraction
/// exactly.
pub fn eval_cf(cf: &ContinuedFraction, prec: &Prec) -> Result<Complex> {
    let tiny = tiny(prec);
    let tol = Float::with_val(64, prec.target_eps());
    let guarded = |z: Complex| if z.is_zero() { tiny.clone() } else { z };

    let mut f = guarded(cf.b0.clone());
    let mut c = f.clone();
    let mut d = Complex::zero(prec);
    let mut checkpoint: Option<Complex> = None;
    let mut depth = ContinuedFraction::FIRST_DEPTH.min(cf.max_terms);

    let mut n = 1;
    loop {
        let a = (cf.num)(n);
        if a.is_zero() {
            // terminates exactly after n - 1 levels
            return Ok(if n == 1 { cf.b0.clone() } else { cf.backward(n - 1, prec) });
        }
        let b = (cf.den)(n);
        d = guarded(&b + &(&a * &d)).recip();
        c = guarded(&b + &(&a / &c));
        f = &f * &(&c * &d);

        if n == depth {
            if let Some(prev) = &checkpoint {
                if relative_gap(prev, &f) < tol {
                    let back = cf.backward(n, prec);
                    if relative_gap(&back, &f) < tol {
                        return Ok(back);
                    }
                }
            }
            if depth >= cf.max_terms {
                let last = checkpoint
                    .as_ref()
                    .map(|prev| (format_sci(&prev.re, 20), format_sci(&f.re, 20)));
                return Err(Error::NonConvergence {
                    context: "continued fraction".into(),
                    terms: n,
                    last,
                });
            }
            checkpoint = Some(f.clone());
            depth = (depth * 2).min(cf.max_terms);
        }
        n += 1;
    }
}

fn check_real_nome(q: &Complex) -> Result<()> {
    if !(q.is_real() && q.re > 0 && q.re < 1) {
        return Err(Error::domain("continued fraction route needs a real nome 0 < q < 1"));
    }
    Ok(())
}

fn at_prec(z: &Complex, prec: &Prec) -> Complex {
    Complex::new(
        Float::with_val(prec.bits(), &z.re),
        Float::with_val(prec.bits(), &z.im),
    )
}

/// `1/(1 + q/(1 + q^2/(1 + ...)))`, without the `q^{1/5}` prefactor.
pub fn rr_cf(q: &Complex, prec: &Prec) -> Result<Complex> {
    check_real_nome(q)?;
    let q = at_prec(q, prec);
    let one = Complex::one(prec);
    let den_one = one.clone();
    let cf = ContinuedFraction::new(
        Complex::zero(prec),
        move |n| if n == 1 { one.clone() } else { q.powi(n as i64 - 1) },
        move |_| den_one.clone(),
    );
    eval_cf(&cf, prec)
}

/// `q^{1/5}/(1 + q/(1 + q^2/(1 + ...)))`.
pub fn r1_cf(q: &Complex, prec: &Prec) -> Result<Complex> {
    Ok(&nome_pow_real(q, &prec.ratio(1, 5)) * &rr_cf(q, prec)?)
}

/// `q^{1/3}/(1 + (q + q^2)/(1 + (q^2 + q^4)/(1 + ...)))`.
pub fn r2_cf(q: &Complex, prec: &Prec) -> Result<Complex> {
    check_real_nome(q)?;
    let q = at_prec(q, prec);
    let first = nome_pow_real(&q, &prec.ratio(1, 3));
    let one = Complex::one(prec);
    let cf = ContinuedFraction::new(
        Complex::zero(prec),
        move |n| {
            if n == 1 {
                first.clone()
            } else {
                let qn = q.powi(n as i64 - 1);
                &qn + &(&qn * &qn)
            }
        },
        move |_| one.clone(),
    );
    eval_cf(&cf, prec)
}

/// `q^{1/2}/((1 + q) + q^2/((1 + q^3) + q^4/((1 + q^5) + ...)))`.
pub fn r3_cf(q: &Complex, prec: &Prec) -> Result<Complex> {
    check_real_nome(q)?;
    let q = at_prec(q, prec);
    let first = nome_pow_real(&q, &prec.ratio(1, 2));
    let one = Complex::one(prec);
    let q_num = q.clone();
    let cf = ContinuedFraction::new(
        Complex::zero(prec),
        move |n| if n == 1 { first.clone() } else { q_num.powi(2 * (n as i64 - 1)) },
        move |n| &one + &q.powi(2 * n as i64 - 1),
    );
    eval_cf(&cf, prec)
}

/// `H(q)`: the same fraction as [`r3_cf`].
pub fn h_cf(q: &Complex, prec: &Prec) -> Result<Complex> {
    r3_cf(q, prec)
}

fn ratio_of_products(
    q: &Complex,
    period: i64,
    upper: &[i64],
    lower: &[i64],
    prec: &Prec,
) -> Result<Complex> {
    let base = q.powi(period);
    let mut value = Complex::one(prec);
    for e in upper {
        value = &value * &pochhammer(&q.powi(*e), &base, Order::Infinite, prec)?;
    }
    for e in lower {
        value = &value / &pochhammer(&q.powi(*e), &base, Order::Infinite, prec)?;
    }
    Ok(value)
}

/// `(q; q^5)(q^4; q^5) / ((q^2; q^5)(q^3; q^5))`.
pub fn rr_product(q: &Complex, prec: &Prec) -> Result<Complex> {
    ratio_of_products(q, 5, &[1, 4], &[2, 3], prec)
}

/// `q^{1/5}` times [`rr_product`].
pub fn r1_product(q: &Complex, prec: &Prec) -> Result<Complex> {
    Ok(&nome_pow_real(q, &prec.ratio(1, 5)) * &rr_product(q, prec)?)
}

/// `q^{1/3} (q; q^6)(q^5; q^6) / (q^3; q^6)^2`.
pub fn r2_product(q: &Complex, prec: &Prec) -> Result<Complex> {
    let body = ratio_of_products(q, 6, &[1, 5], &[3, 3], prec)?;
    Ok(&nome_pow_real(q, &prec.ratio(1, 3)) * &body)
}

/// `q^{1/2} (q; q^8)(q^7; q^8) / ((q^3; q^8)(q^5; q^8))`.
pub fn r3_product(q: &Complex, prec: &Prec) -> Result<Complex> {
    let body = ratio_of_products(q, 8, &[1, 7], &[3, 5], prec)?;
    Ok(&nome_pow_real(q, &prec.ratio(1, 2)) * &body)
}

/// `M(c, q) = sum_{n >= 0} c^n q^{n(n+1)/2}`; converges for every `c` when `|q| < 1`.
pub fn m_series(c: &Complex, q: &Complex, prec: &Prec) -> Result<Complex> {
    if q.abs() >= 1 {
        return Err(Error::domain("M(c, q) needs |q| < 1"));
    }
    if c.is_zero() || q.is_zero() {
        return Ok(Complex::one(prec));
    }
    // precision lost to the hump of |c|^n |q|^{n(n+1)/2} before it decays
    let lc = c.abs_f64().ln();
    let lq = q.abs_f64().ln();
    let slope = lc + lq / 2.0;
    let peak = if slope > 0.0 { slope * slope / (-2.0 * lq) } else { 0.0 };
    let work = prec.raised((peak / std::f64::consts::LN_10).ceil() as u32);
    let c = at_prec(c, &work);
    let q = at_prec(q, &work);
    let mut t = Complex::one(&work);
    let mut qn = Complex::one(&work);
    let sum = sum_series(
        |n| {
            if n > 0 {
                qn = &qn * &q;
                t = &(&t * &c) * &qn;
            }
            t.clone()
        },
        TailPolicy::Gaussian,
        &work,
    )?;
    Ok(at_prec(&sum, prec))
}

/// The `M(c, q)` fraction `1/(1 - cq/(1 + c(q - q^2)/(1 - cq^3/(1 + c(q^2 - q^4)/(1 - ...)))))`.
///
/// In standard form `a_1 = 1`, `a_{2j} = -c q^{2j-1}`, `a_{2j+1} = c (q^j - q^{2j})`,
/// every `b_n = 1`. With `c` replaced by `-c` this is the all-plus fraction for
/// `sum (-c)^k q^{k(k+1)/2}`.
pub fn m_cf(c: &Complex, q: &Complex, prec: &Prec) -> Result<Complex> {
    if q.abs() >= 1 {
        return Err(Error::domain("M(c, q) needs |q| < 1"));
    }
    let c = at_prec(c, prec);
    let q = at_prec(q, prec);
    let one = Complex::one(prec);
    let den_one = one.clone();
    let cf = ContinuedFraction::new(
        Complex::zero(prec),
        move |n| {
            if n == 1 {
                one.clone()
            } else if n % 2 == 0 {
                -(&c * &q.powi(n as i64 - 1))
            } else {
                let j = (n as i64 - 1) / 2;
                let qj = q.powi(j);
                &c * &(&qj - &(&qj * &qj))
            }
        },
        move |_| den_one.clone(),
    );
    eval_cf(&cf, prec)
}

/// The fraction `1/((1 - ab) + (a - bq)(b - aq)/((1 - ab)(q^2 + 1) + (a - bq^3)(b - aq^3)/(...)))`.
pub fn p_cf(a: &Complex, b: &Complex, q: &Complex, prec: &Prec) -> Result<Complex> {
    if (a * b).abs() >= 1 {
        return Err(Error::domain("P(a, b, q) fraction needs |ab| < 1"));
    }
    if q.abs() >= 1 {
        return Err(Error::domain("P(a, b, q) needs |q| < 1"));
    }
    let (a, b, q) = (at_prec(a, prec), at_prec(b, prec), at_prec(q, prec));
    let one = Complex::one(prec);
    let lead = &one - &(&a * &b);
    let lead_den = lead.clone();
    let q_den = q.clone();
    let cf = ContinuedFraction::new(
        Complex::zero(prec),
        move |n| {
            if n == 1 {
                one.clone()
            } else {
                let qo = q.powi(2 * n as i64 - 3);
                &(&a - &(&b * &qo)) * &(&b - &(&a * &qo))
            }
        },
        move |n| {
            if n == 1 {
                lead_den.clone()
            } else {
                let bump = q_den.powi(2 * n as i64 - 2).add_real(&Float::with_val(64, 1));
                &lead * &bump
            }
        },
    );
    eval_cf(&cf, prec)
}

/// `(a^2 q^3; q^4)(b^2 q^3; q^4) / ((a^2 q; q^4)(b^2 q; q^4))`.
pub fn p_product(a: &Complex, b: &Complex, q: &Complex, prec: &Prec) -> Result<Complex> {
    let q4 = q.powi(4);
    let (a2, b2) = (a * a, b * b);
    let q3 = q.powi(3);
    let num = &pochhammer(&(&a2 * &q3), &q4, Order::Infinite, prec)?
        * &pochhammer(&(&b2 * &q3), &q4, Order::Infinite, prec)?;
    let den = &pochhammer(&(&a2 * q), &q4, Order::Infinite, prec)?
        * &pochhammer(&(&b2 * q), &q4, Order::Infinite, prec)?;
    Ok(&num / &den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::parse_real;
    use proptest::prelude::*;

    fn p40() -> Prec {
        Prec::new(40).unwrap()
    }

    fn real(p: &Prec, s: &str) -> Complex {
        Complex::from_real(parse_real(s, p).unwrap())
    }

    fn assert_close(a: &Complex, b: &Complex, digits: i32) {
        let err = (a - b).abs();
        assert!(err < p40().pow10(-digits), "{a} vs {b}");
    }

    // Oracles: mpmath backward recurrence at depth 400 and mpmath qp/nsum at
    // 40 digits, frozen here.

    #[test]
    fn generic_evaluator() {
        let p = p40();
        let zero = Complex::zero(&p);
        let b0 = real(&p, "0.25");
        let z = zero.clone();
        let cf = ContinuedFraction::new(b0.clone(), move |_| z.clone(), |_| Complex::from_f64(&Prec::new(40).unwrap(), 1.0, 0.0));
        assert_eq!(eval_cf(&cf, &p).unwrap(), b0);

        let one = Complex::one(&p);
        let o2 = one.clone();
        let golden = ContinuedFraction::new(zero, move |_| one.clone(), move |_| o2.clone());
        assert_close(
            &eval_cf(&golden, &p).unwrap(),
            &real(&p, "0.6180339887498948482045868343656381177203"),
            38,
        );
    }

    #[test]
    fn divergent_fraction_reports_last_approximants() {
        let p = p40();
        let one = Complex::one(&p);
        let o2 = one.clone();
        // 1/(1 - 1/(1 - ...)) cycles with period 3 and never settles
        let cf = ContinuedFraction::new(Complex::zero(&p), move |n| if n == 1 { o2.clone() } else { -&o2 }, move |_| one.clone())
            .with_max_terms(400);
        match eval_cf(&cf, &p) {
            Err(Error::NonConvergence { last, .. }) => assert!(last.is_some()),
            other => panic!("expected NonConvergence, got {other:?}"),
        }
    }

    #[test]
    fn rogers_ramanujan() {
        let p = p40();
        let q = Complex::from_real(Float::with_val(p.bits(), -p.pi() * 2u32).exp());
        let expected = real(&p, "0.2840790438404122960282918323931261690911");
        assert_close(&r1_cf(&q, &p).unwrap(), &expected, 38);
        assert_close(&r1_product(&q, &p).unwrap(), &expected, 38);
        let q = real(&p, "0.1");
        let expected = real(&p, "0.9099090991719836287534958068425080795676");
        assert_close(&rr_cf(&q, &p).unwrap(), &expected, 38);
        assert_close(&rr_product(&q, &p).unwrap(), &expected, 38);
        // leading behaviour as q -> 0+
        let tiny = real(&p, "1e-30");
        assert_close(&rr_cf(&tiny, &p).unwrap(), &Complex::one(&p), 28);
        assert!(rr_cf(&real(&p, "-0.5"), &p).is_err());
    }

    #[test]
    fn cubic_and_octic() {
        let p = p40();
        let q = real(&p, "0.2");
        let r2 = real(&p, "0.4752613762056758743891210596373819495393");
        assert_close(&r2_cf(&q, &p).unwrap(), &r2, 38);
        assert_close(&r2_product(&q, &p).unwrap(), &r2, 38);
        let r3 = real(&p, "0.3607667773892926317168246519969520123954");
        assert_close(&r3_cf(&q, &p).unwrap(), &r3, 38);
        assert_close(&r3_product(&q, &p).unwrap(), &r3, 38);
        assert_close(&h_cf(&q, &p).unwrap(), &r3, 38);
    }

    #[test]
    fn m_function() {
        let p = p40();
        let q = real(&p, "0.1");
        assert_eq!(m_series(&Complex::zero(&p), &q, &p).unwrap(), Complex::one(&p));
        assert_eq!(m_series(&q, &Complex::zero(&p), &p).unwrap(), Complex::one(&p));
        assert_close(&m_cf(&Complex::zero(&p), &q, &p).unwrap(), &Complex::one(&p), 38);
        assert_close(
            &m_series(&Complex::one(&p), &q, &p).unwrap(),
            &real(&p, "1.101001000100001000001000000100000001"),
            38,
        );
        let half = real(&p, "0.5");
        let expected = real(&p, "1.050250125006250031250015625000781250004");
        assert_close(&m_series(&half, &q, &p).unwrap(), &expected, 38);
        assert_close(&m_cf(&half, &q, &p).unwrap(), &expected, 38);
        let q = real(&p, "0.15");
        let expected = real(&p, "0.9775758990595598843500285768175917107217");
        assert_close(&m_series(&-&q, &q, &p).unwrap(), &expected, 38);
        assert_close(&m_cf(&-&q, &q, &p).unwrap(), &expected, 38);
        // all-plus fraction for sum (-1)^k q^{k(k+1)/2} at q = 0.1
        let q = real(&p, "0.1");
        assert_close(
            &m_cf(&-Complex::one(&p), &q, &p).unwrap(),
            &real(&p, "0.900999000099999000000999999900000000999"),
            38,
        );
    }

    #[test]
    fn p_fraction() {
        let p = p40();
        let (a, b, q) = (real(&p, "0.3"), real(&p, "0.5"), real(&p, "0.1"));
        let expected = real(&p, "1.034607247485158846053828141524421266994");
        assert_close(&p_cf(&a, &b, &q, &p).unwrap(), &expected, 38);
        assert_close(&p_cf(&b, &a, &q, &p).unwrap(), &expected, 38);
        assert_close(&p_product(&a, &b, &q, &p).unwrap(), &expected, 38);
        let zero = Complex::zero(&p);
        assert_close(&p_cf(&zero, &zero, &q, &p).unwrap(), &Complex::one(&p), 38);
        assert_close(&p_product(&zero, &zero, &q, &p).unwrap(), &Complex::one(&p), 38);
        assert!(p_cf(&Complex::from_i64(&p, 2), &Complex::one(&p), &q, &p).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn p_fraction_matches_product(a in -0.9f64..0.9, b in -0.9f64..0.9, q in 0.01f64..0.6) {
            let p = Prec::new(30).unwrap();
            let (a, b, q) = (Complex::from_f64(&p, a, 0.0), Complex::from_f64(&p, b, 0.0), Complex::from_f64(&p, q, 0.0));
            let cf = p_cf(&a, &b, &q, &p).unwrap();
            let prod = p_product(&a, &b, &q, &p).unwrap();
            prop_assert!((&cf - &prod).abs() < p.pow10(-25));
        }

        #[test]
        fn m_fraction_matches_series(c in -0.9f64..0.9, q in 0.01f64..0.6) {
            let p = Prec::new(30).unwrap();
            let (c, q) = (Complex::from_f64(&p, c, 0.0), Complex::from_f64(&p, q, 0.0));
            let cf = m_cf(&c, &q, &p).unwrap();
            let series = m_series(&c, &q, &p).unwrap();
            prop_assert!((&cf - &series).abs() < p.pow10(-25));
        }
    }
}
