//! q-Pochhammer symbols, Euler and Weber products, Jacobi theta functions,
//! the bilateral sums `S_z` and `psi*`, and the Agile quantity `[a,p;q]`.
//!
//! Theta functions use the `(z, q)` convention:
//! `theta3(z, q) = sum q^{n^2} e^{2inz}`, `theta4(z, q) = sum (-1)^n q^{n^2} e^{2inz}`.
//!
//! Powers `q^x` for non-integer `x` are `exp(x ln q)` with the principal
//! logarithm, which for `0 < q < 1` is the real logarithm.

use rug::Float;

use crate::error::{Error, Result};
use crate::numerics::series::sum_series_limited;
use crate::numerics::{
    prod_infinite, sum_bilateral, sum_series, Complex, Prec, Real, TailPolicy, DEFAULT_MAX_TERMS,
};

/// Length of a q-Pochhammer product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    Finite(u64),
    Infinite,
}

/// `q^x` via the principal logarithm; `0^x` is `0` unless `x = 0`.
pub fn nome_pow(q: &Complex, x: &Complex) -> Complex {
    q.pow(x)
}

/// `q^x` for real `x`.
pub fn nome_pow_real(q: &Complex, x: &Real) -> Complex {
    q.pow_real(x)
}

fn check_nome(q: &Complex) -> Result<()> {
    if q.abs() >= 1 {
        return Err(Error::domain(format!(
            "nome must satisfy |q| < 1, got |q| = {}",
            q.abs().to_f64()
        )));
    }
    Ok(())
}

/// `(a; q)_n = prod_{k < n} (1 - a q^k)`.
pub fn pochhammer(a: &Complex, q: &Complex, n: Order, prec: &Prec) -> Result<Complex> {
    let one = Complex::one(prec);
    match n {
        Order::Finite(len) => {
            let mut acc = one.clone();
            let mut aqk = a.clone();
            for k in 0..len {
                if k > 0 {
                    aqk = &aqk * q;
                }
                acc = &acc * &(&one - &aqk);
            }
            Ok(acc)
        }
        Order::Infinite => {
            check_nome(q)?;
            let mut aqk = a.clone();
            let product = prod_infinite(
                |k| {
                    if k > 0 {
                        aqk = &aqk * q;
                    }
                    &one - &aqk
                },
                q.abs_f64(),
                prec,
            )?;
            Ok(product.value)
        }
    }
}

/// `f(-q) = (q; q)_inf`.
pub fn euler_f(q: &Complex, prec: &Prec) -> Result<Complex> {
    pochhammer(q, q, Order::Infinite, prec)
}

/// `phi(-q) = (-q; q)_inf`.
pub fn weber_phi(q: &Complex, prec: &Prec) -> Result<Complex> {
    pochhammer(&-q, q, Order::Infinite, prec)
}

/// Decimal digits lost to cancellation in `sum q^{n^2} w^n`: the log10 of
/// its largest term.
fn peak_digits(q: &Complex, w: &Complex) -> u32 {
    let lq = q.abs_f64().ln();
    let lw = w.abs_f64().ln();
    if !lq.is_finite() || !lw.is_finite() || lq >= 0.0 {
        return 0;
    }
    let peak = lw * lw / (4.0 * -lq) / std::f64::consts::LN_10;
    peak.ceil().max(0.0) as u32
}

fn one_side(q: &Complex, q2: &Complex, step: &Complex, work: &Prec) -> Result<Complex> {
    let mut t = Complex::one(work);
    let mut qodd = q.clone();
    sum_series_limited(
        &mut |n| {
            if n > 0 {
                qodd = &qodd * q2;
            }
            t = &(&t * &qodd) * step;
            t.clone()
        },
        TailPolicy::Gaussian,
        work,
        DEFAULT_MAX_TERMS,
        "theta series",
    )
}

fn at_bits(z: &Complex, bits: u32) -> Complex {
    Complex::new(Float::with_val(bits, &z.re), Float::with_val(bits, &z.im))
}

/// `sum_{n in Z} s^n q^{n^2} w^n` with `s = -1` when `alternating`.
///
/// The arithmetic precision is raised by the size of the largest term so
/// that cancellation around the peak does not eat into the guard digits.
pub(crate) fn gauss_sum(
    q: &Complex,
    w: &Complex,
    alternating: bool,
    prec: &Prec,
) -> Result<Complex> {
    check_nome(q)?;
    if q.is_zero() {
        return Ok(Complex::one(prec));
    }
    if w.is_zero() {
        return Err(Error::domain("theta series with a vanishing multiplier"));
    }
    let work = prec.raised(peak_digits(q, w));
    let q = at_bits(q, work.bits());
    let w = at_bits(w, work.bits());
    let q2 = &q * &q;
    let (up, down) = if alternating {
        (-&w, -&w.recip())
    } else {
        (w.clone(), w.recip())
    };
    let total = &(&Complex::one(&work) + &one_side(&q, &q2, &up, &work)?)
        + &one_side(&q, &q2, &down, &work)?;
    Ok(at_bits(&total, prec.bits()))
}

fn theta_guard(z: &Complex, q: &Complex) -> Result<()> {
    check_nome(q)?;
    let growth = q.abs_f64() * (2.0 * z.im.to_f64().abs()).exp();
    if growth >= 1.0 {
        return Err(Error::no_convergence(
            "theta series: |q| exp(2|Im z|) >= 1, terms do not decay from the start",
            0,
        ));
    }
    Ok(())
}

fn e2iz(z: &Complex) -> Complex {
    (&z.mul_i() + &z.mul_i()).exp()
}

/// `theta3(z, q) = sum_{n in Z} q^{n^2} e^{2inz}`; requires `|q| e^{2|Im z|} < 1`.
pub fn theta3(z: &Complex, q: &Complex, prec: &Prec) -> Result<Complex> {
    theta_guard(z, q)?;
    gauss_sum(q, &e2iz(z), false, prec)
}

/// `theta4(z, q) = sum_{n in Z} (-1)^n q^{n^2} e^{2inz}`; requires `|q| e^{2|Im z|} < 1`.
pub fn theta4(z: &Complex, q: &Complex, prec: &Prec) -> Result<Complex> {
    theta_guard(z, q)?;
    gauss_sum(q, &e2iz(z), true, prec)
}

/// `theta2(q) = sum_{n in Z} q^{(n + 1/2)^2}`.
pub fn theta2(q: &Complex, prec: &Prec) -> Result<Complex> {
    check_nome(q)?;
    let quarter = nome_pow_real(q, &prec.ratio(1, 4));
    Ok(&quarter * &gauss_sum(q, q, false, prec)?)
}

/// Triple-product form `prod_{n >= 0} (1 - q^{2n+2})(1 - q^{2n+1} e^{2iz})(1 - q^{2n+1} e^{-2iz})`.
pub fn theta4_product(z: &Complex, q: &Complex, prec: &Prec) -> Result<Complex> {
    theta_guard(z, q)?;
    let q2 = q * q;
    let w = e2iz(z);
    let a = pochhammer(&q2, &q2, Order::Infinite, prec)?;
    let b = pochhammer(&(q * &w), &q2, Order::Infinite, prec)?;
    let c = pochhammer(&(q * &w.recip()), &q2, Order::Infinite, prec)?;
    Ok(&(&a * &b) * &c)
}

/// `S_z(q) = sum_{n in Z} q^{n^2 + zn}`.
pub fn theta_sum_s(z: &Complex, q: &Complex, prec: &Prec) -> Result<Complex> {
    check_nome(q)?;
    if q.is_zero() {
        return Ok(Complex::one(prec));
    }
    gauss_sum(q, &nome_pow(q, z), false, prec)
}

/// Parameters `(a, p)` of `[a, p; q]`.
#[derive(Clone, Debug, PartialEq)]
pub struct AgileParams {
    pub a: Complex,
    pub p: Real,
}

impl AgileParams {
    pub fn new(a: Complex, p: Real) -> Result<Self> {
        if p <= 0 {
            return Err(Error::domain("period p must be positive"));
        }
        Ok(AgileParams { a, p })
    }

    pub fn real(a: Real, p: Real) -> Result<Self> {
        Self::new(Complex::from_real(a), p)
    }

    /// True when `0 < Re(a) < p`, the region of the product representation.
    pub fn in_product_region(&self) -> bool {
        self.a.re > 0 && self.a.re < self.p
    }
}

/// Representation used to evaluate `[a, p; q]` or `psi*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Route {
    /// Product when `a` is real with `0 < a < p`, theta sum otherwise.
    #[default]
    Auto,
    Product,
    Theta,
}

impl Route {
    fn resolve(self, params: &AgileParams) -> Result<Route> {
        match self {
            Route::Auto if params.a.is_real() && params.in_product_region() => Ok(Route::Product),
            Route::Auto => Ok(Route::Theta),
            Route::Product if !params.in_product_region() => Err(Error::domain(
                "product route needs 0 < Re(a) < p; use the theta route",
            )),
            other => Ok(other),
        }
    }
}

/// `(q^{p-a}; q^p)_inf (q^a; q^p)_inf`, or its theta-sum form
/// `sum_{n in Z} (-1)^n q^{pn^2/2 + (p-2a)n/2} / f(-q^p)`.
pub fn agile(params: &AgileParams, q: &Complex, route: Route, prec: &Prec) -> Result<Complex> {
    check_nome(q)?;
    let p = Complex::from_real(params.p.clone());
    let qp = nome_pow(q, &p);
    match route.resolve(params)? {
        Route::Product => {
            let lower = pochhammer(&nome_pow(q, &params.a), &qp, Order::Infinite, prec)?;
            let upper = pochhammer(&nome_pow(q, &(&p - &params.a)), &qp, Order::Infinite, prec)?;
            Ok(&lower * &upper)
        }
        _ => {
            let (big_q, w) = psi_star_args(params, q);
            let sum = gauss_sum(&big_q, &w, true, prec)?;
            Ok(&sum / &euler_f(&qp, prec)?)
        }
    }
}

/// `d/da [a, p; q]` from the theta-sum form,
/// `sum_{n in Z} (-1)^n (-n ln q) q^{pn^2/2 + (p-2a)n/2} / f(-q^p)`.
pub fn agile_da(params: &AgileParams, q: &Complex, prec: &Prec) -> Result<Complex> {
    check_nome(q)?;
    if q.is_zero() {
        return Err(Error::domain("d/da [a, p; q] needs q != 0"));
    }
    let (big_q, w) = psi_star_args(params, q);
    let work = prec.raised(peak_digits(&big_q, &w));
    let big_q = at_bits(&big_q, work.bits());
    let w = at_bits(&w, work.bits());
    let neg_ln_q = -at_bits(q, work.bits()).ln();
    let sum = sum_bilateral(
        |n| {
            if n == 0 {
                return Complex::zero(&work);
            }
            let t = &big_q.powi(n * n) * &w.powi(n);
            let t = &t * &neg_ln_q.scale(&work.real(n));
            if n % 2 == 0 {
                t
            } else {
                -t
            }
        },
        TailPolicy::Gaussian,
        &work,
    )?;
    let qp = nome_pow(q, &Complex::from_real(params.p.clone()));
    Ok(&at_bits(&sum, prec.bits()) / &euler_f(&qp, prec)?)
}

/// `(q^{p/2}, q^{(p - 2a)/2})`, the nome and multiplier of the Gaussian sum form.
fn psi_star_args(params: &AgileParams, q: &Complex) -> (Complex, Complex) {
    let half_p = Float::with_val(params.p.prec(), &params.p / 2u32);
    let big_q = nome_pow_real(q, &half_p);
    let two_a = &params.a + &params.a;
    let lin = Complex::from_real(params.p.clone()) - two_a;
    let lin = lin.scale(&Float::with_val(params.p.prec(), 0.5));
    (big_q, nome_pow(q, &lin))
}

/// `psi*(a, p; q) = sum_{n in Z} q^{pn^2/2 + (p - 2a)n/2}`.
pub fn psi_star(params: &AgileParams, q: &Complex, prec: &Prec) -> Result<Complex> {
    check_nome(q)?;
    if q.is_zero() {
        return Ok(Complex::one(prec));
    }
    let (big_q, w) = psi_star_args(params, q);
    gauss_sum(&big_q, &w, false, prec)
}

/// `f(-q^p) (-q^a; q^p)_inf (-q^{p-a}; q^p)_inf`; needs `0 < Re(a) < p`.
pub fn psi_star_product(params: &AgileParams, q: &Complex, prec: &Prec) -> Result<Complex> {
    check_nome(q)?;
    if !params.in_product_region() {
        return Err(Error::domain("product form of psi* needs 0 < Re(a) < p"));
    }
    let p = Complex::from_real(params.p.clone());
    let qp = nome_pow(q, &p);
    let lower = pochhammer(&-nome_pow(q, &params.a), &qp, Order::Infinite, prec)?;
    let upper = pochhammer(&-nome_pow(q, &(&p - &params.a)), &qp, Order::Infinite, prec)?;
    Ok(&(&euler_f(&qp, prec)? * &lower) * &upper)
}

/// `sum_{k >= 1} cosh(2tk) / (k sinh(pi a k))` for `a > 0`, `|t| < pi a / 2`.
pub fn hyperbolic_log_sum(t: &Real, a: &Real, prec: &Prec) -> Result<Real> {
    let bits = prec.bits();
    let pa = Float::with_val(bits, prec.pi() * a);
    if *a <= 0 || Float::with_val(bits, t.abs_ref()) * 2u32 >= pa {
        return Err(Error::domain(
            "hyperbolic log-sum needs a > 0 and |t| < pi a / 2",
        ));
    }
    let two_t = Float::with_val(bits, t * 2u32);
    let ratio = (2.0 * t.to_f64().abs() - pa.to_f64()).exp();
    let sum = sum_series(
        |n| {
            let k = n + 1;
            let num = Float::with_val(bits, &two_t * k).cosh();
            let den = Float::with_val(bits, &pa * k).sinh() * k;
            Complex::from_real(num / den)
        },
        TailPolicy::Geometric { ratio },
        prec,
    )?;
    Ok(sum.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p40() -> Prec {
        Prec::new(40).unwrap()
    }

    fn real(p: &Prec, s: &str) -> Complex {
        Complex::from_real(crate::numerics::parse_real(s, p).unwrap())
    }

    fn exp_neg_pi(p: &Prec, scale: u32) -> Complex {
        Complex::from_real(Float::with_val(p.bits(), -p.pi() * scale).exp())
    }

    fn assert_close(a: &Complex, b: &Complex, tol_digits: i32) {
        let err = (a - b).abs();
        let p = p40();
        assert!(
            err < p.pow10(-tol_digits),
            "{a} vs {b}: error {}",
            err.to_f64()
        );
    }

    // Oracle values below were computed independently with mpmath at 40 digits
    // (qp, jtheta, nsum) and frozen.

    #[test]
    fn pochhammer_basics() {
        let p = p40();
        let q = real(&p, "0.3");
        let a = real(&p, "0.7");
        assert_eq!(pochhammer(&a, &q, Order::Finite(0), &p).unwrap(), Complex::one(&p));
        assert_close(
            &pochhammer(&Complex::zero(&p), &q, Order::Infinite, &p).unwrap(),
            &Complex::one(&p),
            38,
        );
        let q2pi = exp_neg_pi(&p, 2);
        assert_close(
            &euler_f(&q2pi, &p).unwrap(),
            &real(&p, "0.9981290699259585132799623222452738781307"),
            38,
        );
        assert!(pochhammer(&a, &real(&p, "1.2"), Order::Infinite, &p).is_err());
    }

    #[test]
    fn euler_and_weber() {
        let p = p40();
        let q = exp_neg_pi(&p, 1);
        assert_close(
            &euler_f(&q, &p).unwrap(),
            &real(&p, "0.9549187899876741037512339781102910776327"),
            38,
        );
        assert_close(
            &weber_phi(&q, &p).unwrap(),
            &real(&p, "1.045250214354711942547595012203562068003"),
            38,
        );
        // phi(-q) = (q^2; q^2)_inf / (q; q)_inf
        let q = real(&p, "0.1");
        let q2 = &q * &q;
        let rhs = &pochhammer(&q2, &q2, Order::Infinite, &p).unwrap() / &euler_f(&q, &p).unwrap();
        assert_close(&weber_phi(&q, &p).unwrap(), &rhs, 38);
    }

    #[test]
    fn theta_values() {
        let p = p40();
        let zero = Complex::zero(&p);
        assert_eq!(theta3(&zero, &zero, &p).unwrap(), Complex::one(&p));
        assert_eq!(theta4(&zero, &zero, &p).unwrap(), Complex::one(&p));
        let q = exp_neg_pi(&p, 1);
        assert_close(
            &theta3(&zero, &q, &p).unwrap(),
            &real(&p, "1.08643481121330801457531612151022345707"),
            38,
        );
        let k = (&theta2(&q, &p).unwrap() / &theta3(&zero, &q, &p).unwrap()).powi(2);
        assert_close(&k, &real(&p, "0.7071067811865475244008443621048490392848"), 38);

        let z = Complex::from_f64(&p, 0.2, 0.1);
        let q = real(&p, "0.3");
        let t4 = theta4(&z, &q, &p).unwrap();
        let expected = Complex::new(
            crate::numerics::parse_real("0.4484585536490100117778404517677513724481", &p).unwrap(),
            crate::numerics::parse_real("0.04229228894476008122545313156786116420367", &p).unwrap(),
        );
        assert_close(&t4, &expected, 38);
        assert_close(&theta4_product(&z, &q, &p).unwrap(), &t4, 38);
        let t3 = theta3(&z, &q, &p).unwrap();
        let expected = Complex::new(
            crate::numerics::parse_real("1.575944813820448264405238668963715043595", &p).unwrap(),
            crate::numerics::parse_real("-0.05183914835187154048571791982346479741096", &p).unwrap(),
        );
        assert_close(&t3, &expected, 38);
    }

    #[test]
    fn theta_growth_guard() {
        let p = p40();
        let z = Complex::from_f64(&p, 0.0, 1.0);
        let q = real(&p, "0.3");
        assert!(matches!(theta4(&z, &q, &p), Err(Error::NonConvergence { .. })));
    }

    #[test]
    fn bilateral_s() {
        let p = p40();
        let q = real(&p, "0.1");
        assert_close(
            &theta_sum_s(&Complex::zero(&p), &q, &p).unwrap(),
            &real(&p, "1.200200002000000200000000200000000002"),
            38,
        );
        let q = real(&p, "0.2");
        let z = real(&p, "0.37");
        let s = theta_sum_s(&z, &q, &p).unwrap();
        assert_close(&s, &real(&p, "1.478796819751835498767561084742625693613"), 38);
        assert_close(&s, &theta_sum_s(&-&z, &q, &p).unwrap(), 38);
        // q^{m^2} S_{2m} = theta3(0, q)
        let q = real(&p, "0.15");
        let s2 = theta_sum_s(&Complex::from_i64(&p, 2), &q, &p).unwrap();
        let t3 = theta3(&Complex::zero(&p), &q, &p).unwrap();
        assert_close(&(&s2 * &q), &t3, 38);
    }

    #[test]
    fn agile_routes() {
        let p = p40();
        let q = real(&p, "0.05");
        let params = AgileParams::real(p.real(1), p.real(5)).unwrap();
        let prod = agile(&params, &q, Route::Product, &p).unwrap();
        let theta = agile(&params, &q, Route::Theta, &p).unwrap();
        assert_close(&prod, &real(&p, "0.9499940476544826770890802837142546775476"), 38);
        assert_close(&prod, &theta, 36);

        let q = real(&p, "0.1");
        let half = AgileParams::real(p.real(1), p.real(2)).unwrap();
        assert_close(
            &agile(&half, &q, Route::Auto, &p).unwrap(),
            &real(&p, "0.8083644791586581154049330338858876375577"),
            38,
        );
        let outside = AgileParams::real(p.real(-1), p.real(2)).unwrap();
        assert!(agile(&outside, &q, Route::Product, &p).is_err());
    }

    #[test]
    fn psi_star_forms() {
        let p = p40();
        let q = real(&p, "0.1");
        let params = AgileParams::real(p.real(1), p.real(3)).unwrap();
        let sum = psi_star(&params, &q, &p).unwrap();
        assert_close(&sum, &real(&p, "1.11001010000100100000010001000000001"), 38);
        assert_close(&sum, &psi_star_product(&params, &q, &p).unwrap(), 38);
        // a = p/2 reduces to theta3(0, q^{p/2})
        let q = real(&p, "0.3");
        let mid = AgileParams::real(p.real(1), p.real(2)).unwrap();
        assert_close(
            &psi_star(&mid, &q, &p).unwrap(),
            &real(&p, "1.61623937460951365802207791845386477486"),
            38,
        );
        assert_eq!(psi_star(&mid, &Complex::zero(&p), &p).unwrap(), Complex::one(&p));
    }

    #[test]
    fn hyperbolic_sum() {
        let p = p40();
        let s = hyperbolic_log_sum(&p.zero(), &p.real(2), &p).unwrap();
        let expected = crate::numerics::parse_real("0.003738390178339891014183139452951387976236", &p).unwrap();
        assert!(Float::with_val(p.bits(), &s - &expected).abs() < p.pow10(-38));
        let t = crate::numerics::parse_real("0.3", &p).unwrap();
        let s = hyperbolic_log_sum(&t, &p.one(), &p).unwrap();
        let expected = crate::numerics::parse_real("0.1062077124426942989066129247536362633002", &p).unwrap();
        assert!(Float::with_val(p.bits(), &s - &expected).abs() < p.pow10(-38));
        assert!(hyperbolic_log_sum(&p.real(2), &p.one(), &p).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn agile_product_matches_theta(a in 0.05f64..0.95, p_ in 0.5f64..6.0, q in 0.01f64..0.6) {
            let p = Prec::new(30).unwrap();
            let a = Float::with_val(p.bits(), p.real(a) * p_);
            let params = AgileParams::real(a.clone(), p.real(p_)).unwrap();
            let q = Complex::from_real(p.real(q));
            let prod = agile(&params, &q, Route::Product, &p).unwrap();
            let theta = agile(&params, &q, Route::Theta, &p).unwrap();
            prop_assert!((&prod - &theta).abs() < p.pow10(-25));
            // swapping a and p - a leaves the product unchanged
            let swapped = AgileParams::real(p.real(p_) - a, p.real(p_)).unwrap();
            let other = agile(&swapped, &q, Route::Product, &p).unwrap();
            prop_assert!((&prod - &other).abs() < p.pow10(-25));
        }

        #[test]
        fn theta4_series_matches_product(x in -1.5f64..1.5, y in -0.4f64..0.4, q in 0.01f64..0.4) {
            let p = Prec::new(30).unwrap();
            let z = Complex::from_f64(&p, x, y);
            let q = Complex::from_real(p.real(q));
            let series = theta4(&z, &q, &p).unwrap();
            let product = theta4_product(&z, &q, &p).unwrap();
            prop_assert!((&series - &product).abs() < p.pow10(-25));
        }
    }
}
