//! Ramanujan quantities `R*(a, b, p; q) = [a, p; q] / [b, p; q]` and
//! `R(a, b, p; q) = q^{-(a-b)/2 + (a^2-b^2)/(2p)} R*(a, b, p; q)`, their theta,
//! exponential-sum and character-product forms, the `tau` functions and `dR/dq`.

use rug::{Float, Rational};

use crate::elliptic::{modulus_from_nome, nome_from_r, Nome};
use crate::error::{Error, Result};
use crate::numerics::{prod_infinite, sum_series, Complex, Prec, Real, TailPolicy};
use crate::qfunctions::{agile, gauss_sum, nome_pow, nome_pow_real, psi_star, AgileParams, Route};

/// Parameters `(a, b, p)` of `R(a, b, p; q)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RqParams {
    pub a: Complex,
    pub b: Complex,
    pub p: Real,
}

impl RqParams {
    pub fn new(a: Complex, b: Complex, p: Real) -> Result<Self> {
        if p <= 0 {
            return Err(Error::domain("period p must be positive"));
        }
        Ok(RqParams { a, b, p })
    }

    pub fn real(a: Real, b: Real, p: Real) -> Result<Self> {
        Self::new(Complex::from_real(a), Complex::from_real(b), p)
    }

    pub fn ints(a: i64, b: i64, p: i64, prec: &Prec) -> Result<Self> {
        Self::real(prec.real(a), prec.real(b), prec.real(p))
    }

    fn numerator(&self) -> AgileParams {
        AgileParams {
            a: self.a.clone(),
            p: self.p.clone(),
        }
    }

    fn denominator(&self) -> AgileParams {
        AgileParams {
            a: self.b.clone(),
            p: self.p.clone(),
        }
    }

    /// `(a, b, p)` as reals with `0 < a, b < p`, or a domain error.
    fn product_region(&self, what: &str) -> Result<(Real, Real)> {
        let inside = |x: &Complex| x.is_real() && x.re > 0 && x.re < self.p;
        if !inside(&self.a) || !inside(&self.b) {
            return Err(Error::domain(format!("{what} needs real 0 < a, b < p")));
        }
        Ok((self.a.re.clone(), self.b.re.clone()))
    }

    /// `-(a-b)/2 + (a^2-b^2)/(2p)`.
    pub fn exponent(&self) -> Complex {
        let diff = &self.a - &self.b;
        let sum = &self.a + &self.b;
        let bits = self.p.prec();
        let inv_2p = Float::with_val(bits, 1u32) / Float::with_val(bits, &self.p * 2u32);
        &(&diff * &sum).scale(&inv_2p) - &diff.scale(&Float::with_val(bits, 0.5))
    }
}

/// `[a, p; q] / [b, p; q]`, each factor on its automatically chosen route.
pub fn rq_star(params: &RqParams, q: &Complex, prec: &Prec) -> Result<Complex> {
    if params.a == params.b {
        return Ok(Complex::one(prec));
    }
    let num = agile(&params.numerator(), q, Route::Auto, prec)?;
    if params.b.is_real() && Float::with_val(prec.bits(), &params.b.re / &params.p).is_integer() {
        return Err(Error::DivisionByZero(format!(
            "[b, p; q] vanishes at b = {} (a multiple of p)",
            params.b
        )));
    }
    let den = agile(&params.denominator(), q, Route::Auto, prec)?;
    if den.abs() < prec.eps() {
        return Err(Error::DivisionByZero(format!(
            "[b, p; q] vanishes at b = {}",
            params.b
        )));
    }
    Ok(&num / &den)
}

/// `R(a, b, p; q)` with the principal branch of `q^{exponent}`.
pub fn rq(params: &RqParams, q: &Complex, prec: &Prec) -> Result<Complex> {
    let star = rq_star(params, q, prec)?;
    Ok(&nome_pow(q, &params.exponent()) * &star)
}

/// `R` at a common zero of `[a, p; q]` and `[b, p; q]` (`a, b` in `pZ`), taken
/// as the limit along `(a + t, b + t)`, `t -> 0`: the ratio of `a`-derivatives.
pub fn rq_common_zero_limit(params: &RqParams, q: &Complex, prec: &Prec) -> Result<Complex> {
    use crate::qfunctions::agile_da;
    let num = agile_da(&params.numerator(), q, prec)?;
    let den = agile_da(&params.denominator(), q, prec)?;
    if den.abs() < prec.eps() {
        return Err(Error::DivisionByZero("d/db [b, p; q] vanishes".into()));
    }
    Ok(&nome_pow(q, &params.exponent()) * &(&num / &den))
}

/// Theta-quotient form of `R(a, b, p; e^{-x})`:
/// `exp(-x(a^2-b^2)/(2p) + x(a-b)/2) theta4((p-2a)ix/4, e^{-px/2}) / theta4((p-2b)ix/4, e^{-px/2})`.
///
/// The theta series are summed in multiplier form, so `a` and `b` may lie
/// outside `(0, p)`.
pub fn rq_theta(a: &Real, b: &Real, p: &Real, x: &Real, prec: &Prec) -> Result<Real> {
    if *x <= 0 || *p <= 0 {
        return Err(Error::domain("rq_theta needs x > 0 and p > 0"));
    }
    let bits = prec.bits();
    let nome = Complex::from_real((-Float::with_val(bits, p * x) / 2u32).exp());
    // e^{2iz} at z = (p - 2c) i x / 4 is e^{-(p - 2c) x / 2}
    let theta = |c: &Real| -> Result<Complex> {
        let lin = Float::with_val(bits, p - Float::with_val(bits, c * 2u32));
        let w = Complex::from_real(Float::with_val(bits, -(lin * x) / 2u32).exp());
        gauss_sum(&nome, &w, true, prec)
    };
    let den = theta(b)?;
    if den.abs() < prec.eps() {
        return Err(Error::DivisionByZero("theta4 denominator vanishes".into()));
    }
    let params = RqParams::real(a.clone(), b.clone(), p.clone())?;
    let prefactor = Float::with_val(bits, -(params.exponent().re * x)).exp();
    Ok((&theta(a)? / &den).re * prefactor)
}

/// Pieces of the `n`-th Lambert term `N_n / (n D_n)` with
/// `N_n = sum_{c in up} q^{cn} - sum_{c in down} q^{cn}` and `D_n = 1 - q^{pn}`;
/// `weighted` is `sum c q^{cn}` with the same signs.
struct LambertTerm {
    num: Real,
    weighted: Real,
    qpn: Real,
    den: Real,
}

fn lambert_terms(up: Vec<Real>, down: Vec<Real>, p: &Real, q: &Real, prec: &Prec) -> impl FnMut(u64) -> LambertTerm {
    let bits = prec.bits();
    let ln_q = Float::with_val(bits, q.ln_ref());
    let p = p.clone();
    move |n| {
        let n = n + 1;
        let pw = |c: &Real| (Float::with_val(bits, c * &ln_q) * n).exp();
        let mut num = Float::with_val(bits, 0);
        let mut weighted = Float::with_val(bits, 0);
        for (list, sign) in [(&up, 1i32), (&down, -1i32)] {
            for c in list {
                let t = pw(c);
                weighted += Float::with_val(bits, c * &t) * sign;
                num += t * sign;
            }
        }
        let qpn = pw(&p);
        let den = Float::with_val(bits, 1 - &qpn);
        LambertTerm {
            num,
            weighted,
            qpn,
            den,
        }
    }
}

fn pair_terms(a: &Real, b: &Real, p: &Real, q: &Real, prec: &Prec) -> impl FnMut(u64) -> LambertTerm {
    let bits = prec.bits();
    let up = vec![a.clone(), Float::with_val(bits, p - a)];
    let down = vec![b.clone(), Float::with_val(bits, p - b)];
    lambert_terms(up, down, p, q, prec)
}

fn lambert_ratio(exponents: &[&Real], q: &Real) -> f64 {
    let m = exponents.iter().map(|c| c.to_f64()).fold(f64::INFINITY, f64::min);
    q.to_f64().powf(m)
}

fn pair_ratio(a: &Real, b: &Real, p: &Real, q: &Real) -> f64 {
    let pa = Float::with_val(53, p - a);
    let pb = Float::with_val(53, p - b);
    lambert_ratio(&[a, b, &pa, &pb], q)
}

/// `(sum_n N_n / (n D_n), sum_n [M_n / D_n + p q^{pn} N_n / D_n^2])`: the
/// series whose `q`-derivative is `-(1/q)` times the second entry.
fn lambert_with_derivative(mut term: impl FnMut(u64) -> LambertTerm, p: &Real, ratio: f64, prec: &Prec) -> Result<(Real, Real)> {
    let bits = prec.bits();
    let mut log_sum = prec.zero();
    let deriv_sum = sum_series(
        |n| {
            let t = term(n);
            log_sum += Float::with_val(bits, &t.num / &t.den) / (n + 1);
            let d2 = Float::with_val(bits, t.den.square_ref());
            let second = Float::with_val(bits, p * &t.qpn) * &t.num / d2;
            Complex::from_real(t.weighted / &t.den + second)
        },
        TailPolicy::Geometric { ratio },
        prec,
    )?;
    Ok((log_sum, deriv_sum.re))
}

/// Exponential-sum form of `R(a, b, p; e^{-x})` for real `0 < a, b < p`:
/// `exp(-x((a^2-b^2)/(2p) - (a-b)/2) - sum_n (e^{anx} + e^{(p-a)nx} - e^{(p-b)nx} - e^{bnx}) / (n (e^{pnx} - 1)))`.
pub fn rq_expsum(a: &Real, b: &Real, p: &Real, x: &Real, prec: &Prec) -> Result<Real> {
    let params = RqParams::real(a.clone(), b.clone(), p.clone())?;
    params.product_region("exponential-sum form")?;
    if *x <= 0 {
        return Err(Error::domain("rq_expsum needs x > 0"));
    }
    let bits = prec.bits();
    let q = Float::with_val(bits, -x).exp();
    let mut term = pair_terms(a, b, p, &q, prec);
    let sum = sum_series(
        |n| {
            let t = term(n);
            Complex::from_real(t.num / t.den / (n + 1))
        },
        TailPolicy::Geometric {
            ratio: pair_ratio(a, b, p, &q),
        },
        prec,
    )?;
    let e = params.exponent().re;
    Ok((-(Float::with_val(bits, e * x)) - sum.re).exp())
}

/// The exponent pattern `X_2(n)` of the character product for integer `0 < a, b < p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Chi2Character {
    pub a: u64,
    pub b: u64,
    pub p: u64,
}

impl Chi2Character {
    pub fn new(a: u64, b: u64, p: u64) -> Result<Self> {
        if a == 0 || b == 0 || a >= p || b >= p {
            return Err(Error::domain("character product needs integers 0 < a, b < p"));
        }
        Ok(Chi2Character { a, b, p })
    }

    /// `[n = p-a] - [n = p-b] + [n = a] - [n = b]` modulo `p`, and 0 when `p | n`.
    pub fn exponent(&self, n: u64) -> i64 {
        let r = n % self.p;
        if r == 0 {
            return 0;
        }
        let hit = |c: u64| i64::from(r == c % self.p);
        hit(self.p - self.a) - hit(self.p - self.b) + hit(self.a) - hit(self.b)
    }

    pub fn period_sum(&self) -> i64 {
        (1..=self.p).map(|n| self.exponent(n)).sum()
    }
}

/// `prod_{n >= 1} (1 - q^n)^{X_2(n)}`, multiplied one period of `n` at a time.
pub fn rq_charprod(chi: &Chi2Character, q: &Complex, prec: &Prec) -> Result<Complex> {
    if q.abs() >= 1 {
        return Err(Error::domain("nome must satisfy |q| < 1"));
    }
    let one = Complex::one(prec);
    if chi.a == chi.b {
        return Ok(one);
    }
    let mut qn = one.clone();
    let mut n = 0u64;
    let product = prod_infinite(
        |_| {
            let mut block = one.clone();
            for _ in 0..chi.p {
                n += 1;
                qn = &qn * q;
                let e = chi.exponent(n);
                if e != 0 {
                    block = &block * &(&one - &qn).powi(e);
                }
            }
            block
        },
        q.abs_f64().powi(chi.p as i32),
        prec,
    )?;
    Ok(product.value)
}

fn sqrt_pi_over_k(q: &Real, prec: &Prec) -> Result<Real> {
    let modulus = modulus_from_nome(&Nome::from_real(q.clone())?, prec)?;
    Ok(Float::with_val(prec.bits(), prec.pi() / &modulus.big_k).sqrt())
}

/// `tau*(a, p; q) = sqrt(pi / K(k)) q^{a^2/(2p) - a/2 + p/8} psi*(a, p; q)`, where
/// `k` is the modulus attached to the real nome `q` and
/// `psi*(a, p; q) = f(-q^p) [2a, 2p; q] / [a, p; q]`.
pub fn tau_star(a: &Complex, p: &Real, q: &Real, prec: &Prec) -> Result<Complex> {
    if *q <= 0 || *q >= 1 {
        return Err(Error::domain("tau needs a real nome 0 < q < 1"));
    }
    let bits = prec.bits();
    let params = AgileParams::new(a.clone(), p.clone())?;
    let qc = Complex::from_real(q.clone());
    let inv_2p = Float::with_val(bits, 1u32) / Float::with_val(bits, p * 2u32);
    let e = &(a * a).scale(&inv_2p) - &a.scale(&Float::with_val(bits, 0.5));
    let e = e.add_real(&Float::with_val(bits, p / 8u32));
    let value = &nome_pow(&qc, &e) * &psi_star(&params, &qc, prec)?;
    Ok(value.scale(&sqrt_pi_over_k(q, prec)?))
}

/// `tau0(a, q) = tau*(a, 1; q)`.
pub fn tau0(a: &Complex, q: &Real, prec: &Prec) -> Result<Complex> {
    tau_star(a, &prec.one(), q, prec)
}

/// `dR(a, b, p; q)/dq` for real `0 < a, b < p` and `0 < q < 1`, from the
/// term-by-term derivative of the exponential-sum form:
/// `R'/R = e/q - (1/q) sum_n [M_n / D_n + p q^{pn} N_n / D_n^2]` with
/// `N_n = q^{an} + q^{(p-a)n} - q^{bn} - q^{(p-b)n}`, `D_n = 1 - q^{pn}` and
/// `M_n = a q^{an} + (p-a) q^{(p-a)n} - b q^{bn} - (p-b) q^{(p-b)n}`.
pub fn drq_dq_analytic(params: &RqParams, q: &Real, prec: &Prec) -> Result<Real> {
    let (a, b) = params.product_region("dR/dq")?;
    if *q <= 0 || *q >= 1 {
        return Err(Error::domain("dR/dq needs 0 < q < 1"));
    }
    if a == b {
        return Ok(prec.zero());
    }
    let bits = prec.bits();
    let p = &params.p;
    let (log_sum, deriv_sum) =
        lambert_with_derivative(pair_terms(&a, &b, p, q, prec), p, pair_ratio(&a, &b, p, q), prec)?;
    let e = params.exponent().re;
    let ln_q = Float::with_val(bits, q.ln_ref());
    let r = (Float::with_val(bits, &e * &ln_q) - log_sum).exp();
    Ok((e - deriv_sum) / q * r)
}

/// `R(a, b, p; q)` for real parameters in the product region, as a real.
fn rq_real(params: &RqParams, q: &Real, prec: &Prec) -> Result<Real> {
    Ok(rq(params, &Complex::from_real(q.clone()), prec)?.re)
}

/// Central difference of `R` in `q` with step `10^{-digits/2}`, evaluated at
/// raised precision so that rounding stays below the target.
pub fn drq_dq_numeric(params: &RqParams, q: &Real, prec: &Prec) -> Result<Real> {
    let half = prec.digits() / 2;
    let work = prec.raised(half);
    let bits = work.bits();
    let h = work.pow10(-(half as i32));
    let q = Float::with_val(bits, q);
    let up = rq_real(params, &Float::with_val(bits, &q + &h), &work)?;
    let down = rq_real(params, &Float::with_val(bits, &q - &h), &work)?;
    Ok(Float::with_val(prec.bits(), (up - down) / (h * 2u32)))
}

/// `dR/dq`, analytic, cross-checked against the central difference to
/// `10^{-digits/3}` relative to `max(1, |dR/dq|)`.
pub fn drq_dq(params: &RqParams, q: &Real, prec: &Prec) -> Result<Real> {
    let analytic = drq_dq_analytic(params, q, prec)?;
    let numeric = drq_dq_numeric(params, q, prec)?;
    let bits = prec.bits();
    let scale = Float::with_val(bits, analytic.abs_ref()).max(&prec.one());
    let gap = Float::with_val(bits, &analytic - &numeric).abs() / scale;
    let tol = prec.pow10(-((prec.digits() / 3) as i32));
    if gap >= tol {
        return Err(Error::CrossCheck(format!(
            "dR/dq routes disagree: analytic {} vs central difference {} (gap {:e})",
            analytic.to_f64(),
            numeric.to_f64(),
            gap.to_f64()
        )));
    }
    Ok(analytic)
}

/// `R'(q) q pi^2 / K(k_r)^2` at `q = e^{-pi sqrt r}`.
pub fn drq_normalized(params: &RqParams, r: &Rational, prec: &Prec) -> Result<Real> {
    let nome = nome_from_r(r, prec)?;
    let q = nome.q.re.clone();
    let big_k = modulus_from_nome(&nome, prec)?.big_k;
    let bits = prec.bits();
    let pi2 = Float::with_val(bits, prec.pi().square_ref());
    let k2 = Float::with_val(bits, big_k.square_ref());
    Ok(drq_dq(params, &q, prec)? * q * pi2 / k2)
}

/// `q^{p/12 - a/2 + a^2/(2p)} [a, p; q]`, the normalized Agile quantity.
pub fn agile_normalized(a: &Real, p: &Real, q: &Real, prec: &Prec) -> Result<Real> {
    let bits = prec.bits();
    let params = AgileParams::real(a.clone(), p.clone())?;
    let qc = Complex::from_real(q.clone());
    let e = Float::with_val(bits, p / 12u32) - Float::with_val(bits, a / 2u32)
        + Float::with_val(bits, a.square_ref()) / Float::with_val(bits, p * 2u32);
    let value = &nome_pow_real(&qc, &e) * &agile(&params, &qc, Route::Auto, prec)?;
    Ok(value.re)
}

/// `d/dq (q^{p/12 - a/2 + a^2/(2p)} [a, p; q])` for real `0 < a < p`, `0 < q < 1`,
/// from the Lambert series of `log [a, p; q]`.
pub fn agile_normalized_dq(a: &Real, p: &Real, q: &Real, prec: &Prec) -> Result<Real> {
    if *a <= 0 || a >= p || *q <= 0 || *q >= 1 {
        return Err(Error::domain("needs 0 < a < p and 0 < q < 1"));
    }
    let bits = prec.bits();
    let pa = Float::with_val(bits, p - a);
    let ratio = lambert_ratio(&[a, &pa], q);
    let term = lambert_terms(vec![a.clone(), pa], Vec::new(), p, q, prec);
    let (log_sum, deriv_sum) = lambert_with_derivative(term, p, ratio, prec)?;
    let e = Float::with_val(bits, p / 12u32) - Float::with_val(bits, a / 2u32)
        + Float::with_val(bits, a.square_ref()) / Float::with_val(bits, p * 2u32);
    let ln_q = Float::with_val(bits, q.ln_ref());
    let value = (Float::with_val(bits, &e * &ln_q) - log_sum).exp();
    Ok((e - deriv_sum) / q * value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cfrac::r1_product;
    use crate::numerics::{gamma, parse_real};
    use proptest::prelude::*;
    use rug::ops::Pow;

    fn p40() -> Prec {
        Prec::new(40).unwrap()
    }

    fn close(a: &Complex, b: &Complex, digits: i32) -> bool {
        let p = p40();
        (a - b).abs() < p.pow10(-digits)
    }

    fn exp_neg_pi(p: &Prec, scale: f64) -> Real {
        Float::with_val(p.bits(), -p.pi() * scale).exp()
    }

    #[test]
    fn rq_star_trivial_and_rogers_ramanujan() {
        let p = p40();
        let q = Complex::from_real(exp_neg_pi(&p, 2.0));
        let same = RqParams::ints(2, 2, 5, &p).unwrap();
        assert_eq!(rq_star(&same, &q, &p).unwrap(), Complex::one(&p));
        let params = RqParams::ints(1, 2, 5, &p).unwrap();
        let r = rq(&params, &q, &p).unwrap();
        assert!(close(&r, &r1_product(&q, &p).unwrap(), 38));
        assert!(close(
            &r,
            &Complex::from_real(parse_real("0.2840790438404122960282918323931261690911", &p).unwrap()),
            38
        ));
        let q = Complex::from_real(parse_real("0.1", &p).unwrap());
        let ab = rq_star(&RqParams::ints(1, 3, 7, &p).unwrap(), &q, &p).unwrap();
        let ba = rq_star(&RqParams::ints(3, 1, 7, &p).unwrap(), &q, &p).unwrap();
        assert!(close(&(&ab * &ba), &Complex::one(&p), 38));
    }

    #[test]
    fn half_period_parameters() {
        let p = p40();
        let q = Complex::from_real(parse_real("0.2", &p).unwrap());
        // R(a + kp, a) = (-1)^k: shifting by one period flips the sign
        let odd = RqParams::ints(1, 3, 2, &p).unwrap();
        assert!(close(&rq(&odd, &q, &p).unwrap(), &-Complex::one(&p), 36));
        let even = RqParams::ints(1, 5, 2, &p).unwrap();
        assert!(close(&rq(&even, &q, &p).unwrap(), &Complex::one(&p), 36));
    }

    #[test]
    fn common_zero_limit() {
        let p = p40();
        let q = Complex::from_real(parse_real("0.3", &p).unwrap());
        let params = RqParams::ints(6, 12, 3, &p).unwrap();
        assert!(rq(&params, &q, &p).is_err());
        let limit = rq_common_zero_limit(&params, &q, &p).unwrap();
        assert!(close(&limit, &Complex::one(&p), 35), "{limit}");
    }

    #[test]
    fn four_routes_agree() {
        let p = p40();
        let x = parse_real("0.9", &p).unwrap();
        let q = Float::with_val(p.bits(), -&x).exp();
        let qc = Complex::from_real(q.clone());
        for (a, b, per) in [(1u64, 2u64, 5u64), (1, 3, 8), (1, 2, 4), (2, 3, 7)] {
            let params = RqParams::ints(a as i64, b as i64, per as i64, &p).unwrap();
            let direct = rq(&params, &qc, &p).unwrap();
            let (ar, br, pr) = (p.real(a), p.real(b), p.real(per));
            let theta = rq_theta(&ar, &br, &pr, &x, &p).unwrap();
            let expsum = rq_expsum(&ar, &br, &pr, &x, &p).unwrap();
            let chi = Chi2Character::new(a, b, per).unwrap();
            let star = rq_charprod(&chi, &qc, &p).unwrap();
            let star_direct = rq_star(&params, &qc, &p).unwrap();
            assert!(close(&direct, &Complex::from_real(theta), 37));
            assert!(close(&direct, &Complex::from_real(expsum), 37));
            assert!(close(&star, &star_direct, 37), "{a} {b} {per}: {star} vs {star_direct}");
        }
    }

    #[test]
    fn character_table() {
        let chi = Chi2Character::new(1, 2, 5).unwrap();
        let legendre = [0, 1, -1, -1, 1];
        for n in 1..=20 {
            assert_eq!(chi.exponent(n), legendre[(n % 5) as usize]);
        }
        assert_eq!(chi.period_sum(), 0);
        assert!(Chi2Character::new(2, 2, 5).unwrap().exponent(7) == 0);
        assert!(Chi2Character::new(5, 2, 5).is_err());
    }

    #[test]
    fn tau_identities() {
        let p = p40();
        let q = parse_real("0.1", &p).unwrap();
        let a = Complex::from_real(parse_real("0.3", &p).unwrap());
        let per = parse_real("1.7", &p).unwrap();
        let base = tau_star(&a, &per, &q, &p).unwrap();
        let shifted = a.add_real(&Float::with_val(p.bits(), &per * 2u32));
        assert!(close(&base, &tau_star(&shifted, &per, &q, &p).unwrap(), 37));
        let reflected = (-&a).add_real(&Float::with_val(p.bits(), &per * 2u32));
        assert!(close(&base, &tau_star(&reflected, &per, &q, &p).unwrap(), 37));

        // tau0(1) / tau0(1/2) at q = e^{-2 pi} is k_1^{1/2} = 2^{-1/4}
        let q = exp_neg_pi(&p, 2.0);
        let ratio = &tau0(&Complex::from_i64(&p, 1), &q, &p).unwrap()
            / &tau0(&Complex::from_real(p.ratio(1, 2)), &q, &p).unwrap();
        let target = Float::with_val(p.bits(), p.real(2).pow(p.ratio(-1, 4)));
        assert!(close(&ratio, &Complex::from_real(target), 37));
    }

    #[test]
    fn derivative_closed_form() {
        let p = p40();
        let q = exp_neg_pi(&p, 1.0);
        let params = RqParams::ints(1, 2, 4, &p).unwrap();
        let d = drq_dq(&params, &q, &p).unwrap();
        let bits = p.bits();
        let g = gamma(&p.ratio(1, 4), &p).unwrap();
        let g4 = Float::with_val(bits, g.square_ref()).square();
        let pi3 = Float::with_val(bits, p.pi().square_ref()) * p.pi();
        let two58 = p.real(2).pow(p.ratio(5, 8));
        let expected = Float::with_val(bits, p.pi().exp()) * g4 / (pi3 * two58 * 64u32);
        assert!(Float::with_val(bits, &d - &expected).abs() < p.pow10(-37), "{d} vs {expected}");
        let zero = drq_dq(&RqParams::ints(2, 2, 5, &p).unwrap(), &q, &p).unwrap();
        assert_eq!(zero, 0);
    }

    #[test]
    fn derivative_rho() {
        let p = p40();
        let q = exp_neg_pi(&p, 1.0);
        let d = drq_dq(&RqParams::ints(1, 2, 5, &p).unwrap(), &q, &p).unwrap();
        let bits = p.bits();
        let g = gamma(&p.ratio(1, 4), &p).unwrap();
        let g4 = Float::with_val(bits, g.square_ref()).square();
        let pi3 = Float::with_val(bits, p.pi().square_ref()) * p.pi();
        let rho = d * pi3 * 16u32 / (Float::with_val(bits, p.pi().exp()) * g4);
        let coeffs: [i64; 9] = [16, 0, -240, 800, -2900, -6000, -6500, 17500, 625];
        let mut acc = p.zero();
        for c in coeffs.iter().rev() {
            acc = acc * &rho + *c;
        }
        assert!(acc.abs() < p.pow10(-30));
    }

    #[test]
    fn normalized_agile_derivative() {
        let p = p40();
        let bits = p.bits();
        let (a, per) = (p.real(1), p.real(5));
        let q = parse_real("0.13", &p).unwrap();
        let d = agile_normalized_dq(&a, &per, &q, &p).unwrap();
        let work = p.raised(25);
        let h = work.pow10(-25);
        let up = agile_normalized(&a, &per, &Float::with_val(work.bits(), &q + &h), &work).unwrap();
        let down = agile_normalized(&a, &per, &Float::with_val(work.bits(), &q - &h), &work).unwrap();
        let numeric = Float::with_val(bits, (up - down) / (h * 2u32));
        assert!(Float::with_val(bits, &d - &numeric).abs() < p.pow10(-38));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn theta_and_product_agree(a in 0.05f64..0.95, b in 0.05f64..0.95, per in 0.5f64..4.0, x in 0.3f64..3.0) {
            let p = Prec::new(30).unwrap();
            let bits = p.bits();
            let (a, b, pr) = (Float::with_val(bits, p.real(a) * per), Float::with_val(bits, p.real(b) * per), p.real(per));
            let x = p.real(x);
            let q = Complex::from_real(Float::with_val(bits, -&x).exp());
            let params = RqParams::real(a.clone(), b.clone(), pr.clone()).unwrap();
            let direct = rq(&params, &q, &p).unwrap();
            let theta = rq_theta(&a, &b, &pr, &x, &p).unwrap();
            let expsum = rq_expsum(&a, &b, &pr, &x, &p).unwrap();
            let tol = p.pow10(-24) * Float::with_val(bits, direct.abs()).max(&p.one());
            prop_assert!(Float::with_val(bits, &direct.re - &theta).abs() < tol);
            prop_assert!(Float::with_val(bits, &direct.re - &expsum).abs() < tol);
        }

        #[test]
        fn tau_star_sum_difference(a in 0.1f64..2.0, b in 0.1f64..2.0, n in 1u32..4, plus in any::<bool>()) {
            let p = Prec::new(30).unwrap();
            let bits = p.bits();
            let (a, b) = (p.real(a), p.real(b));
            let sep = if plus { Float::with_val(bits, &a + &b) } else { Float::with_val(bits, &a - &b).abs() };
            prop_assume!(sep > 0.05);
            let per = sep / n;
            let q = p.real(0.15);
            let ta = tau_star(&Complex::from_real(a), &per, &q, &p).unwrap();
            let tb = tau_star(&Complex::from_real(b), &per, &q, &p).unwrap();
            prop_assert!((&ta - &tb).abs() < p.pow10(-25));
        }
    }
}

