//! R(a, b, p; q) in its four forms, the tau functions, the trivial values of
//! R, its values at complex arguments, and the first derivative.

use ellq_core::elliptic::singular_modulus;
use ellq_core::qfunctions::{agile, psi_star, psi_star_product, AgileParams, Route};
use ellq_core::rquantity::{
    drq_dq_analytic, drq_dq_numeric, rq, rq_charprod, rq_common_zero_limit, rq_expsum, rq_theta, tau0, tau_star,
    Chi2Character, RqParams,
};
use ellq_core::{Complex, Prec, Real, Result};
use rug::{Float, Rational};

use super::{cx, nome, real, rpow};
use crate::check::{CheckCtx, IdentityCheck, Tolerance};
use crate::table::derivative_constants;

pub(super) fn checks() -> Vec<IdentityCheck> {
    vec![
        IdentityCheck::new(
            "thm3.theta",
            "theta-quotient form of R(a, b, p; e^{-x}) against the product form",
            "R(a,b,p;e^{-x}) = exp(-x(a^2-b^2)/(2p) + x(a-b)/2) theta4((p-2a)ix/4, e^{-px/2}) / theta4((p-2b)ix/4, e^{-px/2})",
            thm3_theta,
        ),
        IdentityCheck::new(
            "thm3.expsum",
            "exponential-sum form of R(a, b, p; e^{-x}) against the product form",
            "R(a,b,p;e^{-x}) = exp(-x((a^2-b^2)/(2p) - (a-b)/2) - sum_n (e^{anx} + e^{(p-a)nx} - e^{(p-b)nx} - e^{bnx}) / (n (e^{pnx} - 1)))",
            thm3_expsum,
        ),
        IdentityCheck::new(
            "thm4.charprod",
            "product, theta, exponential-sum and character-product forms agree for integer parameters",
            "R*(a,b,p;q) = prod_{n>=1} (1 - q^n)^{X_2(n)}",
            thm4_charprod,
        ),
        IdentityCheck::new(
            "app1.agile-sum",
            "the Agile product against its alternating Gaussian sum",
            "[a,p;q] = (1/f(-q^p)) sum_{n in Z} (-1)^n q^{pn^2/2 + (p-2a)n/2}",
            agile_sum,
        ),
        IdentityCheck::new(
            "psistar.product",
            "psi* as a Gaussian sum, a product, and a quotient of Agile quantities",
            "psi*(a,p;q) = sum_n q^{pn^2/2 + (p-2a)n/2} = f(-q^p)(-q^a;q^p)(-q^{p-a};q^p) = f(-q^p)[2a,2p;q]/[a,p;q]",
            psi_star_forms,
        ),
        IdentityCheck::new(
            "tau.periodic",
            "tau* and tau0 are unchanged by a -> np +- a",
            "tau*(a,p;q) = tau*(np +- a,p;q), tau0(a,q) = tau0(n +- a,q)",
            tau_periodic,
        ),
        IdentityCheck::new(
            "tau.critical",
            "the a-derivative of tau0 vanishes at integers (central difference, step 10^{-digits/3})",
            "d tau0(a,q)/da = 0 for a in Z",
            tau_critical,
        )
        .tolerance(Tolerance::Fraction(3)),
        IdentityCheck::new(
            "thm5.sum-diff",
            "tau* agrees at a and b when the period is |a +- b|/n",
            "tau*(a, |a +- b|/n; q) = tau*(b, |a +- b|/n; q)",
            thm5_sum_diff,
        ),
        IdentityCheck::new(
            "thm5.rational",
            "rational form of the tau* symmetry",
            "tau*(1/a, gcd(a,b)/(ab); q) = tau*(1/b, gcd(a,b)/(ab); q)",
            thm5_rational,
        ),
        IdentityCheck::new(
            "thm7.half-same-parity",
            "R at odd multiples of p/2 whose multipliers have the same parity",
            "R((2m1+1)p/2, (2m2+1)p/2, p; q) = 1, m1 = m2 mod 2",
            thm7_half_same,
        ),
        IdentityCheck::new(
            "thm7.half-mixed-parity",
            "R at odd multiples of p/2 whose multipliers have different parity",
            "R((2m1+1)p/2, (2m2+1)p/2, p; q) = 1, m1 != m2 mod 2",
            thm7_half_mixed,
        )
        .discrepancy(),
        IdentityCheck::new(
            "thm7.even",
            "R at even multiples of p, as the limit along a common shift of a and b",
            "R(2m1 p, 2m2 p, p; q) = 1",
            thm7_even,
        ),
        IdentityCheck::new(
            "thm7.reciprocal",
            "R(a, b) R(b, a) = 1, including complex a and b",
            "R(a,b,p;q) R(b,a,p;q) = 1",
            thm7_reciprocal,
        ),
        IdentityCheck::new(
            "thm8.magnitude",
            "modulus of R at the complex arguments -mp + i/sqrt(r)",
            "|R(-mp + i/sqrt r, p/2 - mp + i/sqrt r, p; e^{-pi sqrt r})| = k_{p^2 r/4}^{1/2}",
            thm8_magnitude,
        ),
        IdentityCheck::new(
            "thm8.modulus",
            "value of R at the complex arguments -mp + i/sqrt(r) with the (-i)^m phase",
            "R(-mp + i/sqrt r, p/2 - mp + i/sqrt r, p; e^{-pi sqrt r}) = (-i)^m k_{p^2 r/4}^{1/2}",
            thm8_modulus,
        )
        .discrepancy(),
        IdentityCheck::new(
            "thm8.proof-form",
            "the same value written with c = i pi / log q",
            "R(A, B, p; q^{2/p}) = k_r^{1/2} (-i)^m, A = -(2m+c)p/2, B = -(2m+c-1)p/2, q = e^{-pi sqrt r}",
            thm8_proof_form,
        )
        .discrepancy(),
        IdentityCheck::new(
            "thm8.example-quarter",
            "complex-argument example with value 2^{-1/4}",
            "R(-p(2m+i)/2, -p(2m+i-1)/2, p; e^{-2pi/p}) = (-i)^m 2^{-1/4}",
            thm8_example_quarter,
        )
        .discrepancy(),
        IdentityCheck::new(
            "thm8.example-sqrt2",
            "complex-argument example with value sqrt(sqrt2 - 1)",
            "R(-(sqrt2 - 4mi) p i/4, -(2 - i sqrt2 - 4m) p/4, p; e^{-pi sqrt2/p}) = (-i)^m sqrt(sqrt2 - 1)",
            thm8_example_sqrt2,
        )
        .discrepancy(),
        IdentityCheck::new(
            "cor.tau-ratio",
            "tau0 at an integer over tau0 at a half-integer",
            "tau0(m+1, q) / tau0(m+1/2, q) = k_{r/4}^{1/2}, q = e^{-pi sqrt r}",
            tau_ratio,
        ),
        IdentityCheck::new(
            "deriv.constants",
            "dR/dq at e^{-pi} for (1,2,4) and (1,2,5) against their closed forms",
            "R'(1,2,4;e^{-pi}) = e^pi Gamma(1/4)^4/(64 2^{5/8} pi^3); R'(1,2,5;e^{-pi}) = e^pi Gamma(1/4)^4 rho/(16 pi^3)",
            derivative_closed_forms,
        ),
        IdentityCheck::new(
            "deriv.routes",
            "analytic dR/dq against a central difference with step 10^{-digits/2}",
            "d/dq R(a,b,p;q) from the differentiated exponential sum = (R(q+h) - R(q-h))/(2h) + O(h^2)",
            derivative_routes,
        )
        .tolerance(Tolerance::Fraction(3)),
    ]
}

/// `0 < a, b < p` with `a != b`, and `x`.
fn real_params(ctx: &mut CheckCtx) -> (Real, Real, Real, Real) {
    let prec = ctx.prec.clone();
    let p = ctx.sampler.rational(1.0, 8.0);
    let top = p.to_f64();
    let a = ctx.sampler.rational(0.05 * top, 0.95 * top);
    let mut b = ctx.sampler.rational(0.05 * top, 0.95 * top);
    if b == a {
        b = Rational::from(&a / 2u32);
    }
    let x = ctx.sampler.rational(0.3, 3.0);
    (real(&a, &prec), real(&b, &prec), real(&p, &prec), real(&x, &prec))
}

fn q_of_x(x: &Real, prec: &Prec) -> Complex {
    cx(Float::with_val(prec.bits(), -x).exp())
}

fn product_route(a: &Real, b: &Real, p: &Real, q: &Complex, prec: &Prec) -> Result<Complex> {
    rq(&RqParams::real(a.clone(), b.clone(), p.clone())?, q, prec)
}

fn thm3_theta(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    for _ in 0..5 {
        let (a, b, p, x) = real_params(ctx);
        let lhs = product_route(&a, &b, &p, &q_of_x(&x, &prec), &prec)?;
        ctx.compare(&lhs, &cx(rq_theta(&a, &b, &p, &x, &prec)?));
    }
    Ok(())
}

fn thm3_expsum(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    for _ in 0..5 {
        let (a, b, p, x) = real_params(ctx);
        let lhs = product_route(&a, &b, &p, &q_of_x(&x, &prec), &prec)?;
        ctx.compare(&lhs, &cx(rq_expsum(&a, &b, &p, &x, &prec)?));
    }
    Ok(())
}

fn thm4_charprod(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    let bits = prec.bits();
    for (a, b, p) in [(1u64, 2u64, 5u64), (1, 3, 8), (1, 2, 4), (2, 3, 7)] {
        let chi = Chi2Character::new(a, b, p)?;
        let (ar, br, pr) = (prec.real(a), prec.real(b), prec.real(p));
        let params = RqParams::real(ar.clone(), br.clone(), pr.clone())?;
        for q in [prec.ratio(1, 10), nome(&Rational::from(1), &prec)] {
            let x = -Float::with_val(bits, q.ln_ref());
            let qc = cx(q);
            let product = rq(&params, &qc, &prec)?;
            let star = &rq_charprod(&chi, &qc, &prec)? * &ellq_core::qfunctions::nome_pow(&qc, &params.exponent());
            ctx.compare(&star, &product);
            ctx.compare(&cx(rq_theta(&ar, &br, &pr, &x, &prec)?), &product);
            ctx.compare(&cx(rq_expsum(&ar, &br, &pr, &x, &prec)?), &product);
        }
    }
    Ok(())
}

fn agile_points(ctx: &mut CheckCtx, count: usize) -> Vec<(Real, Real, Real)> {
    let prec = ctx.prec.clone();
    let mut points = vec![(prec.real(1), prec.real(5), prec.ratio(1, 10))];
    for _ in 0..count {
        let p = ctx.sampler.rational(0.5, 6.0);
        let a = ctx.sampler.rational(0.05 * p.to_f64(), 0.95 * p.to_f64());
        let q = ctx.sampler.rational(0.05, 0.7);
        points.push((real(&a, &prec), real(&p, &prec), real(&q, &prec)));
    }
    points
}

fn agile_sum(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    for (a, p, q) in agile_points(ctx, 5) {
        let params = AgileParams::real(a, p)?;
        let q = cx(q);
        let product = agile(&params, &q, Route::Product, &prec)?;
        ctx.compare(&agile(&params, &q, Route::Theta, &prec)?, &product);
    }
    Ok(())
}

fn psi_star_forms(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    let bits = prec.bits();
    for (a, p, q) in agile_points(ctx, 4) {
        let qc = cx(q.clone());
        let params = AgileParams::real(a.clone(), p.clone())?;
        let sum = psi_star(&params, &qc, &prec)?;
        ctx.compare(&sum, &psi_star_product(&params, &qc, &prec)?);
        let doubled = AgileParams::real(Float::with_val(bits, &a * 2u32), Float::with_val(bits, &p * 2u32))?;
        let f = ellq_core::qfunctions::euler_f(&cx(super::rpow_real(&q, &p, &prec)), &prec)?;
        let quotient = &(&f * &agile(&doubled, &qc, Route::Product, &prec)?)
            / &agile(&params, &qc, Route::Product, &prec)?;
        ctx.compare(&sum, &quotient);
    }
    Ok(())
}

fn tau_periodic(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    let bits = prec.bits();
    let mut points = vec![(prec.ratio(3, 10), prec.ratio(17, 10), 2i64, prec.ratio(1, 10))];
    for _ in 0..3 {
        let a = ctx.sampler.rational(-2.0, 2.0);
        let p = ctx.sampler.rational(0.3, 3.0);
        let n = ctx.sampler.int(1, 3);
        let q = ctx.sampler.rational(0.05, 0.6);
        points.push((real(&a, &prec), real(&p, &prec), n, real(&q, &prec)));
    }
    for (a, p, n, q) in points {
        let base = tau_star(&cx(a.clone()), &p, &q, &prec)?;
        let np = Float::with_val(bits, &p * n);
        for shifted in [Float::with_val(bits, &np + &a), Float::with_val(bits, &np - &a)] {
            ctx.compare(&tau_star(&cx(shifted), &p, &q, &prec)?, &base);
        }
        let base0 = tau0(&cx(a.clone()), &q, &prec)?;
        for shifted in [Float::with_val(bits, &a + n), Float::with_val(bits, n - &a)] {
            ctx.compare(&tau0(&cx(shifted), &q, &prec)?, &base0);
        }
    }
    Ok(())
}

fn tau_critical(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    let bits = prec.bits();
    let h = prec.pow10(-((prec.digits() / 3) as i32));
    let mut points = vec![(1i64, prec.ratio(1, 5))];
    let n = ctx.sampler.int(-2, 3);
    let q = ctx.sampler.rational(0.05, 0.6);
    points.push((n, real(&q, &prec)));
    for (n, q) in points {
        let a = prec.real(n);
        let up = tau0(&cx(Float::with_val(bits, &a + &h)), &q, &prec)?;
        let down = tau0(&cx(Float::with_val(bits, &a - &h)), &q, &prec)?;
        let slope = (&up - &down).abs() / Float::with_val(bits, &h * 2u32);
        ctx.record(&slope);
    }
    Ok(())
}

fn thm5_sum_diff(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    let bits = prec.bits();
    for _ in 0..3 {
        let a = real(&ctx.sampler.rational(0.1, 3.0), &prec);
        let b = real(&ctx.sampler.rational(-3.0, 3.0), &prec);
        let q = real(&ctx.sampler.rational(0.05, 0.6), &prec);
        for n in 1..=3u32 {
            for period in [Float::with_val(bits, &a + &b), Float::with_val(bits, &a - &b)] {
                let p = period.abs() / n;
                if p < prec.ratio(1, 100) {
                    continue;
                }
                let left = tau_star(&cx(a.clone()), &p, &q, &prec)?;
                ctx.compare(&left, &tau_star(&cx(b.clone()), &p, &q, &prec)?);
            }
        }
    }
    Ok(())
}

fn thm5_rational(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    for q in [prec.ratio(1, 10), nome(&Rational::from(1), &prec)] {
        for (a, b) in [(2i64, 3i64), (4, 6), (3, 5), (6, 9)] {
            let g = num_gcd(a, b);
            let p = prec.ratio(g, a * b);
            let left = tau_star(&cx(prec.ratio(1, a)), &p, &q, &prec)?;
            ctx.compare(&left, &tau_star(&cx(prec.ratio(1, b)), &p, &q, &prec)?);
        }
    }
    Ok(())
}

fn num_gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        num_gcd(b, a % b)
    }
}

fn half_multiple_gap(ctx: &mut CheckCtx, same_parity: bool) -> Result<()> {
    let prec = ctx.prec.clone();
    let bits = prec.bits();
    let mut points = vec![(0i64, 1i64, prec.real(2), prec.ratio(1, 5))];
    for _ in 0..4 {
        let m1 = ctx.sampler.int(-2, 2);
        let m2 = ctx.sampler.int(-2, 2);
        let p = real(&ctx.sampler.rational(0.5, 5.0), &prec);
        let q = real(&ctx.sampler.rational(0.05, 0.6), &prec);
        points.push((m1, m2, p, q));
    }
    for (m1, mut m2, p, q) in points {
        if ((m1 - m2) % 2 == 0) != same_parity {
            m2 += 1;
        }
        let half = |m: i64| Float::with_val(bits, &p * (2 * m + 1)) / 2u32;
        let params = RqParams::real(half(m1), half(m2), p.clone())?;
        ctx.compare(&rq(&params, &cx(q), &prec)?, &Complex::one(&prec));
    }
    Ok(())
}

fn thm7_half_same(ctx: &mut CheckCtx) -> Result<()> {
    half_multiple_gap(ctx, true)
}

fn thm7_half_mixed(ctx: &mut CheckCtx) -> Result<()> {
    half_multiple_gap(ctx, false)
}

fn thm7_even(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    let bits = prec.bits();
    let mut points = vec![(1i64, 2i64, prec.real(2), prec.ratio(1, 5))];
    for _ in 0..4 {
        let m1 = ctx.sampler.int(-2, 2);
        let mut m2 = ctx.sampler.int(-2, 2);
        if m2 == m1 {
            m2 += 1;
        }
        let p = real(&ctx.sampler.rational(0.5, 5.0), &prec);
        let q = real(&ctx.sampler.rational(0.05, 0.6), &prec);
        points.push((m1, m2, p, q));
    }
    for (m1, m2, p, q) in points {
        let even = |m: i64| Float::with_val(bits, &p * (2 * m));
        let params = RqParams::real(even(m1), even(m2), p.clone())?;
        ctx.compare(&rq_common_zero_limit(&params, &cx(q), &prec)?, &Complex::one(&prec));
    }
    Ok(())
}

fn thm7_reciprocal(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    let mut points = vec![(
        Complex::from_i64(&prec, 1),
        Complex::from_i64(&prec, 3),
        prec.real(7),
        prec.ratio(1, 10),
    )];
    for _ in 0..4 {
        let p = ctx.sampler.rational(1.0, 6.0);
        let top = p.to_f64();
        let a = Complex::new(
            real(&ctx.sampler.rational(-top, 2.0 * top), &prec),
            real(&ctx.sampler.rational(-1.0, 1.0), &prec),
        );
        let b = Complex::new(
            real(&ctx.sampler.rational(0.05 * top, 0.95 * top), &prec),
            real(&ctx.sampler.rational(-1.0, 1.0), &prec),
        );
        let q = real(&ctx.sampler.rational(0.05, 0.6), &prec);
        points.push((a, b, real(&p, &prec), q));
    }
    for (a, b, p, q) in points {
        let q = cx(q);
        let forward = rq(&RqParams::new(a.clone(), b.clone(), p.clone())?, &q, &prec)?;
        let backward = rq(&RqParams::new(b, a, p)?, &q, &prec)?;
        ctx.compare(&(&forward * &backward), &Complex::one(&prec));
    }
    Ok(())
}

/// `(-i)^m`.
fn minus_i_pow(m: i64, prec: &Prec) -> Complex {
    match m.rem_euclid(4) {
        0 => Complex::one(prec),
        1 => -Complex::i(prec),
        2 => -Complex::one(prec),
        _ => Complex::i(prec),
    }
}

/// `R(-mp + i/sqrt r, p/2 - mp + i/sqrt r, p; e^{-pi sqrt r})`.
fn thm8_value(m: i64, p: &Rational, r: &Rational, prec: &Prec) -> Result<Complex> {
    let bits = prec.bits();
    let pr = real(p, prec);
    let shift = Float::with_val(bits, &pr * m);
    let im = Float::with_val(bits, 1u32) / real(r, prec).sqrt();
    let a = Complex::new(-shift.clone(), im.clone());
    let b = Complex::new(Float::with_val(bits, &pr / 2u32) - shift, im);
    rq(&RqParams::new(a, b, pr)?, &cx(nome(r, prec)), prec)
}

const THM8_POINTS: [(i64, (i64, i64), (i64, i64)); 6] =
    [(0, (2, 1), (1, 1)), (1, (2, 1), (1, 1)), (0, (1, 1), (4, 1)), (2, (1, 1), (2, 1)), (3, (3, 2), (1, 1)), (1, (1, 2), (3, 1))];

fn thm8_root_k(p: &Rational, r: &Rational, prec: &Prec) -> Result<Real> {
    let index = Rational::from(p * p) * r / 4u32;
    Ok(singular_modulus(&index, prec)?.sqrt())
}

fn thm8_magnitude(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    for (m, p, r) in THM8_POINTS {
        let (p, r) = (Rational::from(p), Rational::from(r));
        let value = thm8_value(m, &p, &r, &prec)?;
        ctx.compare_real(&value.abs(), &thm8_root_k(&p, &r, &prec)?);
    }
    Ok(())
}

fn thm8_modulus(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    for (m, p, r) in THM8_POINTS {
        let (p, r) = (Rational::from(p), Rational::from(r));
        let value = thm8_value(m, &p, &r, &prec)?;
        let target = minus_i_pow(m, &prec).scale(&thm8_root_k(&p, &r, &prec)?);
        ctx.compare(&value, &target);
    }
    Ok(())
}

fn thm8_proof_form(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    let bits = prec.bits();
    for (m, p, r) in [(0i64, 2i64, 1i64), (1, 2, 1), (0, 1, 2), (2, 3, 1)] {
        let (pr, r) = (prec.real(p), Rational::from(r));
        let q = nome(&r, &prec);
        let ln_q = Float::with_val(bits, q.ln_ref());
        // c = i pi / log q
        let c = Complex::new(prec.zero(), Float::with_val(bits, prec.pi() / &ln_q));
        let half_p = Float::with_val(bits, &pr / 2u32);
        let a = -(c.add_real(&prec.real(2 * m))).scale(&half_p);
        let b = -(c.add_real(&prec.real(2 * m - 1))).scale(&half_p);
        let nome_arg = cx(rpow(&q, 2, p, &prec));
        let value = rq(&RqParams::new(a, b, pr)?, &nome_arg, &prec)?;
        let target = minus_i_pow(m, &prec).scale(&singular_modulus(&r, &prec)?.sqrt());
        ctx.compare(&value, &target);
    }
    Ok(())
}

fn thm8_example_quarter(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    let bits = prec.bits();
    let quarter = rpow(&prec.real(2), -1, 4, &prec);
    for (p, m) in [((2, 1), 0i64), ((2, 1), 1), ((2, 1), 2), ((1, 1), 3), ((3, 2), 1)] {
        let pr = real(&Rational::from(p), &prec);
        let half_p = Float::with_val(bits, &pr / 2u32);
        let i = Complex::i(&prec);
        let a = -(i.add_real(&prec.real(2 * m))).scale(&half_p);
        let b = -(i.add_real(&prec.real(2 * m - 1))).scale(&half_p);
        let q = Float::with_val(bits, -prec.pi() * 2u32 / &pr).exp();
        let value = rq(&RqParams::new(a, b, pr)?, &cx(q), &prec)?;
        ctx.compare(&value, &minus_i_pow(m, &prec).scale(&quarter));
    }
    Ok(())
}

fn thm8_example_sqrt2(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    let bits = prec.bits();
    let sqrt2 = prec.real(2).sqrt();
    let target_abs = Float::with_val(bits, &sqrt2 - 1u32).sqrt();
    for (p, m) in [((2, 1), 0i64), ((2, 1), 1), ((1, 1), 0), ((3, 2), 2)] {
        let pr = real(&Rational::from(p), &prec);
        let quarter_p = Float::with_val(bits, &pr / 4u32);
        // a = -(sqrt2 - 4mi) i p/4 = -(4m + sqrt2 i) p/4
        let a = Complex::new(
            -Float::with_val(bits, &quarter_p * (4 * m)),
            -Float::with_val(bits, &quarter_p * &sqrt2),
        );
        // b = -(2 - sqrt2 i - 4m) p/4
        let b = Complex::new(
            -Float::with_val(bits, &quarter_p * (2 - 4 * m)),
            Float::with_val(bits, &quarter_p * &sqrt2),
        );
        let q = Float::with_val(bits, -prec.pi() * &sqrt2 / &pr).exp();
        let value = rq(&RqParams::new(a, b, pr)?, &cx(q), &prec)?;
        ctx.compare(&value, &minus_i_pow(m, &prec).scale(&target_abs));
    }
    Ok(())
}

fn tau_ratio(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    let mut rs = vec![Rational::from(4), Rational::from(1), Rational::from(2)];
    rs.push(ctx.sampler.r_value());
    for r in rs {
        let q = nome(&r, &prec);
        let target = singular_modulus(&Rational::from(&r / 4u32), &prec)?.sqrt();
        for m in 0..=2i64 {
            let top = tau0(&cx(prec.real(m + 1)), &q, &prec)?;
            let bottom = tau0(&cx(prec.ratio(2 * m + 1, 2)), &q, &prec)?;
            ctx.compare(&(&top / &bottom), &cx(target.clone()));
        }
    }
    Ok(())
}

fn derivative_closed_forms(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    for row in derivative_constants(&prec)? {
        ctx.compare_real(&row.computed, &row.closed);
    }
    Ok(())
}

fn derivative_routes(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    let mut points = vec![(
        RqParams::ints(1, 2, 4, &prec)?,
        nome(&Rational::from(1), &prec),
    )];
    for _ in 0..3 {
        let (a, b, p, _) = real_params(ctx);
        let q = real(&ctx.sampler.rational(0.05, 0.6), &prec);
        points.push((RqParams::real(a, b, p)?, q));
    }
    for (params, q) in points {
        let analytic = drq_dq_analytic(&params, &q, &prec)?;
        ctx.compare_real(&analytic, &drq_dq_numeric(&params, &q, &prec)?);
    }
    Ok(())
}
