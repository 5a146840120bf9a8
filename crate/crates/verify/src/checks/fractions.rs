//! Continued fractions against their series and product forms, the theta
//! quotients of the Rogers-Ramanujan and H fractions, the log-sum of theta4,
//! and the P fraction.

use ellq_core::cfrac::{
    eval_cf, h_cf, m_cf, m_series, p_cf, p_product, r1_cf, r1_product, r2_cf, r2_product, r3_cf,
    r3_product, rr_cf, ContinuedFraction,
};
use ellq_core::qfunctions::{
    agile, euler_f, hyperbolic_log_sum, pochhammer, theta3, theta4, theta4_product, theta_sum_s, AgileParams,
    Order, Route,
};
use ellq_core::rquantity::{rq, rq_charprod, rq_expsum, rq_star, Chi2Character, RqParams};
use ellq_core::{Complex, Prec, Real, Result};
use rug::{Float, Rational};

use super::{chain, cx, nome, odd_sum_closed, real, rpow, rpow_real};
use crate::check::{CheckCtx, IdentityCheck};

pub(super) fn checks() -> Vec<IdentityCheck> {
    vec![
        IdentityCheck::new(
            "cf.m-series",
            "the alternating-sign fraction M(c, q) and the all-plus fraction against the series",
            "1/(1- cq/(1+ c(q-q^2)/(1- cq^3/(1+ ...)))) = sum_{n>=0} c^n q^{n(n+1)/2}; \
             1/(1+ cq/(1+ c(q^2-q)/(1+ cq^3/(1+ ...)))) = sum_{k>=0} (-c)^k q^{k(k+1)/2}",
            m_fraction,
        ),
        IdentityCheck::new(
            "cf.m-bilateral",
            "two one-sided M series combine into a bilateral sum",
            "M(c, q) + M(1/c, q)/c = sum_{k in Z} c^k q^{k(k+1)/2}",
            m_bilateral,
        ),
        IdentityCheck::new(
            "cf.two-sided",
            "two-sided M sum at c = q^{2a} through the Landen chain",
            "M(q^{2a}, q^2) + q^{-2a} M(q^{-2a}, q^2) = 2^{5/6} q^{-(2a+1)^2/4} (k11 k12 k21)^{1/6} / k22^{1/3} sqrt(K(k11)/pi)",
            two_sided,
        ),
        IdentityCheck::new(
            "cf.odd-exact",
            "exact value of the M fraction at c = +q^a, a odd",
            "q^{(a+1)^2/4} M(q^a, q^2) = 1/2 - sum_{k=0}^{(a-1)/2} q^{k^2} + theta3(q)/2, theta3(q) = sqrt(2K(k)/pi)",
            odd_exact,
        ),
        IdentityCheck::new(
            "cf.odd-exact.printed",
            "the same exact value with the multiplier read as c = -q^a",
            "q^{(a+1)^2/4} M(-q^a, q^2) = 1/2 - sum_{k=0}^{(a-1)/2} q^{k^2} + theta3(q)/2",
            odd_exact_printed,
        )
        .discrepancy(),
        IdentityCheck::new(
            "cf.named",
            "the quintic, cubic and octic fractions against their products and R(a, b, p; q)",
            "R1 = q^{1/5}/(1+ q/(1+ q^2/(1+ ...))) = R(1,2,5;q); R2 = q^{1/3}/(1+ (q+q^2)/(1+ ...)) = R(1,3,6;q); \
             R3 = q^{1/2}/((1+q)+ q^2/((1+q^3)+ q^4/((1+q^5)+ ...))) = R(1,3,8;q)",
            named,
        ),
        IdentityCheck::new(
            "cf.r3.printed",
            "octic fraction with the third partial denominator 1 + q^7",
            "q^{1/2}/((1+q)+ q^2/((1+q^3)+ q^4/((1+q^7)+ ...))) = q^{1/2} (q;q^8)(q^7;q^8)/((q^3;q^8)(q^5;q^8))",
            r3_printed,
        )
        .discrepancy(),
        IdentityCheck::new(
            "lemma2.logsum",
            "hyperbolic log-sum against the logarithm of theta4",
            "sum_{k>=1} cosh(2tk)/(k sinh(pi a k)) = log prod_{n>=1}(1 - e^{-2n pi a}) - log theta4(it, e^{-a pi})",
            log_sum,
        ),
        IdentityCheck::new(
            "theta.product",
            "theta4 series against the triple product",
            "theta4(z, q) = prod_{n>=0} (1 - q^{2n+2})(1 - q^{2n+1} e^{2iz})(1 - q^{2n+1} e^{-2iz})",
            theta_product,
        ),
        IdentityCheck::new(
            "rr.threeway",
            "Rogers-Ramanujan fraction, product, theta quotient and character product",
            "R(e^{-x}) = e^{-x/5} theta4(3ix/4, e^{-5x/2}) / theta4(ix/4, e^{-5x/2}) = q^{1/5} (q;q^5)(q^4;q^5)/((q^2;q^5)(q^3;q^5)) \
             = q^{1/5} prod (1 - q^n)^{(n/5)}",
            rr_threeway,
        ),
        IdentityCheck::new(
            "rr.expsum",
            "exponential-sum and hyperbolic forms of the Rogers-Ramanujan fraction",
            "R(e^{-x}) = exp(-x/5 - sum_n (e^{4nx} - e^{3nx} - e^{2nx} + e^{nx}) / (n (e^{5nx} - 1))) \
             = e^{-x/5} exp(sum_n cosh(nx/2)/(n sinh(5nx/2)) - sum_n cosh(3nx/2)/(n sinh(5nx/2)))",
            rr_expsum,
        ),
        IdentityCheck::new(
            "h.expsum",
            "exponential-sum form of H",
            "H(e^{-x}) = exp(-x/2 - sum_n (e^{7nx} - e^{5nx} - e^{3nx} + e^{nx}) / (n (e^{8nx} - 1)))",
            h_expsum,
        ),
        IdentityCheck::new(
            "h.theta",
            "theta quotient of H with denominator argument ix/2",
            "H(e^{-x}) = e^{-x/2} theta4(3ix/2, e^{-4x}) / theta4(ix/2, e^{-4x})",
            h_theta,
        ),
        IdentityCheck::new(
            "h.theta.printed",
            "theta quotient of H with denominator argument ix/4",
            "H(e^{-x}) = e^{-x/2} theta4(3ix/2, e^{-4x}) / theta4(ix/4, e^{-4x})",
            h_theta_printed,
        )
        .discrepancy(),
        IdentityCheck::new(
            "pfrac.product",
            "the P(a, b, q) fraction against its product",
            "(a^2q^3;q^4)(b^2q^3;q^4)/((a^2q;q^4)(b^2q;q^4)) = 1/((1-ab)+ (a-bq)(b-aq)/((1-ab)(q^2+1)+ (a-bq^3)(b-aq^3)/((1-ab)(q^4+1)+ ...)))",
            pfrac_product,
        ),
        IdentityCheck::new(
            "pfrac.specialization",
            "P at powers of q as a ratio of Agile-type products",
            "P(q^A, q^B, q^{A+B}) = (q^a;q^p)(q^{2p-a};q^p) / [b,p;q], a = 2A + 3p/4, b = 2B + p/4, p = 4(A+B)",
            pfrac_specialization,
        ),
        IdentityCheck::new(
            "app2.m-difference",
            "difference of two M series is an Agile quantity",
            "M(-q^{-a}, q^p) - q^a M(-q^a, q^p) = f(-q^p) [a,p;q]",
            m_difference,
        ),
        IdentityCheck::new(
            "app2.m-quotient",
            "quotient of M differences is R*(a, b, p; q); at (1, 2, 5) it is the Rogers-Ramanujan fraction",
            "(M(-q^{-a},q^p) - q^a M(-q^a,q^p)) / (M(-q^{-b},q^p) - q^b M(-q^b,q^p)) = R*(a,b,p;q)",
            m_quotient,
        ),
    ]
}

fn q_sample(ctx: &mut CheckCtx, lo: f64, hi: f64) -> Real {
    let x = ctx.sampler.rational(lo, hi);
    real(&x, &ctx.prec)
}

fn theta4_im(t: &Real, q: &Real, prec: &Prec) -> Result<Complex> {
    theta4(&Complex::new(prec.zero(), t.clone()), &cx(q.clone()), prec)
}

fn m_fraction(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    let mut points = vec![(Rational::from((1, 2)), Rational::from((1, 10))), (Rational::from((-3, 20)), Rational::from((3, 20)))];
    for _ in 0..3 {
        let c = ctx.sampler.rational(-0.9, 0.9);
        let q = ctx.sampler.rational(0.05, 0.6);
        points.push((c, q));
    }
    for (c, q) in points {
        let (c, q) = (cx(real(&c, &prec)), cx(real(&q, &prec)));
        ctx.compare(&m_cf(&c, &q, &prec)?, &m_series(&c, &q, &prec)?);
        let plus = all_plus_fraction(&c, &q, &prec)?;
        ctx.compare(&plus, &m_series(&-&c, &q, &prec)?);
    }
    Ok(())
}

/// `1/(1+ cq/(1+ c(q^2-q)/(1+ cq^3/(1+ c(q^4-q^2)/(1+ ...)))))`.
fn all_plus_fraction(c: &Complex, q: &Complex, prec: &Prec) -> Result<Complex> {
    let (c, q) = (c.clone(), q.clone());
    let one = Complex::one(prec);
    let den = one.clone();
    let cf = ContinuedFraction::new(
        Complex::zero(prec),
        move |n| {
            if n == 1 {
                one.clone()
            } else if n % 2 == 0 {
                &c * &q.powi(n as i64 - 1)
            } else {
                let j = (n as i64 - 1) / 2;
                &c * &(&q.powi(2 * j) - &q.powi(j))
            }
        },
        move |_| den.clone(),
    );
    eval_cf(&cf, prec)
}

fn m_bilateral(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    let bits = prec.bits();
    for _ in 0..4 {
        let c = q_sample(ctx, 0.1, 3.0);
        let q = q_sample(ctx, 0.05, 0.6);
        let inv = Float::with_val(bits, 1u32) / &c;
        let (cc, qc) = (cx(c.clone()), cx(q.clone()));
        let lhs = &m_series(&cc, &qc, &prec)? + &m_series(&cx(inv.clone()), &qc, &prec)?.scale(&inv);
        // c^k q^{k(k+1)/2} = Q^{k^2 + zk} with Q = q^{1/2}, z = 1 + 2 ln c / ln q
        let big_q = q.clone().sqrt();
        let z = Float::with_val(bits, c.ln_ref()) * 2u32 / Float::with_val(bits, q.ln_ref()) + 1u32;
        let rhs = theta_sum_s(&cx(z), &cx(big_q), &prec)?;
        ctx.compare(&lhs, &rhs);
    }
    Ok(())
}

fn two_sided(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    for r in [1, 2] {
        let c = chain(&Rational::from(r), &prec)?;
        let q = cx(c.q.clone());
        let q2 = &q * &q;
        for a in 0..=2i64 {
            let up = m_series(&q.powi(2 * a), &q2, &prec)?;
            let down = &m_series(&q.powi(-2 * a), &q2, &prec)? * &q.powi(-2 * a);
            let lhs = &up + &down;
            ctx.compare(&lhs, &cx(odd_sum_closed(&c, 2 * a + 1, &prec)));
        }
    }
    Ok(())
}

/// `(1/2 - sum_{k <= (a-1)/2} q^{k^2} + theta3(q)/2, q^{(a+1)^2/4})`.
fn odd_exact_target(q: &Real, a: i64, prec: &Prec) -> Result<(Real, Real)> {
    let bits = prec.bits();
    let qc = cx(q.clone());
    let theta = theta3(&Complex::zero(prec), &qc, prec)?.re;
    let mut value = Float::with_val(bits, &theta / 2u32) + prec.ratio(1, 2);
    for k in 0..=(a - 1) / 2 {
        value -= qc.powi(k * k).re;
    }
    Ok((value, rpow(q, (a + 1) * (a + 1), 4, prec)))
}

fn odd_exact(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    let mut rs = vec![Rational::from(1), Rational::from(2), Rational::from(3)];
    rs.push(ctx.sampler.r_value());
    for r in rs {
        let c = chain(&r, &prec)?;
        let q = cx(c.q.clone());
        let root = Float::with_val(prec.bits(), &c.root_k * &c.root_k) * 2u32;
        let theta = theta3(&Complex::zero(&prec), &q, &prec)?;
        ctx.compare(&theta, &cx(root.sqrt()));
        for a in [1i64, 3, 5] {
            let (target, scale) = odd_exact_target(&c.q, a, &prec)?;
            let c_mult = q.powi(a);
            let q2 = &q * &q;
            let series = m_series(&c_mult, &q2, &prec)?.scale(&scale);
            ctx.compare(&series, &cx(target.clone()));
            let fraction = m_cf(&c_mult, &q2, &prec)?.scale(&scale);
            ctx.compare(&fraction, &cx(target));
        }
    }
    Ok(())
}

fn odd_exact_printed(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    for r in [Rational::from(1), Rational::from(2)] {
        let q = nome(&r, &prec);
        let qc = cx(q.clone());
        for a in [1i64, 3, 5] {
            let (target, scale) = odd_exact_target(&q, a, &prec)?;
            let series = m_series(&-qc.powi(a), &(&qc * &qc), &prec)?.scale(&scale);
            ctx.compare(&series, &cx(target));
        }
    }
    Ok(())
}

fn named(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    let mut qs = vec![prec.ratio(1, 10), nome(&Rational::from(1), &prec), nome(&Rational::from(4), &prec)];
    qs.push(q_sample(ctx, 0.02, 0.5));
    type Route3 = fn(&Complex, &Prec) -> Result<Complex>;
    let routes: [(Route3, Route3, (i64, i64, i64)); 3] = [
        (r1_cf, r1_product, (1, 2, 5)),
        (r2_cf, r2_product, (1, 3, 6)),
        (r3_cf, r3_product, (1, 3, 8)),
    ];
    for q in qs {
        let q = cx(q);
        for (fraction, product, (a, b, p)) in routes {
            let prod = product(&q, &prec)?;
            ctx.compare(&fraction(&q, &prec)?, &prod);
            ctx.compare(&rq(&RqParams::ints(a, b, p, &prec)?, &q, &prec)?, &prod);
        }
    }
    Ok(())
}

fn r3_printed(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    for q in [prec.ratio(1, 10), nome(&Rational::from(1), &prec)] {
        let q = cx(q);
        let head = rpow(&q.re, 1, 2, &prec);
        // partial denominators 1 + q, 1 + q^3, 1 + q^7, continued as 1 + q^{2^n - 1}
        let (qn, qd) = (q.clone(), q.clone());
        let one = Complex::one(&prec);
        let cf = ContinuedFraction::new(
            Complex::zero(&prec),
            move |n| if n == 1 { cx(head.clone()) } else { qn.powi(2 * (n as i64 - 1)) },
            move |n| &one + &qd.powi((1i64 << n.min(40)) - 1),
        );
        ctx.compare(&eval_cf(&cf, &prec)?, &r3_product(&q, &prec)?);
    }
    Ok(())
}

fn log_sum(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    let bits = prec.bits();
    let mut points = vec![(prec.ratio(3, 10), prec.one())];
    for _ in 0..4 {
        let a = q_sample(ctx, 0.5, 3.0);
        let t = Float::with_val(bits, q_sample(ctx, -0.9, 0.9) * &a);
        points.push((t, a));
    }
    for (t, a) in points {
        let lhs = hyperbolic_log_sum(&t, &a, &prec)?;
        let pa = Float::with_val(bits, prec.pi() * &a);
        let q = Float::with_val(bits, -&pa).exp();
        let p0 = euler_f(&cx(Float::with_val(bits, q.square_ref())), &prec)?;
        let rhs = &p0.ln() - &theta4_im(&t, &q, &prec)?.ln();
        ctx.compare(&cx(lhs), &rhs);
    }
    Ok(())
}

fn theta_product(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    let bits = prec.bits();
    for _ in 0..5 {
        let q = q_sample(ctx, 0.05, 0.6);
        let x = q_sample(ctx, -1.0, 1.0);
        // keep |q| e^{2 |Im z|} < 1
        let limit = -q.to_f64().ln() / 2.0;
        let y = Float::with_val(bits, q_sample(ctx, -0.8, 0.8) * limit);
        let z = Complex::new(x, y);
        let q = cx(q);
        ctx.compare(&theta4(&z, &q, &prec)?, &theta4_product(&z, &q, &prec)?);
    }
    Ok(())
}

/// `x in {pi, 2 pi, pi sqrt3}` and one sampled rational `x`.
fn x_points(ctx: &mut CheckCtx) -> Vec<Real> {
    let prec = &ctx.prec;
    let pi = prec.pi();
    let mut xs = vec![
        pi.clone(),
        Float::with_val(prec.bits(), &pi * 2u32),
        Float::with_val(prec.bits(), &pi * prec.real(3).sqrt()),
    ];
    xs.push(q_sample(ctx, 0.5, 4.0));
    xs
}

fn exp_neg(x: &Real, num: i64, den: i64, prec: &Prec) -> Real {
    (-Float::with_val(prec.bits(), x * prec.ratio(num, den))).exp()
}

fn scaled(x: &Real, num: i64, den: i64, prec: &Prec) -> Real {
    Float::with_val(prec.bits(), x * prec.ratio(num, den))
}

fn rr_threeway(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    let chi = Chi2Character::new(1, 2, 5)?;
    for x in x_points(ctx) {
        let q = cx(exp_neg(&x, 1, 1, &prec));
        let product = r1_product(&q, &prec)?;
        ctx.compare(&r1_cf(&q, &prec)?, &product);
        let nome5 = exp_neg(&x, 5, 2, &prec);
        let theta = &theta4_im(&scaled(&x, 3, 4, &prec), &nome5, &prec)?
            / &theta4_im(&scaled(&x, 1, 4, &prec), &nome5, &prec)?;
        ctx.compare(&theta.scale(&exp_neg(&x, 1, 5, &prec)), &product);
        let charprod = rq_charprod(&chi, &q, &prec)?.scale(&exp_neg(&x, 1, 5, &prec));
        ctx.compare(&charprod, &product);
    }
    Ok(())
}

fn rr_expsum(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    let bits = prec.bits();
    for x in x_points(ctx) {
        let q = cx(exp_neg(&x, 1, 1, &prec));
        let product = r1_product(&q, &prec)?;
        let expsum = rq_expsum(&prec.real(1), &prec.real(2), &prec.real(5), &x, &prec)?;
        ctx.compare(&cx(expsum), &product);
        let a = Float::with_val(bits, scaled(&x, 5, 2, &prec) / prec.pi());
        let near = hyperbolic_log_sum(&scaled(&x, 1, 4, &prec), &a, &prec)?;
        let far = hyperbolic_log_sum(&scaled(&x, 3, 4, &prec), &a, &prec)?;
        let hyperbolic = exp_neg(&x, 1, 5, &prec) * (near - far).exp();
        ctx.compare(&cx(hyperbolic), &product);
    }
    Ok(())
}

fn h_expsum(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    for x in x_points(ctx) {
        let q = cx(exp_neg(&x, 1, 1, &prec));
        let expsum = rq_expsum(&prec.real(1), &prec.real(3), &prec.real(8), &x, &prec)?;
        ctx.compare(&cx(expsum), &h_cf(&q, &prec)?);
    }
    Ok(())
}

fn h_theta_with(ctx: &mut CheckCtx, den: (i64, i64)) -> Result<()> {
    let prec = ctx.prec.clone();
    for x in x_points(ctx) {
        let q = cx(exp_neg(&x, 1, 1, &prec));
        let nome4 = exp_neg(&x, 4, 1, &prec);
        let theta = &theta4_im(&scaled(&x, 3, 2, &prec), &nome4, &prec)?
            / &theta4_im(&scaled(&x, den.0, den.1, &prec), &nome4, &prec)?;
        ctx.compare(&theta.scale(&exp_neg(&x, 1, 2, &prec)), &h_cf(&q, &prec)?);
    }
    Ok(())
}

fn h_theta(ctx: &mut CheckCtx) -> Result<()> {
    h_theta_with(ctx, (1, 2))
}

fn h_theta_printed(ctx: &mut CheckCtx) -> Result<()> {
    h_theta_with(ctx, (1, 4))
}

fn pfrac_product(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    let mut points = vec![(
        Complex::from_f64(&prec, 0.3, 0.2),
        Complex::from_f64(&prec, 0.5, -0.1),
        Complex::from_f64(&prec, 0.1, 0.05),
    )];
    for _ in 0..4 {
        let a = cx(q_sample(ctx, -0.9, 0.9));
        let b = cx(q_sample(ctx, -0.9, 0.9));
        let q = cx(q_sample(ctx, 0.05, 0.6));
        points.push((a, b, q));
    }
    for (a, b, q) in points {
        let product = p_product(&a, &b, &q, &prec)?;
        ctx.compare(&p_cf(&a, &b, &q, &prec)?, &product);
        ctx.compare(&p_cf(&b, &a, &q, &prec)?, &product);
    }
    Ok(())
}

fn pfrac_specialization(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    let bits = prec.bits();
    let mut points = vec![
        (Rational::from(1), Rational::from(1), prec.ratio(1, 5)),
        (Rational::from(1), Rational::from(2), prec.ratio(1, 5)),
        (Rational::from((1, 2)), Rational::from((3, 2)), prec.ratio(1, 10)),
    ];
    for _ in 0..2 {
        let big_a = ctx.sampler.rational(0.2, 2.0);
        let big_b = ctx.sampler.rational(0.2, 2.0);
        let q = q_sample(ctx, 0.05, 0.5);
        points.push((big_a, big_b, q));
    }
    for (big_a, big_b, q) in points {
        let (big_a, big_b) = (real(&big_a, &prec), real(&big_b, &prec));
        let p = Float::with_val(bits, &big_a + &big_b) * 4u32;
        let a = Float::with_val(bits, &big_a * 2u32) + Float::with_val(bits, &p * 3u32) / 4u32;
        let b = Float::with_val(bits, &big_b * 2u32) + Float::with_val(bits, &p / 4u32);
        let qc = cx(q.clone());
        let lhs = p_cf(
            &cx(rpow_real(&q, &big_a, &prec)),
            &cx(rpow_real(&q, &big_b, &prec)),
            &cx(rpow_real(&q, &Float::with_val(bits, &big_a + &big_b), &prec)),
            &prec,
        )?;
        let qp = cx(rpow_real(&q, &p, &prec));
        let two_p_minus_a = Float::with_val(bits, &p * 2u32) - &a;
        let num = &pochhammer(&cx(rpow_real(&q, &a, &prec)), &qp, Order::Infinite, &prec)?
            * &pochhammer(&cx(rpow_real(&q, &two_p_minus_a, &prec)), &qp, Order::Infinite, &prec)?;
        let den = agile(&AgileParams::real(b, p)?, &qc, Route::Product, &prec)?;
        ctx.compare(&lhs, &(&num / &den));
    }
    Ok(())
}

/// `M(-q^{-a}, q^p) - q^a M(-q^a, q^p)`.
fn m_difference_value(a: &Real, p: &Real, q: &Real, prec: &Prec) -> Result<Complex> {
    let qp = cx(rpow_real(q, p, prec));
    let qa = rpow_real(q, a, prec);
    let inv = Float::with_val(prec.bits(), 1u32) / &qa;
    let first = m_series(&cx(-inv), &qp, prec)?;
    let second = m_series(&cx(-qa.clone()), &qp, prec)?.scale(&qa);
    Ok(&first - &second)
}

fn m_points(ctx: &mut CheckCtx) -> Vec<(Real, Real, Real)> {
    let prec = ctx.prec.clone();
    let mut points = vec![
        (prec.real(1), prec.real(5), prec.ratio(1, 10)),
        (prec.real(1), prec.real(5), nome(&Rational::from(1), &prec)),
    ];
    for _ in 0..3 {
        let p = ctx.sampler.rational(0.5, 6.0);
        let a = ctx.sampler.rational(0.0, p.to_f64());
        let q = q_sample(ctx, 0.05, 0.5);
        points.push((real(&a, &prec), real(&p, &prec), q));
    }
    points
}

fn m_difference(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    for (a, p, q) in m_points(ctx) {
        let lhs = m_difference_value(&a, &p, &q, &prec)?;
        let qc = cx(q.clone());
        let f = euler_f(&cx(rpow_real(&q, &p, &prec)), &prec)?;
        let rhs = &f * &agile(&AgileParams::real(a, p)?, &qc, Route::Product, &prec)?;
        ctx.compare(&lhs, &rhs);
    }
    Ok(())
}

fn m_quotient(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    for (a, p, q) in m_points(ctx) {
        let b = Float::with_val(prec.bits(), &p - &a) / 3u32;
        let ratio = &m_difference_value(&a, &p, &q, &prec)? / &m_difference_value(&b, &p, &q, &prec)?;
        let params = RqParams::real(a, b, p)?;
        ctx.compare(&ratio, &rq_star(&params, &cx(q), &prec)?);
    }
    for q in [prec.ratio(1, 10), nome(&Rational::from(1), &prec)] {
        let (one, two, five) = (prec.real(1), prec.real(2), prec.real(5));
        let ratio = &m_difference_value(&one, &five, &q, &prec)? / &m_difference_value(&two, &five, &q, &prec)?;
        ctx.compare(&ratio, &rr_cf(&cx(q), &prec)?);
    }
    Ok(())
}
