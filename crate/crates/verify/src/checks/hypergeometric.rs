//! q-binomial and Gauss summations and the 2phi1 forms of R*(a, b, p; q).

use ellq_core::cfrac::p_cf;
use ellq_core::hyperq::{gauss_sum_sides, phi21, psi_product, psi_small, thm6_check_i, thm6_check_ii, Phi21Params};
use ellq_core::qfunctions::{pochhammer, Order};
use ellq_core::{Complex, Prec, Real, Result};
use rug::Float;

use super::{cx, real};
use crate::check::{CheckCtx, IdentityCheck};

pub(super) fn checks() -> Vec<IdentityCheck> {
    vec![
        IdentityCheck::new(
            "thm6.qbinomial",
            "q-binomial theorem",
            "psi(a, q, z) = sum_n (a;q)_n/(q;q)_n z^n = (az;q)_inf/(z;q)_inf, |z| < 1",
            qbinomial,
        ),
        IdentityCheck::new(
            "thm6.gauss",
            "Gauss summation with argument c/(ab)",
            "2phi1[a, b; c; q, c/(ab)] = (c/a;q)(c/b;q)/((c;q)(c/(ab);q))",
            gauss,
        ),
        IdentityCheck::new(
            "thm6.gauss.printed",
            "Gauss summation with the argument read as ab/c",
            "2phi1[a, b; c; q, ab/c] = (c/a;q)(c/b;q)/((c;q)(c/(ab);q))",
            gauss_printed,
        )
        .discrepancy(),
        IdentityCheck::new(
            "thm6.i",
            "psi times R* against the P fraction, A < B",
            "psi(q^a, q^p, q^{p-a}) R*(a,b,p;q) = P(q^A, q^B, q^{A+B}), a = 2A + 3p/4, b = 2B + p/4, p = 4(A+B)",
            thm6_i,
        )
        .discrepancy(),
        IdentityCheck::new(
            "thm6.ii",
            "2phi1 form of R* derived from the Gauss sum, and its theta quotient",
            "2phi1[q^{b-a}, q^{a+b-p}; q^b; q^p, q^{p-b}] = R*(a,b,p;q) \
             = theta4((p-2a) i log q/4, q^{p/2}) / theta4((p-2b) i log q/4, q^{p/2})",
            thm6_ii,
        ),
        IdentityCheck::new(
            "thm6.ii.printed-first",
            "2phi1 with a repeated parameter against a theta quotient",
            "2phi1[q^a, q^b; q^b; q^p, q^{(p-a-b)/2}] = theta4((a-b) i log q/4, q^{p/2}) / theta4((a+b) i log q/4, q^{p/2})",
            thm6_ii_repeated,
        )
        .discrepancy(),
        IdentityCheck::new(
            "thm6.ii.printed-second",
            "2phi1 with symmetric lower parameter against the same theta quotient",
            "2phi1[A, B; sqrt(ABC); C, sqrt(C/(AB))] = theta4((a-b) i log q/4, q^{p/2}) / theta4((a+b) i log q/4, q^{p/2}), \
             A = q^a, B = q^b, C = q^p",
            thm6_ii_symmetric,
        )
        .discrepancy(),
    ]
}

fn sample(ctx: &mut CheckCtx, lo: f64, hi: f64) -> Real {
    let x = ctx.sampler.rational(lo, hi);
    real(&x, &ctx.prec)
}

fn qbinomial(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    let mut points = Vec::new();
    for a in ["-0.7", "0", "0.5", "2"] {
        for z in ["-0.5", "0.3", "0.9"] {
            points.push((cx(parse(a, &prec)), cx(parse(z, &prec)), cx(prec.ratio(3, 10))));
        }
    }
    points.push((
        Complex::from_f64(&prec, 0.4, 0.3),
        Complex::from_f64(&prec, 0.2, -0.5),
        Complex::from_f64(&prec, 0.3, 0.1),
    ));
    for _ in 0..3 {
        let a = cx(sample(ctx, -3.0, 3.0));
        let z = cx(sample(ctx, -0.9, 0.9));
        let q = cx(sample(ctx, 0.05, 0.7));
        points.push((a, z, q));
    }
    for (a, z, q) in points {
        ctx.compare(&psi_small(&a, &q, &z, &prec)?, &psi_product(&a, &q, &z, &prec)?);
    }
    Ok(())
}

fn parse(text: &str, prec: &Prec) -> Real {
    ellq_core::numerics::parse_real(text, prec).expect("literal")
}

fn gauss(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    let mut points = vec![(parse("0.5", &prec), parse("0.6", &prec), parse("0.2", &prec), parse("0.1", &prec))];
    while points.len() < 5 {
        let a = sample(ctx, 0.2, 0.95);
        let b = sample(ctx, 0.2, 0.95);
        let c = sample(ctx, 0.02, 0.9);
        let q = sample(ctx, 0.05, 0.6);
        // |c/(ab)| < 1 with some margin
        if Float::with_val(prec.bits(), &a * &b) * 0.9f64 > c {
            points.push((a, b, c, q));
        }
    }
    for (a, b, c, q) in points {
        let (series, product) = gauss_sum_sides(&cx(a), &cx(b), &cx(c), &cx(q), &prec)?;
        ctx.compare(&series, &product);
    }
    Ok(())
}

fn gauss_printed(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    let mut points = vec![(parse("0.2", &prec), parse("0.3", &prec), parse("0.7", &prec), parse("0.1", &prec))];
    for _ in 0..2 {
        let a = sample(ctx, 0.1, 0.6);
        let b = sample(ctx, 0.1, 0.6);
        let c = sample(ctx, 0.7, 0.95);
        let q = sample(ctx, 0.05, 0.6);
        points.push((a, b, c, q));
    }
    for (a, b, c, q) in points {
        let (a, b, c, q) = (cx(a), cx(b), cx(c), cx(q));
        let series = phi21(
            &Phi21Params {
                a: a.clone(),
                b: b.clone(),
                c: c.clone(),
                q: q.clone(),
                z: &(&a * &b) / &c,
            },
            &prec,
        )?;
        let inf = |x: &Complex| pochhammer(x, &q, Order::Infinite, &prec);
        let product = &(&inf(&(&c / &a))? * &inf(&(&c / &b))?) / &(&inf(&c)? * &inf(&(&c / &(&a * &b)))?);
        ctx.compare(&series, &product);
    }
    Ok(())
}

fn thm6_i(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    let mut points = vec![(prec.ratio(1, 4), prec.ratio(1, 2), prec.ratio(1, 5))];
    for _ in 0..2 {
        let big_a = sample(ctx, 0.1, 0.8);
        let big_b = Float::with_val(prec.bits(), &big_a + sample(ctx, 0.1, 0.8));
        points.push((big_a, big_b, sample(ctx, 0.05, 0.5)));
    }
    for (big_a, big_b, q) in points {
        let residual = thm6_check_i(&big_a, &big_b, &q, &prec)?;
        // scale as |l - r| / max(1, |r|)
        let sum_ab = Float::with_val(prec.bits(), &big_a + &big_b);
        let qpow = |x: &Real| cx(Float::with_val(prec.bits(), x * Float::with_val(prec.bits(), q.ln_ref())).exp());
        let rhs = p_cf(&qpow(&big_a), &qpow(&big_b), &qpow(&sum_ab), &prec)?;
        ctx.record(&(residual / rhs.abs().max(&prec.one())));
    }
    Ok(())
}

/// `0 < a, b < p` with `a + b < p`, and `q`.
fn ii_points(ctx: &mut CheckCtx) -> Vec<(Real, Real, Real, Real)> {
    let prec = ctx.prec.clone();
    let mut points = vec![(prec.real(1), prec.real(2), prec.real(5), prec.ratio(1, 10))];
    for _ in 0..3 {
        let p = ctx.sampler.rational(1.0, 6.0);
        let top = p.to_f64();
        let a = sample(ctx, 0.05 * top, 0.45 * top);
        let b = sample(ctx, 0.05 * top, 0.45 * top);
        let q = sample(ctx, 0.05, 0.5);
        points.push((a, b, real(&p, &prec), q));
    }
    points
}

fn thm6_ii(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    for (a, b, p, q) in ii_points(ctx) {
        let residuals = thm6_check_ii(&a, &b, &p, &q, &prec)?;
        ctx.record(&residuals.gauss_form);
        ctx.record(&residuals.theta_form);
    }
    Ok(())
}

fn thm6_ii_repeated(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    for (a, b, p, q) in ii_points(ctx) {
        if let Some(r) = thm6_check_ii(&a, &b, &p, &q, &prec)?.repeated_parameter {
            ctx.record(&r);
        }
    }
    Ok(())
}

fn thm6_ii_symmetric(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    for (a, b, p, q) in ii_points(ctx) {
        if let Some(r) = thm6_check_ii(&a, &b, &p, &q, &prec)?.symmetric_parameter {
            ctx.record(&r);
        }
    }
    Ok(())
}
