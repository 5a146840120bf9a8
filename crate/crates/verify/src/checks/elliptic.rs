//! Products at singular moduli, the modulus from the nome, and the bilateral
//! theta sums in terms of the Landen chain.

use ellq_core::elliptic::{elliptic_k, landen_descend, modulus_from_nome, nome_from_r, singular_modulus_full};
use ellq_core::qfunctions::{euler_f, theta_sum_s, weber_phi};
use ellq_core::{Complex, Result};
use rug::ops::Pow;
use rug::{Float, Rational};

use super::{chain, cx, nome, odd_sum_closed, rpow, theta_modulus};
use crate::check::{CheckCtx, IdentityCheck};
use crate::sampler::r_points;
use crate::table::worked_products;

pub(super) fn checks() -> Vec<IdentityCheck> {
    vec![
        IdentityCheck::new(
            "intro.sq-product",
            "sixth power of prod (1 - q^{2n}) from k and K",
            "prod_{n>=1} (1 - q^{2n})^6 = 2 k k' K(k)^3 / (pi^3 q^{1/2}), q = e^{-pi sqrt r}",
            sq_product,
        ),
        IdentityCheck::new(
            "intro.plus-product",
            "eighth power of prod (1 + q^n) from k",
            "q^{1/3} prod_{n>=1} (1 + q^n)^8 = 2^{-4/3} (k / (1 - k^2))^{2/3}",
            plus_product,
        ),
        IdentityCheck::new(
            "intro.minus-product",
            "eighth power of prod (1 - q^n) from k and K",
            "prod_{n>=1} (1 - q^n)^8 = 2^{8/3} pi^{-4} q^{-1/3} k^{2/3} k'^{8/3} K(k)^4",
            minus_product,
        ),
        IdentityCheck::new(
            "intro.constants",
            "closed forms of the products at r = 2/5 and r = 3",
            "prod (1 + e^{-n pi sqrt(2/5)})^8 = (7 + 3 sqrt5)/8 e^{pi sqrt(2/5)/3}; \
             prod (1 + e^{-n pi sqrt3})^8 = e^{pi/sqrt3} / (2^{2/3} (26 + 15 sqrt3)^{1/3}); \
             prod (1 - e^{-n pi sqrt3})^8 = 3 (2 + sqrt3) e^{pi/sqrt3} Gamma(1/3)^12 / (1024 pi^8)",
            constants,
        ),
        IdentityCheck::new(
            "elliptic.period-ratio",
            "the modulus from the nome has period ratio sqrt r",
            "K(k')/K(k) = sqrt r and k^2 + k'^2 = 1 for k = k_r",
            period_ratio,
        ),
        IdentityCheck::new(
            "elliptic.landen",
            "one descending Landen step maps k_r to k_{4r}",
            "k21 = (2 - k^2 - 2k')/k^2 with k = k_r equals k_{4r}",
            landen,
        ),
        IdentityCheck::new(
            "lemma1.k",
            "closed form of k in terms of phi(-q) against theta2^2/theta3^2",
            "k = 8 q^{1/2} phi(-q)^12 / (1 + sqrt(1 + 64 q phi(-q)^24))",
            lemma1_k,
        ),
        IdentityCheck::new(
            "lemma1.K",
            "closed form of K(k) in terms of f(-q) and phi(-q) against the AGM",
            "K(k) = f(-q)^2 pi sqrt(1 + sqrt(1 + 64 q phi(-q)^24)) / (2 sqrt2 phi(-q)^2)",
            lemma1_big_k,
        ),
        IdentityCheck::new(
            "thm1.even",
            "bilateral sum with even linear exponent",
            "sum_n q^{n^2 + 2mn} = 2^{1/6} q^{-m^2} (k11 k22)^{1/3} / (k12 k21)^{1/6} sqrt(K(k11)/pi)",
            thm1_even,
        ),
        IdentityCheck::new(
            "thm1.odd",
            "bilateral sum with odd linear exponent",
            "sum_n q^{n^2 + (2m+1)n} = 2^{5/6} q^{-(2m+1)^2/4} (k11 k12 k21)^{1/6} / k22^{1/3} sqrt(K(k11)/pi)",
            thm1_odd,
        ),
        IdentityCheck::new(
            "thm1.landen-product",
            "product of (1 + q^n)^2 / (1 + q^{2n})^2 through the Landen chain",
            "prod_{n>=1} (1 + q^n)^2 / (1 + q^{2n})^2 = q^{1/12} k11^{1/6} k22^{1/3} / (k21^{1/6} k12^{1/3})",
            landen_product,
        ),
    ]
}

fn sq_product(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    let bits = prec.bits();
    for r in r_points() {
        let q = nome(&r, &prec);
        let m = theta_modulus(&q, &prec)?;
        let q2 = cx(Float::with_val(bits, q.square_ref()));
        let lhs = euler_f(&q2, &prec)?.re.pow(6u32);
        let rhs = Float::with_val(bits, &m.k * &m.k_prime) * 2u32 * m.big_k.pow(3u32)
            / (prec.pi().pow(3u32) * q.sqrt());
        ctx.compare_real(&lhs, &rhs);
    }
    Ok(())
}

fn plus_product(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    let bits = prec.bits();
    for r in r_points() {
        let q = nome(&r, &prec);
        let m = theta_modulus(&q, &prec)?;
        let lhs = rpow(&q, 1, 3, &prec) * weber_phi(&cx(q.clone()), &prec)?.re.pow(8u32);
        let ratio = Float::with_val(bits, &m.k / Float::with_val(bits, m.k_prime.square_ref()));
        let rhs = rpow(&prec.real(2), -4, 3, &prec) * rpow(&ratio, 2, 3, &prec);
        ctx.compare_real(&lhs, &rhs);
    }
    Ok(())
}

fn minus_product(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    for r in r_points() {
        let q = nome(&r, &prec);
        let m = theta_modulus(&q, &prec)?;
        let lhs = euler_f(&cx(q.clone()), &prec)?.re.pow(8u32);
        let rhs = rpow(&prec.real(2), 8, 3, &prec) / prec.pi().pow(4u32)
            * rpow(&q, -1, 3, &prec)
            * rpow(&m.k, 2, 3, &prec)
            * rpow(&m.k_prime, 8, 3, &prec)
            * m.big_k.pow(4u32);
        ctx.compare_real(&lhs, &rhs);
    }
    Ok(())
}

fn constants(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    for row in worked_products(&prec)? {
        ctx.record(&row.gap());
    }
    Ok(())
}

fn period_ratio(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    let bits = prec.bits();
    for r in r_points().into_iter().chain([Rational::from(7)]) {
        let m = singular_modulus_full(&r, &prec)?;
        let k_prime = elliptic_k(&m.k_prime, &prec)?;
        let big_k = elliptic_k(&m.k, &prec)?;
        ctx.compare_real(&(k_prime / big_k), &prec.real(&r).sqrt());
        let norm = Float::with_val(bits, m.k.square_ref()) + Float::with_val(bits, m.k_prime.square_ref());
        ctx.compare_real(&norm, &prec.one());
    }
    Ok(())
}

fn landen(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    for r in [Rational::from(1), Rational::from(2), Rational::from((2, 5))] {
        let k = theta_modulus(&nome(&r, &prec), &prec)?.k;
        let (_, k21, _) = landen_descend(&k, &prec)?;
        let four_r = Rational::from(&r * 4u32);
        let target = theta_modulus(&nome(&four_r, &prec), &prec)?.k;
        ctx.compare_real(&k21, &target);
    }
    Ok(())
}

fn lemma1_k(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    for r in r_points() {
        let m = modulus_from_nome(&nome_from_r(&r, &prec)?, &prec)?;
        let oracle = theta_modulus(&nome(&r, &prec), &prec)?;
        ctx.compare_real(&m.k, &oracle.k);
    }
    Ok(())
}

fn lemma1_big_k(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    for r in r_points() {
        let m = modulus_from_nome(&nome_from_r(&r, &prec)?, &prec)?;
        let oracle = theta_modulus(&nome(&r, &prec), &prec)?;
        ctx.compare_real(&m.big_k, &oracle.big_k);
    }
    Ok(())
}

fn sum_points(ctx: &mut CheckCtx, grid: &[i64]) -> Vec<(Rational, i64)> {
    let mut points: Vec<(Rational, i64)> = [1, 2, 3]
        .into_iter()
        .flat_map(|r| grid.iter().map(move |&m| (Rational::from(r), m)))
        .collect();
    for _ in 0..2 {
        let r = ctx.sampler.r_value();
        let m = ctx.sampler.int(-2, 3);
        points.push((r, m));
    }
    points
}

fn thm1_even(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    for (r, m) in sum_points(ctx, &[0, 1, 2]) {
        let c = chain(&r, &prec)?;
        let lhs = theta_sum_s(&Complex::from_i64(&prec, 2 * m), &cx(c.q.clone()), &prec)?;
        let rhs = rpow(&prec.real(2), 1, 6, &prec)
            * rpow(&c.q, -m * m, 1, &prec)
            * rpow(&(c.k11 * &c.k22), 1, 3, &prec)
            / rpow(&(c.k12 * &c.k21), 1, 6, &prec)
            * c.root_k;
        ctx.compare(&lhs, &cx(rhs));
    }
    Ok(())
}

fn thm1_odd(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    for (r, m) in sum_points(ctx, &[0, 1]) {
        let c = chain(&r, &prec)?;
        let lin = 2 * m + 1;
        let lhs = theta_sum_s(&Complex::from_i64(&prec, lin), &cx(c.q.clone()), &prec)?;
        let rhs = odd_sum_closed(&c, lin, &prec);
        ctx.compare(&lhs, &cx(rhs));
    }
    Ok(())
}

fn landen_product(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    let bits = prec.bits();
    for r in r_points() {
        let c = chain(&r, &prec)?;
        let q = cx(c.q.clone());
        let q2 = cx(Float::with_val(bits, c.q.square_ref()));
        let ratio = &weber_phi(&q, &prec)? / &weber_phi(&q2, &prec)?;
        let lhs = &ratio * &ratio;
        let rhs = rpow(&c.q, 1, 12, &prec) * rpow(&c.k11, 1, 6, &prec) * rpow(&c.k22, 1, 3, &prec)
            / (rpow(&c.k21, 1, 6, &prec) * rpow(&c.k12, 1, 3, &prec));
        ctx.compare(&lhs, &cx(rhs));
    }
    Ok(())
}
