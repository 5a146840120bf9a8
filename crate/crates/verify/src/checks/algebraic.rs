//! Algebraicity claims, tested by integer-relation search. A value counts as
//! algebraic when some power x^k with k | 24 has a verified minimal
//! polynomial of degree at most 8 and height at most 10^8.

use ellq_core::algrec::{find_minpoly, recognize, verify_root, Confidence, Recognition};
use ellq_core::elliptic::{modulus_from_nome, nome_from_r};
use ellq_core::rquantity::{agile_normalized, agile_normalized_dq, drq_dq, drq_normalized, rq, tau_star, RqParams};
use ellq_core::{Complex, Prec, Real, Result};
use rug::ops::Pow;
use rug::{Float, Integer, Rational};

use super::cx;
use crate::check::{CheckCtx, IdentityCheck};
use crate::table::{derivative_scale, rho_poly};

/// Recognition runs this many digits above the requested precision.
const EXTRA: u32 = 100;
const MAX_DEGREE: usize = 8;
const POWERS: [u32; 8] = [1, 2, 3, 4, 6, 8, 12, 24];

pub(super) fn checks() -> Vec<IdentityCheck> {
    vec![
        IdentityCheck::new(
            "obs1.algebraic",
            "normalized Agile values at q = e^{-pi sqrt r} are algebraic (some power of degree <= 8)",
            "q^{p/12 - a/2 + a^2/(2p)} [a,p;q] is algebraic for rational a, p, r",
            obs1_power,
        )
        .extra_digits(EXTRA),
        IdentityCheck::new(
            "obs1.direct-degree8",
            "normalized Agile values themselves have degree <= 8",
            "q^{p/12 - a/2 + a^2/(2p)} [a,p;q] is a root of an integer polynomial of degree <= 8",
            obs1_direct,
        )
        .extra_digits(EXTRA)
        .discrepancy(),
        IdentityCheck::new(
            "thm2.algebraic",
            "R(a, b, p; e^{-pi sqrt r}) is algebraic",
            "R(a,b,p;q) = q^{-(a-b)/2 + (a^2-b^2)/(2p)} R*(a,b,p;q) is algebraic for rational a, b, p, r",
            thm2,
        )
        .extra_digits(EXTRA),
        IdentityCheck::new(
            "obs2.algebraic",
            "first derivatives times q pi^2 / K(k_r)^2 are algebraic",
            "R'(a,b,p;q) q pi^2/K(k_r)^2 and (q^{p/12 - a/2 + a^2/(2p)} [a,p;q])' q pi^2/K(k_r)^2 are algebraic",
            obs2,
        )
        .extra_digits(EXTRA),
        IdentityCheck::new(
            "thm5.algebraic",
            "tau* at q = e^{-pi sqrt r} is algebraic",
            "tau*(a,p;e^{-pi sqrt r}) is algebraic for rational a, p, r",
            thm5,
        )
        .extra_digits(EXTRA),
        IdentityCheck::new(
            "deriv.rho-poly",
            "the (1, 2, 5) derivative constant is a root of the stated octic, and recognition recovers it",
            "rho = R'(1,2,5;e^{-pi}) 16 pi^3/(e^pi Gamma(1/4)^4), 16 - 240 rho^2 + 800 rho^3 - 2900 rho^4 - 6000 rho^5 \
             - 6500 rho^6 + 17500 rho^7 + 625 rho^8 = 0",
            rho_poly_check,
        )
        .extra_digits(EXTRA),
    ]
}

fn height() -> Integer {
    Integer::from(100_000_000u32)
}

fn q_of(r: &Rational, prec: &Prec) -> Result<Real> {
    Ok(nome_from_r(r, prec)?.q.re)
}

/// Searches `x^k` over the divisors of 24; records the elevated residual of
/// the first verified polynomial or fails the sample.
fn power_reading<F>(ctx: &mut CheckCtx, label: &str, powers: &[u32], value: F) -> Result<()>
where
    F: Fn(&Prec) -> Result<Real>,
{
    let prec = ctx.prec.clone();
    for &k in powers {
        let outcome = recognize(|p| Ok(value(p)?.pow(k)), MAX_DEGREE, &height(), &prec)?;
        if let Recognition::Found(found) = outcome {
            if found.confidence == Confidence::Verified {
                let power = if k == 1 { String::from("x") } else { format!("x^{k}") };
                ctx.note(format!("{label}: {power} has degree {}: {}", found.degree, found.to_text()));
                ctx.record(found.elevated_residual.as_ref().unwrap_or(&found.residual));
                return Ok(());
            }
        }
    }
    let tried: Vec<String> = powers.iter().map(u32::to_string).collect();
    ctx.fail(format!(
        "{label}: no verified polynomial of degree <= {MAX_DEGREE} for x^k, k in {{{}}}",
        tried.join(", ")
    ));
    Ok(())
}

const OBS1_CASES: [(i64, i64, i64); 7] = [(1, 4, 1), (1, 5, 1), (2, 5, 1), (1, 6, 1), (1, 8, 1), (3, 8, 1), (1, 2, 1)];

fn normalized_agile(a: i64, p: i64, r: i64) -> impl Fn(&Prec) -> Result<Real> {
    move |prec| agile_normalized(&prec.real(a), &prec.real(p), &q_of(&Rational::from(r), prec)?, prec)
}

fn obs1_power(ctx: &mut CheckCtx) -> Result<()> {
    for (a, p, r) in OBS1_CASES {
        power_reading(ctx, &format!("({a},{p}) r={r}"), &POWERS, normalized_agile(a, p, r))?;
    }
    Ok(())
}

fn obs1_direct(ctx: &mut CheckCtx) -> Result<()> {
    for (a, p, r) in [(1, 5, 1), (2, 5, 1), (1, 6, 1)] {
        power_reading(ctx, &format!("({a},{p}) r={r}"), &[1], normalized_agile(a, p, r))?;
    }
    Ok(())
}

fn thm2(ctx: &mut CheckCtx) -> Result<()> {
    for (a, b, p, r) in [(1, 2, 5, 1), (1, 3, 8, 1), (1, 2, 4, 1), (1, 3, 6, 1), (1, 2, 5, 4), (1, 3, 8, 2)] {
        let value = move |prec: &Prec| -> Result<Real> {
            let q = cx(q_of(&Rational::from(r), prec)?);
            Ok(rq(&RqParams::ints(a, b, p, prec)?, &q, prec)?.re)
        };
        power_reading(ctx, &format!("R({a},{b},{p}) r={r}"), &POWERS, value)?;
    }
    Ok(())
}

fn obs2(ctx: &mut CheckCtx) -> Result<()> {
    for (a, b, p) in [(1, 2, 5), (1, 3, 6), (1, 3, 8)] {
        let value = move |prec: &Prec| drq_normalized(&RqParams::ints(a, b, p, prec)?, &Rational::from(1), prec);
        power_reading(ctx, &format!("R'({a},{b},{p}) r=1"), &POWERS, value)?;
    }
    for (a, p) in [(1, 4), (1, 2)] {
        let value = move |prec: &Prec| -> Result<Real> {
            let nome = nome_from_r(&Rational::from(1), prec)?;
            let q = nome.q.re.clone();
            let big_k = modulus_from_nome(&nome, prec)?.big_k;
            let d = agile_normalized_dq(&prec.real(a), &prec.real(p), &q, prec)?;
            let bits = prec.bits();
            let pi2 = Float::with_val(bits, prec.pi().square_ref());
            Ok(d * q * pi2 / Float::with_val(bits, big_k.square_ref()))
        };
        power_reading(ctx, &format!("agile'({a},{p}) r=1"), &POWERS, value)?;
    }
    Ok(())
}

fn thm5(ctx: &mut CheckCtx) -> Result<()> {
    for (a, p, r) in [((1, 2), 1, 1), ((1, 2), 2, 1), ((1, 2), 3, 1)] {
        let value = move |prec: &Prec| -> Result<Real> {
            let q = q_of(&Rational::from(r), prec)?;
            Ok(tau_star(&Complex::from_real(prec.ratio(a.0, a.1)), &prec.real(p), &q, prec)?.re)
        };
        power_reading(ctx, &format!("tau*({}/{},{p}) r={r}", a.0, a.1), &POWERS, value)?;
    }
    Ok(())
}

fn rho_poly_check(ctx: &mut CheckCtx) -> Result<()> {
    let prec = ctx.prec.clone();
    let d125 = drq_dq(&RqParams::ints(1, 2, 5, &prec)?, &q_of(&Rational::from(1), &prec)?, &prec)?;
    let rho = d125 * 16u32 / derivative_scale(&prec)?;
    let poly = rho_poly();
    ctx.record(&verify_root(&poly, &rho, &prec));
    match find_minpoly(&rho, MAX_DEGREE, &height(), &prec)? {
        Recognition::Found(found) if found.coeffs == poly => {
            ctx.note(format!("recovered {}", found.to_text()));
        }
        Recognition::Found(found) => ctx.fail(format!("recognized a different polynomial: {}", found.to_text())),
        Recognition::NotFound { .. } => ctx.fail("no polynomial of degree <= 8 found"),
    }
    Ok(())
}
