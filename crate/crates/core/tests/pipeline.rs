//! End-to-end use of the public API: nome to modulus, the named fractions
//! through every route, and recognition of their values.

use ellq_core::algrec::{recognize, Confidence};
use ellq_core::cfrac::{r1_cf, r1_product, r3_cf};
use ellq_core::elliptic::{elliptic_k, modulus_from_nome, nome_from_r, singular_modulus};
use ellq_core::hyperq::gauss_sum_sides;
use ellq_core::numerics::{format_decimal, parse_real};
use ellq_core::qfunctions::{theta2, theta3, theta4};
use ellq_core::rquantity::{rq, rq_charprod, rq_expsum, rq_theta, Chi2Character, RqParams};
use ellq_core::{Complex, Error, Prec, Real};
use rug::{Float, Integer, Rational};

fn prec(digits: u32) -> Prec {
    Prec::new(digits).unwrap()
}

fn close(a: &Complex, b: &Complex, p: &Prec, slack: i32) -> bool {
    (a - b).abs() < p.pow10(-(p.digits() as i32) + slack)
}

#[test]
fn modulus_routes_agree() {
    let p = prec(50);
    for r in [Rational::from(1), Rational::from(3), Rational::from((2, 5))] {
        let nome = nome_from_r(&r, &p).unwrap();
        let m = modulus_from_nome(&nome, &p).unwrap();
        let q = nome.q.clone();
        let t2 = theta2(&q, &p).unwrap();
        let t3 = theta3(&Complex::zero(&p), &q, &p).unwrap();
        let k_theta = &(&t2 * &t2) / &(&t3 * &t3);
        assert!(close(&Complex::from_real(m.k.clone()), &k_theta, &p, 5));
        let big_k = elliptic_k(&m.k, &p).unwrap();
        assert!(close(&Complex::from_real(m.big_k.clone()), &Complex::from_real(big_k), &p, 5));
    }
    // k_1 = 1/sqrt 2
    let k1 = singular_modulus(&Rational::from(1), &p).unwrap();
    let expected = Float::with_val(p.bits(), 2).sqrt().recip();
    assert!(Float::with_val(p.bits(), k1 - expected).abs() < p.pow10(-45));
}

#[test]
fn rogers_ramanujan_every_route() {
    let p = prec(50);
    let x = Float::with_val(p.bits(), p.pi() * 2u32);
    let q = Complex::from_real(Float::with_val(p.bits(), -&x).exp());
    let chi = Chi2Character::new(1, 2, 5).unwrap();
    let params = RqParams::ints(1, 2, 5, &p).unwrap();
    let fraction = r1_cf(&q, &p).unwrap();
    let (one, two, five) = (p.real(1), p.real(2), p.real(5));
    let routes = [
        r1_product(&q, &p).unwrap(),
        rq(&params, &q, &p).unwrap(),
        Complex::from_real(rq_theta(&one, &two, &five, &x, &p).unwrap()),
        Complex::from_real(rq_expsum(&one, &two, &five, &x, &p).unwrap()),
        &rq_charprod(&chi, &q, &p).unwrap() * &ellq_core::qfunctions::nome_pow_real(&q, &p.ratio(1, 5)),
    ];
    for value in &routes {
        assert!(close(&fraction, value, &p, 5), "{value} vs {fraction}");
    }
    assert_eq!(format_decimal(&fraction.re, 10), "0.2840790438");
}

#[test]
fn values_at_singular_nomes_are_recognized() {
    let p = prec(140);
    let height = Integer::from(100_000_000);
    let value = |pr: &Prec| -> ellq_core::Result<Real> {
        let q = nome_from_r(&Rational::from(1), pr)?.q;
        Ok(r3_cf(&q, pr)?.re)
    };
    let found = recognize(value, 8, &height, &p).unwrap();
    let poly = found.found().expect("R(1,3,8; e^-pi) has degree 4");
    assert_eq!(poly.to_text(), "1 - 4*t - 6*t^2 + 4*t^3 + t^4");
    assert_eq!(poly.confidence, Confidence::Verified);
}

#[test]
fn gauss_sum_example() {
    // both sides frozen from an independent mpmath evaluation
    let p = prec(40);
    let v = |s: &str| Complex::from_real(parse_real(s, &p).unwrap());
    let (series, product) = gauss_sum_sides(&v("0.5"), &v("0.6"), &v("0.2"), &v("0.1"), &p).unwrap();
    let expected = v("1.524138701849228559367462295855041517228");
    assert!(close(&series, &expected, &p, 3));
    assert!(close(&product, &expected, &p, 3));
}

#[test]
fn errors_surface_as_typed_variants() {
    let p = prec(30);
    // |q| e^{2 |Im z|} >= 1: the theta series cannot converge
    let z = Complex::new(p.zero(), p.real(2));
    let q = Complex::from_real(p.ratio(1, 2));
    assert!(matches!(theta4(&z, &q, &p), Err(Error::NonConvergence { .. })));
    assert!(matches!(nome_from_r(&Rational::from(-1), &p), Err(Error::Domain(_))));
    let params = RqParams::ints(1, 5, 5, &p).unwrap();
    assert!(matches!(rq(&params, &q, &p), Err(Error::DivisionByZero(_))));
    assert!(matches!(Prec::new(3), Err(_)));
}
