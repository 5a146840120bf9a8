//! Truncated infinite sums and products with explicit tail bounds.
//!
//! Termination is decided with 64-bit magnitudes; the partial sums
//! themselves are kept at full working precision. A series stops once two
//! consecutive terms are non-increasing in magnitude and below the tail
//! threshold, where the threshold is the working epsilon scaled by the
//! largest term seen so far.

use rug::Float;

use super::{Complex, Prec};
use crate::error::{Error, Result};

pub const DEFAULT_MAX_TERMS: u64 = 1_000_000;

/// How the caller bounds the tail of a series once terms start shrinking.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum TailPolicy {
    /// `|t_{n+1}| <= ratio * |t_n|` eventually, with `0 <= ratio < 1`.
    Geometric { ratio: f64 },
    /// Terms decay like `|q|^{n^2}`; the tail is dominated by the last term.
    Gaussian,
}

impl TailPolicy {
    fn tail_factor(self) -> f64 {
        match self {
            TailPolicy::Geometric { ratio } => {
                let r = ratio.clamp(0.0, 1.0 - 1e-12);
                // the first term counts as well, so bound the whole tail
                1.0 / (1.0 - r)
            }
            TailPolicy::Gaussian => 2.0,
        }
    }
}

fn mag(z: &Complex) -> Float {
    Float::with_val(64, z.re.hypot_ref(&z.im))
}

struct Stopper {
    factor: f64,
    eps: Float,
    scale: Float,
    prev: Option<Float>,
    quiet: u32,
}

impl Stopper {
    fn new(policy: TailPolicy, prec: &Prec) -> Self {
        Stopper {
            factor: policy.tail_factor(),
            eps: Float::with_val(64, prec.eps()),
            scale: Float::with_val(64, 0),
            prev: None,
            quiet: 0,
        }
    }

    /// Feeds the magnitude of the latest term; true once the tail is closed.
    fn done(&mut self, m: Float) -> bool {
        if m > self.scale {
            self.scale = m.clone();
        }
        let decreasing = self.prev.as_ref().map_or(true, |p| m <= *p);
        let bound = Float::with_val(64, &m * self.factor);
        let small = if self.scale.is_zero() {
            true
        } else {
            bound <= Float::with_val(64, &self.eps * &self.scale)
        };
        self.prev = Some(m);
        if decreasing && small {
            self.quiet += 1;
        } else {
            self.quiet = 0;
        }
        self.quiet >= 2
    }
}

/// `sum_{n >= 0} term(n)` to working precision.
///
/// `term` may be stateful so that callers can update powers by recurrence
/// instead of recomputing them.
pub fn sum_series<F>(mut term: F, policy: TailPolicy, prec: &Prec) -> Result<Complex>
where
    F: FnMut(u64) -> Complex,
{
    sum_series_limited(&mut term, policy, prec, DEFAULT_MAX_TERMS, "series")
}

pub(crate) fn sum_series_limited<F>(
    term: &mut F,
    policy: TailPolicy,
    prec: &Prec,
    max_terms: u64,
    context: &str,
) -> Result<Complex>
where
    F: FnMut(u64) -> Complex,
{
    let mut total = Complex::zero(prec);
    let mut stop = Stopper::new(policy, prec);
    for n in 0..max_terms {
        let t = term(n);
        let m = mag(&t);
        total += &t;
        if stop.done(m) {
            return Ok(total);
        }
    }
    Err(Error::no_convergence(context, max_terms))
}

/// `sum_{n in Z} term(n)`, summing each direction until its own tail closes.
pub fn sum_bilateral<F>(mut term: F, policy: TailPolicy, prec: &Prec) -> Result<Complex>
where
    F: FnMut(i64) -> Complex,
{
    let centre = term(0);
    let up = sum_series_limited(
        &mut |n: u64| term(n as i64 + 1),
        policy,
        prec,
        DEFAULT_MAX_TERMS,
        "bilateral series (n > 0)",
    )?;
    let down = sum_series_limited(
        &mut |n: u64| term(-(n as i64) - 1),
        policy,
        prec,
        DEFAULT_MAX_TERMS,
        "bilateral series (n < 0)",
    )?;
    Ok(&(&centre + &up) + &down)
}

/// Value of an infinite product. `zero_factor` records the index of an
/// exactly vanishing factor, in which case `value` is exactly zero.
#[derive(Clone, Debug, PartialEq)]
pub struct Product {
    pub value: Complex,
    pub zero_factor: Option<u64>,
}

/// `prod_{n >= 0} factor(n)` by direct multiplication.
///
/// `ratio` bounds the eventual geometric decay of `|factor(n) - 1|`; the
/// product stops when `|factor(n) - 1| / (1 - ratio)` falls below the working
/// epsilon twice in a row, which bounds the relative error of the tail.
pub fn prod_infinite<F>(mut factor: F, ratio: f64, prec: &Prec) -> Result<Product>
where
    F: FnMut(u64) -> Complex,
{
    let one = prec.one();
    let mut value = Complex::one(prec);
    let mut stop = Stopper::new(TailPolicy::Geometric { ratio }, prec);
    // relative error, so the scale is pinned at 1
    stop.scale = Float::with_val(64, 1);
    for n in 0..DEFAULT_MAX_TERMS {
        let f = factor(n);
        if f.is_zero() {
            return Ok(Product {
                value: Complex::zero(prec),
                zero_factor: Some(n),
            });
        }
        let deviation = mag(&Complex::new(Float::with_val(64, &f.re - &one), f.im.clone()));
        value *= &f;
        if stop.done(deviation) {
            return Ok(Product {
                value,
                zero_factor: None,
            });
        }
    }
    Err(Error::no_convergence("infinite product", DEFAULT_MAX_TERMS))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rug::ops::Pow;

    fn close(a: &Complex, b: &Complex, prec: &Prec) -> bool {
        (a - b).abs() < prec.target_eps()
    }

    #[test]
    fn geometric_half() {
        let p = Prec::new(30).unwrap();
        let half = Complex::from_real(p.ratio(1, 2));
        let mut t = Complex::one(&p);
        let s = sum_series(
            |n| {
                if n > 0 {
                    t = &t * &half;
                }
                t.clone()
            },
            TailPolicy::Geometric { ratio: 0.5 },
            &p,
        )
        .unwrap();
        assert!(close(&s, &Complex::from_i64(&p, 2), &p));
    }

    #[test]
    fn bilateral_at_zero_nome() {
        let p = Prec::new(20).unwrap();
        let s = sum_bilateral(
            |n| {
                if n == 0 {
                    Complex::one(&p)
                } else {
                    Complex::zero(&p)
                }
            },
            TailPolicy::Gaussian,
            &p,
        )
        .unwrap();
        assert_eq!(s, Complex::one(&p));
    }

    #[test]
    fn theta3_at_exp_minus_pi() {
        // oracle: brute-force partial sums in f64 stabilise at 1.0864348112133080
        let p = Prec::new(40).unwrap();
        let pi = p.pi();
        let s = sum_bilateral(
            |n| {
                let e = Float::with_val(p.bits(), &pi * (-n * n));
                Complex::from_real(e.exp())
            },
            TailPolicy::Gaussian,
            &p,
        )
        .unwrap();
        assert!((s.re.to_f64() - 1.086_434_811_213_308).abs() < 1e-15);
    }

    #[test]
    fn products() {
        let p = Prec::new(40).unwrap();
        let trivial = prod_infinite(|_| Complex::one(&p), 0.5, &p).unwrap();
        assert_eq!(trivial.value, Complex::one(&p));

        // oracle: 60-factor f64 product of (1 - 2^-n) is 0.288788095086602
        let half = p.ratio(1, 2);
        let prod = prod_infinite(
            |n| {
                let pow = Float::with_val(p.bits(), (&half).pow(n as u32 + 1));
                Complex::from_real(Float::with_val(p.bits(), 1 - pow))
            },
            0.5,
            &p,
        )
        .unwrap();
        assert!((prod.value.re.to_f64() - 0.288_788_095_086_602).abs() < 1e-15);

        let zero = prod_infinite(
            |n| {
                if n == 3 {
                    Complex::zero(&p)
                } else {
                    Complex::from_real(p.ratio(1, 2))
                }
            },
            0.0,
            &p,
        )
        .unwrap();
        assert_eq!(zero.zero_factor, Some(3));
        assert!(zero.value.is_zero());
    }

    #[test]
    fn budget_exhaustion() {
        let p = Prec::new(20).unwrap();
        let r = sum_series_limited(
            &mut |_| Complex::one(&p),
            TailPolicy::Geometric { ratio: 0.5 },
            &p,
            100,
            "divergent",
        );
        assert!(matches!(r, Err(Error::NonConvergence { .. })));
    }

    proptest! {
        #[test]
        fn finite_support_is_exact(values in proptest::collection::vec(-1000i64..1000, 1..20)) {
            // two consecutive zeros inside the support would close the tail early
            prop_assume!(values.iter().all(|v| *v != 0));
            let p = Prec::new(20).unwrap();
            let s = sum_series(
                |n| values.get(n as usize).map_or(Complex::zero(&p), |v| Complex::from_i64(&p, *v)),
                TailPolicy::Gaussian,
                &p,
            );
            let expected: i64 = values.iter().sum();
            let s = s.unwrap();
            prop_assert_eq!(s.re.to_f64(), expected as f64);
        }
    }
}
