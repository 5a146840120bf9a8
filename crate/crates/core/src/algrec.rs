//! Recognition of algebraic numbers: integer relations among `1, x, ..., x^d`
//! by LLL reduction of the lattice spanned by the rows `(e_i, round(10^P x^i))`.
//!
//! The reduction is the all-integer variant (Gram-Schmidt data kept as
//! integer `d_i` and `lambda_ij`), so it is exact and deterministic.

use std::fmt;

use rug::{Float, Integer};

use crate::error::{Error, Result};
use crate::numerics::{Prec, Real};

/// Extra digits used to confirm a recognized polynomial.
pub const VERIFY_EXTRA_DIGITS: u32 = 30;

/// Required drop of the residual between `digits` and `digits + 30`.
pub const VERIFY_SHRINK_DIGITS: i32 = 15;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Confidence {
    Verified,
    Unverified,
}

/// An integer polynomial `c_0 + c_1 t + ... + c_d t^d`, content 1, `c_d > 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct MinPolyResult {
    pub coeffs: Vec<Integer>,
    pub degree: usize,
    pub residual: Real,
    pub elevated_residual: Option<Real>,
    pub confidence: Confidence,
}

impl MinPolyResult {
    pub fn to_text(&self) -> String {
        poly_text(&self.coeffs)
    }

    /// Ascending coefficients as a JSON integer array.
    pub fn to_json(&self) -> String {
        let items: Vec<String> = self.coeffs.iter().map(Integer::to_string).collect();
        format!("[{}]", items.join(","))
    }
}

impl fmt::Display for MinPolyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Outcome of a search. `NotFound` is a legitimate answer, not an error.
#[derive(Clone, Debug, PartialEq)]
pub enum Recognition {
    Found(MinPolyResult),
    NotFound { max_degree: usize, height_bound: Integer },
}

impl Recognition {
    pub fn found(&self) -> Option<&MinPolyResult> {
        match self {
            Recognition::Found(r) => Some(r),
            Recognition::NotFound { .. } => None,
        }
    }
}

/// `16 - 240*t^2 + 800*t^3 + ... + 625*t^8`.
pub fn poly_text(coeffs: &[Integer]) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if *c == 0 {
            continue;
        }
        let negative = *c < 0;
        let mag = Integer::from(c.abs_ref());
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let var = match i {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{i}"),
        };
        if i == 0 {
            out.push_str(&mag.to_string());
        } else if mag == 1 {
            out.push_str(&var);
        } else {
            out.push_str(&format!("{mag}*{var}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `|sum c_i x^i|` by Horner's rule at the working precision.
pub fn verify_root(coeffs: &[Integer], x: &Real, prec: &Prec) -> Real {
    let bits = prec.bits();
    let x = Float::with_val(bits, x);
    let mut acc = Float::with_val(bits, 0);
    for c in coeffs.iter().rev() {
        acc *= &x;
        acc += c;
    }
    acc.abs()
}

fn dot(a: &[Integer], b: &[Integer]) -> Integer {
    a.iter().zip(b).map(|(x, y)| Integer::from(x * y)).sum()
}

/// `round(n / d) = floor((2n + d) / 2d)` for `d > 0`.
fn nearest(num: &Integer, den: &Integer) -> Integer {
    let top = Integer::from(num * 2) + den;
    top.div_rem_floor(Integer::from(den * 2)).0
}

/// LLL-reduces the rows of `basis` in place with parameter `delta = num/den`.
///
/// The rows must be linearly independent.
pub fn lll_reduce(basis: &mut [Vec<Integer>], delta: (u32, u32)) -> Result<()> {
    let n = basis.len();
    if n < 2 {
        return Ok(());
    }
    let (alpha, beta) = delta;
    // 1-based: d[0] = 1, d[i] for row i-1; lambda[i][j] for j < i
    let mut d = vec![Integer::from(1); n + 1];
    let mut lambda = vec![vec![Integer::new(); n + 1]; n + 1];
    d[1] = dot(&basis[0], &basis[0]);
    if d[1] == 0 {
        return Err(Error::domain("LLL basis contains a zero vector"));
    }
    let mut k = 2usize;
    let mut kmax = 1usize;

    let red = |basis: &mut [Vec<Integer>], lambda: &mut Vec<Vec<Integer>>, d: &[Integer], k: usize, l: usize| {
        let twice = Integer::from(lambda[k][l].abs_ref()) * 2;
        if twice > d[l] {
            let q = nearest(&lambda[k][l], &d[l]);
            let (lo, hi) = basis.split_at_mut(k - 1);
            for (x, y) in hi[0].iter_mut().zip(&lo[l - 1]) {
                *x -= Integer::from(&q * y);
            }
            let shift = Integer::from(&q * &d[l]);
            lambda[k][l] -= shift;
            for i in 1..l {
                let s = Integer::from(&q * &lambda[l][i]);
                lambda[k][i] -= s;
            }
        }
    };

    while k <= n {
        if k > kmax {
            kmax = k;
            for j in 1..=k {
                let mut u = dot(&basis[k - 1], &basis[j - 1]);
                for i in 1..j {
                    u = (Integer::from(&d[i] * &u) - Integer::from(&lambda[k][i] * &lambda[j][i])) / &d[i - 1];
                }
                if j < k {
                    lambda[k][j] = u;
                } else {
                    if u == 0 {
                        return Err(Error::domain("LLL basis rows are linearly dependent"));
                    }
                    d[k] = u;
                }
            }
        }
        loop {
            red(basis, &mut lambda, &d, k, k - 1);
            let lhs = Integer::from(&d[k] * &d[k - 2]) * beta;
            let l2 = Integer::from(lambda[k][k - 1].square_ref());
            let rhs = Integer::from(d[k - 1].square_ref()) * alpha - l2 * beta;
            if lhs < rhs {
                // swap rows k-1 and k
                basis.swap(k - 1, k - 2);
                for j in 1..k - 1 {
                    let t = std::mem::take(&mut lambda[k][j]);
                    lambda[k][j] = std::mem::replace(&mut lambda[k - 1][j], t);
                }
                let lam = lambda[k][k - 1].clone();
                let b = (Integer::from(&d[k - 2] * &d[k]) + Integer::from(lam.square_ref())) / &d[k - 1];
                for i in k + 1..=kmax {
                    let t = lambda[i][k].clone();
                    lambda[i][k] = (Integer::from(&d[k] * &lambda[i][k - 1]) - Integer::from(&lam * &t)) / &d[k - 1];
                    lambda[i][k - 1] = (Integer::from(&b * &t) + Integer::from(&lam * &lambda[i][k])) / &d[k];
                }
                d[k - 1] = b;
                if k > 2 {
                    k -= 1;
                }
            } else {
                for l in (1..k - 1).rev() {
                    red(basis, &mut lambda, &d, k, l);
                }
                k += 1;
                break;
            }
        }
    }
    Ok(())
}

fn normalize(mut coeffs: Vec<Integer>) -> Option<Vec<Integer>> {
    while coeffs.last().is_some_and(|c| *c == 0) {
        coeffs.pop();
    }
    if coeffs.len() < 2 {
        return None;
    }
    let content = coeffs.iter().fold(Integer::new(), |g, c| g.gcd(c));
    for c in coeffs.iter_mut() {
        *c /= &content;
    }
    if *coeffs.last().unwrap() < 0 {
        for c in coeffs.iter_mut() {
            *c = Integer::from(-&*c);
        }
    }
    Some(coeffs)
}

fn check_precision(max_degree: usize, prec: &Prec) -> Result<()> {
    if max_degree == 0 {
        return Err(Error::domain("max_degree must be at least 1"));
    }
    let needed = 10 * max_degree as u32 + 40;
    if prec.digits() < needed {
        return Err(Error::InsufficientPrecision {
            needed,
            available: prec.digits(),
        });
    }
    Ok(())
}

fn relation_at_degree(x: &Real, degree: usize, height: &Integer, prec: &Prec) -> Result<Option<Vec<Integer>>> {
    let bits = prec.bits();
    let scale_digits = prec.digits() as i32 - 10;
    let scale = prec.pow10(scale_digits);
    let mut power = Float::with_val(bits, 1);
    let mut basis = Vec::with_capacity(degree + 1);
    for i in 0..=degree {
        let mut row = vec![Integer::new(); degree + 2];
        row[i] = Integer::from(1);
        let scaled = Float::with_val(bits, &power * &scale);
        row[degree + 1] = scaled
            .round()
            .to_integer()
            .ok_or_else(|| Error::domain("value is not finite"))?;
        basis.push(row);
        power *= x;
    }
    lll_reduce(&mut basis, (99, 100))?;
    let threshold_unit = prec.pow10(-scale_digits);
    for row in &basis {
        let Some(coeffs) = normalize(row[..=degree].to_vec()) else {
            continue;
        };
        if coeffs.iter().any(|c| Integer::from(c.abs_ref()) > *height) {
            continue;
        }
        let l1: Integer = coeffs.iter().map(|c| Integer::from(c.abs_ref())).sum();
        let threshold = Float::with_val(bits, &threshold_unit * &l1);
        if verify_root(&coeffs, x, prec) < threshold {
            return Ok(Some(coeffs));
        }
    }
    Ok(None)
}

/// Smallest-degree integer polynomial of height at most `height_bound` with
/// `x` as a root, searching degrees `1..=max_degree`.
///
/// `x` must carry at least `10 max_degree + 40` digits. The result is
/// `Unverified`; [`recognize`] re-evaluates at higher precision.
pub fn find_minpoly(x: &Real, max_degree: usize, height_bound: &Integer, prec: &Prec) -> Result<Recognition> {
    check_precision(max_degree, prec)?;
    for degree in 1..=max_degree {
        if let Some(coeffs) = relation_at_degree(x, degree, height_bound, prec)? {
            let residual = verify_root(&coeffs, x, prec);
            return Ok(Recognition::Found(MinPolyResult {
                degree: coeffs.len() - 1,
                coeffs,
                residual,
                elevated_residual: None,
                confidence: Confidence::Unverified,
            }));
        }
    }
    Ok(Recognition::NotFound {
        max_degree,
        height_bound: height_bound.clone(),
    })
}

/// Recovers the polynomial of `value(prec)` and confirms it by re-evaluating
/// at `digits + 30`: `Verified` when the residual falls by at least `10^15`
/// (measured from the working epsilon if the first residual happens to be
/// smaller) or vanishes exactly.
pub fn recognize<F>(value: F, max_degree: usize, height_bound: &Integer, prec: &Prec) -> Result<Recognition>
where
    F: Fn(&Prec) -> Result<Real>,
{
    let x = value(prec)?;
    let mut outcome = find_minpoly(&x, max_degree, height_bound, prec)?;
    if let Recognition::Found(result) = &mut outcome {
        let high = Prec::with_guard(prec.digits() + VERIFY_EXTRA_DIGITS, prec.guard())?;
        let x_high = value(&high)?;
        let elevated = verify_root(&result.coeffs, &x_high, &high);
        let floor = Float::with_val(high.bits(), prec.eps()).max(&result.residual);
        let verified =
            elevated == 0 || Float::with_val(high.bits(), &elevated * high.pow10(VERIFY_SHRINK_DIGITS)) <= floor;
        result.confidence = if verified {
            Confidence::Verified
        } else {
            Confidence::Unverified
        };
        result.elevated_residual = Some(elevated);
    }
    Ok(outcome)
}
