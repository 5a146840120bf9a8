//! Decimal text for reals: scientific notation for reports and positional
//! notation for command-line output. Always '.', '-' and 'e', never locale
//! dependent.

use rug::Float;

use super::{Prec, Real};
use crate::error::{Error, Result};

/// Sign, significant digits and decimal exponent `e` with `x = 0.d1d2... * 10^e`.
fn digits_of(x: &Real, sig: usize) -> (bool, String, i64) {
    let sig = sig.max(1);
    let (neg, digits, exp) = x.to_sign_string_exp(10, Some(sig));
    (neg, digits, exp.map_or(0, i64::from))
}

/// `-1.23456789e-10` style rendering with `sig` significant digits.
pub fn format_sci(x: &Real, sig: usize) -> String {
    if x.is_zero() {
        return "0e0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let (neg, digits, exp) = digits_of(x, sig);
    let mut out = String::with_capacity(digits.len() + 8);
    if neg {
        out.push('-');
    }
    out.push_str(&digits[..1]);
    let rest = digits[1..].trim_end_matches('0');
    if !rest.is_empty() {
        out.push('.');
        out.push_str(rest);
    }
    out.push('e');
    out.push_str(&(exp - 1).to_string());
    out
}

/// Positional rendering with `sig` significant digits, e.g.
/// `0.707106781186547524400844362105`; falls back to [`format_sci`] when the
/// exponent is far from zero.
pub fn format_decimal(x: &Real, sig: usize) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let (neg, digits, exp) = digits_of(x, sig);
    if exp < -20 || exp > sig as i64 + 20 {
        return format_sci(x, sig);
    }
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if exp <= 0 {
        out.push_str("0.");
        out.extend(std::iter::repeat('0').take((-exp) as usize));
        out.push_str(&digits);
    } else if exp as usize >= digits.len() {
        out.push_str(&digits);
        out.extend(std::iter::repeat('0').take(exp as usize - digits.len()));
    } else {
        out.push_str(&digits[..exp as usize]);
        out.push('.');
        out.push_str(&digits[exp as usize..]);
    }
    out
}

/// Parses a decimal literal (`1.5`, `-2e-3`, `0.333`) at working precision.
pub fn parse_real(text: &str, prec: &Prec) -> Result<Real> {
    let trimmed = text.trim();
    let parsed = Float::parse(trimmed)
        .map_err(|e| Error::domain(format!("invalid decimal literal `{trimmed}`: {e}")))?;
    Ok(Float::with_val(prec.bits(), parsed))
}
