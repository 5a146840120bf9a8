//! The nome grammar accepted by `--q`:
//!
//! ```text
//! NOME     := DECIMAL | "r=" RATIONAL | "exp(-pi*sqrt(" RATIONAL "))"
//! RATIONAL := INT ["/" INT]
//! ```
//!
//! Whitespace is ignored and keywords are case-insensitive. A decimal must lie
//! strictly between 0 and 1; a rational must be positive.

use std::fmt;
use std::str::FromStr;

use ellq_core::elliptic::nome_from_r;
use ellq_core::numerics::parse_real;
use ellq_core::{Prec, Real};
use rug::ops::Pow;
use rug::{Integer, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NomeExpr {
    /// Canonical text of a decimal literal in `(0, 1)`.
    Decimal(String),
    /// `r=R`, standing for `e^{-pi sqrt R}`.
    Shorthand(Rational),
    /// `exp(-pi*sqrt(R))`.
    Exp(Rational),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseNomeError {
    pub token: String,
    pub reason: &'static str,
}

impl fmt::Display for ParseNomeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid nome `{}`: {}", self.token, self.reason)
    }
}

impl std::error::Error for ParseNomeError {}

fn err(token: &str, reason: &'static str) -> ParseNomeError {
    ParseNomeError {
        token: token.to_string(),
        reason,
    }
}

fn parse_int(text: &str) -> Option<Integer> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    Integer::from_str(text).ok()
}

/// `INT ["/" INT]`, positive.
pub fn parse_rational(text: &str) -> Result<Rational, ParseNomeError> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let num = parse_int(num).ok_or_else(|| err(text, "expected INT or INT/INT"))?;
    let den = parse_int(den).ok_or_else(|| err(text, "expected INT or INT/INT"))?;
    if den == 0 {
        return Err(err(text, "zero denominator"));
    }
    let value = Rational::from((num, den));
    if value <= 0 {
        return Err(err(text, "r must be positive"));
    }
    Ok(value)
}

/// Exact value of `DIGITS [. DIGITS] [e [+-] DIGITS]`.
pub fn decimal_to_rational(text: &str) -> Option<Rational> {
    let (mantissa, exponent) = match text.find('e') {
        Some(i) => (&text[..i], Some(&text[i + 1..])),
        None => (text, None),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    if !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let mut shift = -(frac_part.len() as i64);
    if let Some(e) = exponent {
        let body = e.strip_prefix(['+', '-']).unwrap_or(e);
        if body.is_empty() || body.len() > 6 || !body.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        shift += e.parse::<i64>().ok()?;
    }
    let mantissa = Integer::from_str(&digits).ok()?;
    let ten = Integer::from(10);
    Some(if shift >= 0 {
        Rational::from(mantissa * ten.pow(shift as u32))
    } else {
        Rational::from((mantissa, ten.pow((-shift) as u32)))
    })
}

fn rational_text(r: &Rational) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl FromStr for NomeExpr {
    type Err = ParseNomeError;

    fn from_str(source: &str) -> Result<Self, Self::Err> {
        let text: String = source.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_lowercase();
        if let Some(rest) = text.strip_prefix("r=") {
            return Ok(NomeExpr::Shorthand(parse_rational(rest)?));
        }
        if let Some(rest) = text.strip_prefix("exp(") {
            let inner = rest
                .strip_prefix("-pi*sqrt(")
                .and_then(|s| s.strip_suffix("))"))
                .ok_or_else(|| err(source, "expected exp(-pi*sqrt(R))"))?;
            return Ok(NomeExpr::Exp(parse_rational(inner)?));
        }
        let value = decimal_to_rational(&text).ok_or_else(|| err(source, "expected a decimal, r=R or exp(-pi*sqrt(R))"))?;
        if value <= 0 || value >= 1 {
            return Err(err(source, "a decimal nome must lie strictly between 0 and 1"));
        }
        Ok(NomeExpr::Decimal(text))
    }
}

impl fmt::Display for NomeExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NomeExpr::Decimal(text) => f.write_str(text),
            NomeExpr::Shorthand(r) => write!(f, "r={}", rational_text(r)),
            NomeExpr::Exp(r) => write!(f, "exp(-pi*sqrt({}))", rational_text(r)),
        }
    }
}

impl NomeExpr {
    /// The `r` of `q = e^{-pi sqrt r}`, when the nome was given that way.
    pub fn r(&self) -> Option<&Rational> {
        match self {
            NomeExpr::Decimal(_) => None,
            NomeExpr::Shorthand(r) | NomeExpr::Exp(r) => Some(r),
        }
    }

    pub fn value(&self, prec: &Prec) -> ellq_core::Result<Real> {
        match self {
            NomeExpr::Decimal(text) => parse_real(text, prec),
            NomeExpr::Shorthand(r) | NomeExpr::Exp(r) => Ok(nome_from_r(r, prec)?.q.re),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> NomeExpr {
        s.parse().unwrap()
    }

    #[test]
    fn forms() {
        assert_eq!(parse("0.1"), NomeExpr::Decimal("0.1".into()));
        assert_eq!(parse(" R = 4 "), NomeExpr::Shorthand(Rational::from(4)));
        assert_eq!(parse("EXP(-PI * SQRT(2/5))"), NomeExpr::Exp(Rational::from((2, 5))));
        assert_eq!(parse("r=4/10").to_string(), "r=2/5");
        assert_eq!(parse("5E-3"), NomeExpr::Decimal("5e-3".into()));
    }

    #[test]
    fn rejects() {
        for bad in ["", "1", "1.5", "0", "-0.5", "r=0", "r=-1", "r=1/0", "r=a", "exp(-pi*sqrt(2)", "exp(pi*sqrt(2))", "0.1.2", "inf", "nan", "e5"] {
            assert!(bad.parse::<NomeExpr>().is_err(), "{bad}");
        }
        let e = "r=x".parse::<NomeExpr>().unwrap_err();
        assert!(e.to_string().contains("`x`"));
    }

    #[test]
    fn round_trip() {
        for text in ["0.25", "r=1", "r=2/5", "exp(-pi*sqrt(3))", "1e-2"] {
            let expr = parse(text);
            assert_eq!(expr.to_string(), text);
            assert_eq!(parse(&expr.to_string()), expr);
        }
    }

    #[test]
    fn values() {
        let p = Prec::new(30).unwrap();
        let a = parse("r=1").value(&p).unwrap();
        let b = parse("exp(-pi*sqrt(1))").value(&p).unwrap();
        assert_eq!(a, b);
        assert!((a.to_f64() - (-std::f64::consts::PI).exp()).abs() < 1e-15);
        assert_eq!(parse("0.5").value(&p).unwrap(), 0.5);
        assert_eq!(parse("0.5").r(), None);
    }

    proptest::proptest! {
        #[test]
        fn rationals_round_trip(n in 1u32..10_000, d in 1u32..10_000) {
            let expr = NomeExpr::Shorthand(Rational::from((n, d)));
            proptest::prop_assert_eq!(expr.to_string().parse::<NomeExpr>().unwrap(), expr);
        }

        #[test]
        fn decimals_round_trip(m in 1u64..999_999, pad in 0usize..4) {
            let text = format!("0.{}{}", "0".repeat(pad), m);
            let expr: NomeExpr = text.parse().unwrap();
            proptest::prop_assert_eq!(expr.to_string(), text);
        }
    }
}
