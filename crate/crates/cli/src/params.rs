//! `--params key=value,key=value` with numeric values:
//!
//! ```text
//! VALUE := REAL | REAL ("+" | "-") [REAL] "i" | [("+" | "-")] [REAL] "i"
//! REAL  := ["-" | "+"] (DECIMAL | INT "/" INT)
//! ```

use ellq_core::{Complex, Prec, Real};
use rug::{Float, Rational};

use crate::error::CliError;
use crate::nome::decimal_to_rational;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params {
    entries: Vec<(String, String)>,
}

impl Params {
    pub fn parse(text: &str) -> Result<Params, CliError> {
        let mut entries: Vec<(String, String)> = Vec::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| CliError::usage(format!("parameter `{item}` is not key=value")))?;
            let key = key.trim().to_lowercase();
            if entries.iter().any(|(k, _)| *k == key) {
                return Err(CliError::usage(format!("parameter `{key}` given twice")));
            }
            entries.push((key, value.chars().filter(|c| !c.is_whitespace()).collect()));
        }
        Ok(Params { entries })
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(k, _)| k.as_str())
    }

    fn raw(&self, key: &str) -> Option<&str> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    fn required(&self, key: &str) -> Result<&str, CliError> {
        self.raw(key).ok_or_else(|| CliError::usage(format!("missing parameter `{key}`")))
    }

    pub fn complex(&self, key: &str, prec: &Prec) -> Result<Complex, CliError> {
        let raw = self.required(key)?;
        parse_complex(raw, prec).ok_or_else(|| CliError::usage(format!("invalid value `{raw}` for `{key}`")))
    }

    pub fn complex_or(&self, key: &str, default: Complex, prec: &Prec) -> Result<Complex, CliError> {
        match self.raw(key) {
            Some(_) => self.complex(key, prec),
            None => Ok(default),
        }
    }

    pub fn real(&self, key: &str, prec: &Prec) -> Result<Real, CliError> {
        let raw = self.required(key)?;
        parse_real_value(raw, prec).ok_or_else(|| CliError::usage(format!("`{key}` must be a real number, got `{raw}`")))
    }

    pub fn rational(&self, key: &str) -> Result<Rational, CliError> {
        let raw = self.required(key)?;
        parse_exact(raw).ok_or_else(|| CliError::usage(format!("`{key}` must be a rational number, got `{raw}`")))
    }
}

/// Exact value of a signed decimal or `INT/INT`.
fn parse_exact(text: &str) -> Option<Rational> {
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text.strip_prefix('+').unwrap_or(text)),
    };
    let body = body.to_lowercase();
    let value = match body.split_once('/') {
        Some((n, d)) => {
            let n = decimal_to_rational(n).filter(|r| *r.denom() == 1)?;
            let d = decimal_to_rational(d).filter(|r| *r.denom() == 1 && *r != 0)?;
            n / d
        }
        None => decimal_to_rational(&body)?,
    };
    Some(if negative { -value } else { value })
}

fn parse_real_value(text: &str, prec: &Prec) -> Option<Real> {
    parse_exact(text).map(|r| prec.real(&r))
}

fn parse_complex(text: &str, prec: &Prec) -> Option<Complex> {
    let lower = text.to_lowercase();
    let Some(body) = lower.strip_suffix('i') else {
        return parse_real_value(&lower, prec).map(Complex::from_real);
    };
    // split at the last sign that is neither leading nor part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'e');
    let (re, im) = match split {
        Some(i) => (parse_real_value(&body[..i], prec)?, &body[i..]),
        None => (prec.zero(), body),
    };
    let im = match im {
        "" | "+" => prec.one(),
        "-" => Float::with_val(prec.bits(), -prec.one()),
        other => parse_real_value(other, prec)?,
    };
    Some(Complex::new(re, im))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Prec {
        Prec::new(30).unwrap()
    }

    #[test]
    fn keys_and_values() {
        let params = Params::parse("a=1, b = 2/5 ,P=-0.25").unwrap();
        assert_eq!(params.keys().collect::<Vec<_>>(), ["a", "b", "p"]);
        assert_eq!(params.real("a", &p()).unwrap(), 1);
        assert_eq!(params.rational("b").unwrap(), Rational::from((2, 5)));
        assert_eq!(params.real("p", &p()).unwrap(), -0.25);
        assert!(params.real("c", &p()).is_err());
        assert!(Params::parse("a=1,a=2").is_err());
        assert!(Params::parse("a").is_err());
    }

    #[test]
    fn complex_values() {
        let p = p();
        let cases = [
            ("1+2i", (1.0, 2.0)),
            ("-1-i", (-1.0, -1.0)),
            ("i", (0.0, 1.0)),
            ("-0.5i", (0.0, -0.5)),
            ("1e-2+3/4i", (0.01, 0.75)),
            ("2.5", (2.5, 0.0)),
            ("1e+2-1i", (100.0, -1.0)),
        ];
        for (text, (re, im)) in cases {
            let z = parse_complex(text, &p).unwrap_or_else(|| panic!("{text}"));
            assert_eq!((z.re.to_f64(), z.im.to_f64()), (re, im), "{text}");
        }
        for bad in ["", "1+", "x", "1+2j", "1/0", "nan", "1++2i"] {
            assert!(parse_complex(bad, &p).is_none(), "{bad}");
        }
    }
}
