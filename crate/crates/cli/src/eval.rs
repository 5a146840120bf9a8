//! Dispatch from `--fn NAME` to the library.

use ellq_core::cfrac::{h_cf, m_cf, m_series, p_cf, r1_cf, r2_cf, r3_cf, rr_cf};
use ellq_core::elliptic::{elliptic_k, singular_modulus};
use ellq_core::hyperq::{phi21, psi_small, Phi21Params};
use ellq_core::numerics::format_decimal;
use ellq_core::qfunctions::{agile, euler_f, psi_star, theta2, theta3, theta4, weber_phi, AgileParams, Route};
use ellq_core::rquantity::{agile_normalized, drq_dq, drq_normalized, rq, rq_star, tau0, tau_star, RqParams};
use ellq_core::{Complex, Prec};
use rug::ops::Pow;
use rug::Float;

use crate::error::CliError;
use crate::nome::NomeExpr;
use crate::params::Params;

/// A named quantity: its parameters and whether it takes `--q`.
pub struct FnSpec {
    pub name: &'static str,
    pub params: &'static [&'static str],
    pub optional: &'static [&'static str],
    pub takes_q: bool,
    pub about: &'static str,
}

const fn spec(name: &'static str, params: &'static [&'static str], takes_q: bool, about: &'static str) -> FnSpec {
    FnSpec {
        name,
        params,
        optional: &[],
        takes_q,
        about,
    }
}

pub const FUNCTIONS: &[FnSpec] = &[
    spec("K", &["k"], false, "complete elliptic integral K(k)"),
    spec("kr", &["r"], false, "singular modulus k_r"),
    spec("theta2", &[], true, "theta2(q)"),
    FnSpec {
        optional: &["z"],
        ..spec("theta3", &[], true, "theta3(z, q), z defaults to 0")
    },
    FnSpec {
        optional: &["z"],
        ..spec("theta4", &[], true, "theta4(z, q), z defaults to 0")
    },
    spec("f", &[], true, "f(-q) = (q; q)_inf"),
    spec("phi", &[], true, "phi(-q) = (-q; q)_inf"),
    spec("agile", &["a", "p"], true, "[a, p; q]"),
    spec("agile-normalized", &["a", "p"], true, "q^{p/12 - a/2 + a^2/(2p)} [a, p; q]"),
    spec("psistar", &["a", "p"], true, "psi*(a, p; q)"),
    spec("rqstar", &["a", "b", "p"], true, "R*(a, b, p; q)"),
    spec("rq", &["a", "b", "p"], true, "R(a, b, p; q)"),
    spec("rr", &[], true, "1/(1+ q/(1+ q^2/(1+ ...)))"),
    spec("r1", &[], true, "Rogers-Ramanujan fraction with q^{1/5}"),
    spec("r2", &[], true, "cubic fraction with q^{1/3}"),
    spec("r3", &[], true, "octic fraction with q^{1/2}"),
    spec("h", &[], true, "H(q), the octic fraction"),
    spec("mseries", &["c"], true, "M(c, q) = sum c^n q^{n(n+1)/2}"),
    spec("mcf", &["c"], true, "continued fraction for M(c, q)"),
    spec("pcf", &["a", "b"], true, "P(a, b, q) continued fraction"),
    spec("phi21", &["a", "b", "c", "z"], true, "2phi1[a, b; c; q, z]"),
    spec("psi", &["a", "z"], true, "psi(a, q, z) = 2phi1[a, 0; 0; q, z]"),
    spec("tau0", &["a"], true, "tau0(a, q)"),
    spec("taustar", &["a", "p"], true, "tau*(a, p; q)"),
    spec("drq", &["a", "b", "p"], true, "dR(a, b, p; q)/dq"),
    spec("drq-normalized", &["a", "b", "p"], true, "R'(q) q pi^2 / K(k_r)^2, q given as r=R"),
];

pub fn lookup(name: &str) -> Result<&'static FnSpec, CliError> {
    FUNCTIONS.iter().find(|f| f.name == name).ok_or_else(|| {
        let names: Vec<&str> = FUNCTIONS.iter().map(|f| f.name).collect();
        CliError::usage(format!("unknown function `{name}`; expected one of {}", names.join(", ")))
    })
}

/// A fully specified evaluation, re-runnable at any precision.
pub struct Evaluation {
    pub spec: &'static FnSpec,
    pub params: Params,
    pub q: Option<NomeExpr>,
}

impl Evaluation {
    pub fn new(name: &str, params: Params, q: Option<NomeExpr>) -> Result<Self, CliError> {
        let spec = lookup(name)?;
        for key in params.keys() {
            if !spec.params.contains(&key) && !spec.optional.contains(&key) {
                return Err(CliError::usage(format!("unknown parameter `{key}` for {}", spec.name)));
            }
        }
        for key in spec.params {
            if !params.keys().any(|k| k == *key) {
                return Err(CliError::usage(format!("missing parameter `{key}` for {}", spec.name)));
            }
        }
        match (&q, spec.takes_q) {
            (None, true) => return Err(CliError::usage(format!("{} needs --q", spec.name))),
            (Some(q), false) => return Err(CliError::usage(format!("{} takes no nome, got --q {q}", spec.name))),
            _ => {}
        }
        if spec.name == "drq-normalized" && q.as_ref().and_then(NomeExpr::r).is_none() {
            return Err(CliError::usage("drq-normalized needs the nome as r=R or exp(-pi*sqrt(R))"));
        }
        Ok(Evaluation { spec, params, q })
    }

    pub fn evaluate(&self, prec: &Prec) -> Result<Complex, CliError> {
        let p = &self.params;
        let c = |key: &str| p.complex(key, prec);
        let r = |key: &str| p.real(key, prec);
        let real_q = || -> Result<_, CliError> {
            let q = self.q.as_ref().expect("checked in new");
            Ok(q.value(prec)?)
        };
        let q = || -> Result<Complex, CliError> { Ok(Complex::from_real(real_q()?)) };
        let rq_params = || -> Result<RqParams, CliError> { Ok(RqParams::new(c("a")?, c("b")?, r("p")?)?) };
        let agile_params = || -> Result<AgileParams, CliError> { Ok(AgileParams::new(c("a")?, r("p")?)?) };
        let value = match self.spec.name {
            "K" => Complex::from_real(elliptic_k(&r("k")?, prec)?),
            "kr" => Complex::from_real(singular_modulus(&p.rational("r")?, prec)?),
            "theta2" => theta2(&q()?, prec)?,
            "theta3" => theta3(&p.complex_or("z", Complex::zero(prec), prec)?, &q()?, prec)?,
            "theta4" => theta4(&p.complex_or("z", Complex::zero(prec), prec)?, &q()?, prec)?,
            "f" => euler_f(&q()?, prec)?,
            "phi" => weber_phi(&q()?, prec)?,
            "agile" => agile(&agile_params()?, &q()?, Route::Auto, prec)?,
            "agile-normalized" => Complex::from_real(agile_normalized(&r("a")?, &r("p")?, &real_q()?, prec)?),
            "psistar" => psi_star(&agile_params()?, &q()?, prec)?,
            "rqstar" => rq_star(&rq_params()?, &q()?, prec)?,
            "rq" => rq(&rq_params()?, &q()?, prec)?,
            "rr" => rr_cf(&q()?, prec)?,
            "r1" => r1_cf(&q()?, prec)?,
            "r2" => r2_cf(&q()?, prec)?,
            "r3" => r3_cf(&q()?, prec)?,
            "h" => h_cf(&q()?, prec)?,
            "mseries" => m_series(&c("c")?, &q()?, prec)?,
            "mcf" => m_cf(&c("c")?, &q()?, prec)?,
            "pcf" => p_cf(&c("a")?, &c("b")?, &q()?, prec)?,
            "phi21" => phi21(
                &Phi21Params {
                    a: c("a")?,
                    b: c("b")?,
                    c: c("c")?,
                    q: q()?,
                    z: c("z")?,
                },
                prec,
            )?,
            "psi" => psi_small(&c("a")?, &q()?, &c("z")?, prec)?,
            "tau0" => tau0(&c("a")?, &real_q()?, prec)?,
            "taustar" => tau_star(&c("a")?, &r("p")?, &real_q()?, prec)?,
            "drq" => Complex::from_real(drq_dq(&rq_params()?, &real_q()?, prec)?),
            "drq-normalized" => {
                let nome_r = self.q.as_ref().and_then(NomeExpr::r).expect("checked in new");
                Complex::from_real(drq_normalized(&rq_params()?, nome_r, prec)?)
            }
            other => unreachable!("{other} is listed in FUNCTIONS"),
        };
        Ok(value)
    }
}

/// `X` for a real value, `X + Yi` or `X - Yi` otherwise, with `digits`
/// significant digits in each part.
pub fn format_value(z: &Complex, digits: u32) -> String {
    let sig = digits as usize;
    let scale = Float::with_val(64, z.re.abs_ref()).max(&Float::with_val(64, 1));
    let tiny = Float::with_val(64, 10).pow(-(digits as i32) - 5);
    let negligible = Float::with_val(64, z.im.abs_ref()) <= scale * tiny;
    if z.im.is_zero() || negligible {
        return format_decimal(&z.re, sig);
    }
    let im = format_decimal(&Float::with_val(z.im.prec(), z.im.abs_ref()), sig);
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{} {sign} {im}i", format_decimal(&z.re, sig))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(name: &str, params: &str, q: Option<&str>, digits: u32) -> String {
        let e = Evaluation::new(name, Params::parse(params).unwrap(), q.map(|s| s.parse().unwrap())).unwrap();
        format_value(&e.evaluate(&Prec::new(digits).unwrap()).unwrap(), digits)
    }

    #[test]
    fn reference_values() {
        assert_eq!(eval("kr", "r=1", None, 30), "0.707106781186547524400844362105");
        assert_eq!(eval("K", "k=0", None, 20), "1.5707963267948966192");
        assert!(eval("rq", "a=1,b=2,p=5", Some("r=4"), 30).starts_with("0.284079043840412296"));
    }

    #[test]
    fn complex_output() {
        // R at a complex argument: + i 2^{-1/4} times the phase
        let text = eval("rq", "a=-i,b=1-i,p=2", Some("r=1"), 20);
        assert!(text.ends_with('i'), "{text}");
    }

    #[test]
    fn argument_errors() {
        let q = || Some("0.1".parse().unwrap());
        assert!(Evaluation::new("nosuch", Params::default(), None).is_err());
        assert!(Evaluation::new("rq", Params::parse("a=1,b=2").unwrap(), q()).is_err());
        assert!(Evaluation::new("rq", Params::parse("a=1,b=2,p=5,x=1").unwrap(), q()).is_err());
        assert!(Evaluation::new("K", Params::parse("k=0").unwrap(), q()).is_err());
        assert!(Evaluation::new("theta2", Params::default(), None).is_err());
        assert!(Evaluation::new("drq-normalized", Params::parse("a=1,b=2,p=5").unwrap(), q()).is_err());
        assert!(Evaluation::new("theta3", Params::parse("z=0.1").unwrap(), q()).is_ok());
    }

    #[test]
    fn every_function_is_dispatched() {
        let p = Prec::new(20).unwrap();
        for f in FUNCTIONS {
            let params: Vec<String> = f
                .params
                .iter()
                .map(|k| match *k {
                    "k" => "k=1/2".to_string(),
                    "r" => "r=2".to_string(),
                    "p" => "p=5".to_string(),
                    "b" => "b=2/5".to_string(),
                    "c" => "c=3/10".to_string(),
                    "z" => "z=1/5".to_string(),
                    other => format!("{other}=1/5"),
                })
                .collect();
            let q = f.takes_q.then(|| "r=1".parse().unwrap());
            let e = Evaluation::new(f.name, Params::parse(&params.join(",")).unwrap(), q).unwrap();
            assert!(e.evaluate(&p).is_ok(), "{}", f.name);
        }
    }
}
