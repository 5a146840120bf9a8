use std::fs;

use clap::Args;
use ellq_core::algrec::{find_minpoly, recognize, Confidence, MinPolyResult, Recognition, VERIFY_EXTRA_DIGITS};
use ellq_core::numerics::{format_decimal, format_sci, parse_real};
use ellq_core::Prec;
use ellq_verify::table::worked_constants;
use ellq_verify::{run_suite, SuiteConfig};
use rug::Integer;
use serde_json::json;

use crate::error::CliError;
use crate::eval::{format_value, Evaluation, FUNCTIONS};
use crate::nome::NomeExpr;
use crate::params::Params;
use crate::{Common, Format};

#[derive(Args, Debug)]
pub struct EvalArgs {
    /// Quantity to evaluate; `--fn list` prints the names.
    #[arg(long = "fn")]
    pub name: String,
    /// Comma-separated key=value pairs, e.g. `a=1,b=2,p=5`.
    #[arg(long, default_value = "")]
    pub params: String,
    /// Nome: a decimal in (0, 1), `r=R` or `exp(-pi*sqrt(R))`.
    #[arg(long)]
    pub q: Option<String>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// `all`, a check id, or a group prefix such as `thm8`.
    #[arg(long, default_value = "all")]
    pub suite: String,
    /// Include wall-clock seconds per check (the report is then not reproducible byte for byte).
    #[arg(long)]
    pub timings: bool,
}

#[derive(Args, Debug)]
pub struct MinpolyArgs {
    #[arg(long = "fn", conflicts_with = "value", required_unless_present = "value")]
    pub name: Option<String>,
    #[arg(long, default_value = "")]
    pub params: String,
    #[arg(long)]
    pub q: Option<String>,
    /// A decimal literal; it is taken to be known to as many digits as it has.
    #[arg(long, allow_hyphen_values = true)]
    pub value: Option<String>,
    #[arg(long, default_value_t = 8)]
    pub degree: usize,
    #[arg(long, default_value = "100000000")]
    pub height: String,
}

fn prec(digits: u32) -> Result<Prec, CliError> {
    Prec::new(digits).map_err(|e| CliError::usage(e.to_string()))
}

fn emit(common: &Common, text: &str) -> Result<(), CliError> {
    match &common.out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn parse_nome(q: &Option<String>) -> Result<Option<NomeExpr>, CliError> {
    q.as_deref()
        .map(|text| text.parse::<NomeExpr>().map_err(|e| CliError::usage(e.to_string())))
        .transpose()
}

pub fn eval(args: &EvalArgs, common: &Common) -> Result<u8, CliError> {
    if args.name == "list" {
        let mut text = String::new();
        for f in FUNCTIONS {
            let mut params: Vec<String> = f.params.iter().map(|p| p.to_string()).collect();
            params.extend(f.optional.iter().map(|p| format!("[{p}]")));
            if f.takes_q {
                params.push("q".into());
            }
            text.push_str(&format!("{:<17} {:<16} {}\n", f.name, params.join(","), f.about));
        }
        emit(common, &text)?;
        return Ok(0);
    }
    let evaluation = Evaluation::new(&args.name, Params::parse(&args.params)?, parse_nome(&args.q)?)?;
    let value = evaluation.evaluate(&prec(common.digits)?)?;
    let text = match common.format {
        Format::Text => format!("{}\n", format_value(&value, common.digits)),
        Format::Json => {
            let sig = common.digits as usize;
            let body = json!({
                "fn": evaluation.spec.name,
                "digits": common.digits,
                "re": format_decimal(&value.re, sig),
                "im": format_decimal(&value.im, sig),
            });
            format!("{}\n", serde_json::to_string_pretty(&body).expect("json"))
        }
    };
    emit(common, &text)?;
    Ok(0)
}

pub fn verify(args: &VerifyArgs, common: &Common) -> Result<u8, CliError> {
    let mut config = SuiteConfig::new(args.suite.clone(), common.digits, common.seed);
    config.jobs = common.jobs.unwrap_or(0);
    config.timings = args.timings;
    let report = run_suite(&config)?;
    let text = match common.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
    };
    emit(common, &text)?;
    if common.out.is_some() {
        eprintln!("{}", report.summary());
    }
    Ok(report.exit_code() as u8)
}

/// Number of significant digits in a decimal literal.
fn significant_digits(literal: &str) -> u32 {
    let mantissa = literal.split(['e', 'E']).next().unwrap_or("");
    let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    digits.trim_start_matches('0').len() as u32
}

fn minpoly_text(result: &MinPolyResult, digits: u32, literal: bool) -> String {
    let mut text = format!("{}\n", result.to_text());
    text.push_str(&format!("degree: {}\n", result.degree));
    text.push_str(&format!("residual at {digits} digits: {}\n", format_sci(&result.residual, 3)));
    match &result.elevated_residual {
        Some(r) => text.push_str(&format!(
            "residual at {} digits: {}\n",
            digits + VERIFY_EXTRA_DIGITS,
            format_sci(r, 3)
        )),
        None if literal => text.push_str("residual at higher precision: not available for a literal value\n"),
        None => {}
    }
    let confidence = match result.confidence {
        Confidence::Verified => "verified",
        Confidence::Unverified => "unverified",
    };
    text.push_str(&format!("confidence: {confidence}\n"));
    text
}

fn minpoly_json(result: &MinPolyResult, digits: u32) -> String {
    let body = json!({
        "coeffs": result.coeffs.iter().map(Integer::to_string).collect::<Vec<_>>(),
        "text": result.to_text(),
        "degree": result.degree,
        "digits": digits,
        "residual": format_sci(&result.residual, 3),
        "elevated_residual": result.elevated_residual.as_ref().map(|r| format_sci(r, 3)),
        "confidence": match result.confidence {
            Confidence::Verified => "verified",
            Confidence::Unverified => "unverified",
        },
    });
    format!("{}\n", serde_json::to_string_pretty(&body).expect("json"))
}

pub fn minpoly(args: &MinpolyArgs, common: &Common) -> Result<u8, CliError> {
    let height: Integer = args
        .height
        .parse()
        .map_err(|_| CliError::usage(format!("invalid height `{}`", args.height)))?;
    if height < 1 {
        return Err(CliError::usage("height must be positive"));
    }
    let (outcome, digits, literal) = match (&args.name, &args.value) {
        (_, Some(literal)) => {
            // the literal is all we know about the number
            let p = prec(significant_digits(literal).max(Prec::MIN_DIGITS))?;
            let x = parse_real(literal, &p).map_err(|e| CliError::usage(e.to_string()))?;
            (find_minpoly(&x, args.degree, &height, &p)?, p.digits(), true)
        }
        (Some(name), None) => {
            let evaluation = Evaluation::new(name, Params::parse(&args.params)?, parse_nome(&args.q)?)?;
            let p = prec(common.digits)?;
            let value = |pr: &Prec| -> ellq_core::Result<ellq_core::Real> {
                let z = evaluation.evaluate(pr).map_err(|e| match e {
                    CliError::Core(e) => e,
                    other => ellq_core::Error::Domain(other.to_string()),
                })?;
                Ok(z.re)
            };
            (recognize(value, args.degree, &height, &p)?, p.digits(), false)
        }
        (None, None) => return Err(CliError::usage("give --fn or --value")),
    };
    match outcome {
        Recognition::Found(result) => {
            let text = match common.format {
                Format::Text => minpoly_text(&result, digits, literal),
                Format::Json => minpoly_json(&result, digits),
            };
            emit(common, &text)?;
            Ok(0)
        }
        Recognition::NotFound {
            max_degree,
            height_bound,
        } => Err(CliError::NotFound(format!(
            "no integer polynomial of degree <= {max_degree} and height <= {height_bound} found at {digits} digits"
        ))),
    }
}

pub fn table(common: &Common) -> Result<u8, CliError> {
    const MIN_TABLE_DIGITS: u32 = 30;
    if common.digits < MIN_TABLE_DIGITS {
        return Err(CliError::usage(format!("table needs --digits >= {MIN_TABLE_DIGITS}")));
    }
    let p = prec(common.digits)?;
    let rows = worked_constants(&p)?;
    let tolerance = p.pow10(-(common.digits as i32) + 15);
    let sig = common.digits as usize;
    let mut mismatches = 0;
    let mut text = String::new();
    let mut json_rows = Vec::new();
    for row in &rows {
        let gap = row.gap();
        let ok = gap < tolerance;
        if !ok {
            mismatches += 1;
        }
        match common.format {
            Format::Text => {
                text.push_str(&format!("{}\n", row.label));
                text.push_str(&format!("  closed form  {}\n", row.closed_form));
                text.push_str(&format!("  closed       {}\n", format_decimal(&row.closed, sig)));
                text.push_str(&format!("  computed     {}\n", format_decimal(&row.computed, sig)));
                text.push_str(&format!(
                    "  gap          {}  {}\n",
                    format_sci(&gap, 3),
                    if ok { "ok" } else { "MISMATCH" }
                ));
            }
            Format::Json => json_rows.push(json!({
                "label": row.label,
                "closed_form": row.closed_form,
                "closed": format_decimal(&row.closed, sig),
                "computed": format_decimal(&row.computed, sig),
                "gap": format_sci(&gap, 3),
                "ok": ok,
            })),
        }
    }
    if common.format == Format::Json {
        let body = json!({ "digits": common.digits, "rows": json_rows });
        text = format!("{}\n", serde_json::to_string_pretty(&body).expect("json"));
    }
    emit(common, &text)?;
    Ok(if mismatches == 0 { 0 } else { 1 })
}
