use std::fmt;

use ellq_core::{Complex, Prec, Real};
use rug::ops::Pow;
use rug::Float;
use serde::Serialize;

use crate::sampler::Sampler;

/// Bits used to store recorded errors; only their magnitude matters.
const ERROR_BITS: u32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Severity {
    /// A failure fails the suite.
    Normative,
    /// A statement as printed that is reported but never fails the suite.
    DiscrepancyAllowed,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Severity::Normative => "normative",
            Severity::DiscrepancyAllowed => "discrepancy-allowed",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Discrepancy,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Discrepancy => "discrepancy",
            Status::Skip => "skip",
        })
    }
}

/// Pass threshold for the largest recorded error.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tolerance {
    /// `10^(-digits + slack)`.
    Slack(i32),
    /// `10^(-digits / n)`, for finite-difference checks.
    Fraction(u32),
}

impl Tolerance {
    pub const DEFAULT: Tolerance = Tolerance::Slack(15);

    pub fn exponent(&self, digits: u32) -> i32 {
        match *self {
            Tolerance::Slack(slack) => -(digits as i32) + slack,
            Tolerance::Fraction(n) => -((digits / n) as i32),
        }
    }

    pub fn value(&self, digits: u32) -> Real {
        Float::with_val(ERROR_BITS, 10).pow(self.exponent(digits))
    }
}

pub type CheckFn = fn(&mut CheckCtx) -> ellq_core::Result<()>;

/// One registered identity: an id such as `lemma1.K`, the statement it
/// tests, and the function that samples and compares both sides.
#[derive(Clone, Copy)]
pub struct IdentityCheck {
    pub id: &'static str,
    pub description: &'static str,
    pub statement: &'static str,
    pub severity: Severity,
    pub tolerance: Tolerance,
    /// Digits added to the requested precision while evaluating.
    pub extra_digits: u32,
    pub run: CheckFn,
}

impl IdentityCheck {
    pub const fn new(id: &'static str, description: &'static str, statement: &'static str, run: CheckFn) -> Self {
        IdentityCheck {
            id,
            description,
            statement,
            severity: Severity::Normative,
            tolerance: Tolerance::DEFAULT,
            extra_digits: 0,
            run,
        }
    }

    pub const fn discrepancy(mut self) -> Self {
        self.severity = Severity::DiscrepancyAllowed;
        self
    }

    pub const fn tolerance(mut self, tolerance: Tolerance) -> Self {
        self.tolerance = tolerance;
        self
    }

    pub const fn extra_digits(mut self, extra: u32) -> Self {
        self.extra_digits = extra;
        self
    }
}

impl fmt::Debug for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityCheck")
            .field("id", &self.id)
            .field("severity", &self.severity)
            .field("tolerance", &self.tolerance)
            .field("extra_digits", &self.extra_digits)
            .finish_non_exhaustive()
    }
}

/// State handed to a running check.
#[derive(Debug)]
pub struct CheckCtx {
    /// Working precision: requested digits plus the check's extra digits.
    pub prec: Prec,
    /// Requested digits; tolerances refer to these.
    pub digits: u32,
    pub sampler: Sampler,
    max_err: Real,
    samples: u64,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl CheckCtx {
    pub fn new(digits: u32, extra_digits: u32, seed: u64, id: &str) -> ellq_core::Result<Self> {
        Ok(CheckCtx {
            prec: Prec::new(digits + extra_digits)?,
            digits,
            sampler: Sampler::new(seed, id),
            max_err: Float::new(ERROR_BITS),
            samples: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        })
    }

    /// Records one sample with error `|lhs - rhs| / max(1, |rhs|)`.
    pub fn compare(&mut self, lhs: &Complex, rhs: &Complex) {
        let gap = (lhs - rhs).abs();
        let scale = rhs.abs().max(&Float::with_val(ERROR_BITS, 1));
        self.record(&(gap / scale));
    }

    pub fn compare_real(&mut self, lhs: &Real, rhs: &Real) {
        self.compare(&Complex::from_real(lhs.clone()), &Complex::from_real(rhs.clone()));
    }

    /// Records one sample with an already computed error.
    pub fn record(&mut self, err: &Real) {
        let err = Float::with_val(ERROR_BITS, err.abs_ref());
        if err.is_nan() || err > self.max_err {
            self.max_err = err;
        }
        self.samples += 1;
    }

    /// Records a sample that failed outright (for instance no polynomial found).
    pub fn fail(&mut self, message: impl Into<String>) {
        self.samples += 1;
        self.failures.push(message.into());
    }

    pub fn note(&mut self, message: impl Into<String>) {
        self.notes.push(message.into());
    }

    pub fn max_err(&self) -> &Real {
        &self.max_err
    }

    pub fn samples(&self) -> u64 {
        self.samples
    }

    pub fn failures(&self) -> &[String] {
        &self.failures
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }
}
