use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rayon::prelude::*;

use crate::check::{CheckCtx, IdentityCheck, Severity, Status};
use crate::checks::register_builtin_checks;
use crate::error::{Result, VerifyError};
use crate::report::{CheckRecord, Report};

/// Lowest precision at which the default tolerance `10^(-digits+15)` means anything.
pub const MIN_DIGITS: u32 = 20;

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// `all`, an exact check id, or an id prefix such as `thm8` (matching `thm8.*`).
    pub selector: String,
    pub digits: u32,
    pub seed: u64,
    /// Worker threads; 0 uses one per processor.
    pub jobs: usize,
    pub timings: bool,
}

impl SuiteConfig {
    pub fn new(selector: impl Into<String>, digits: u32, seed: u64) -> Self {
        SuiteConfig {
            selector: selector.into(),
            digits,
            seed,
            jobs: 0,
            timings: false,
        }
    }
}

fn matches(id: &str, selector: &str) -> bool {
    selector == "all" || id == selector || id.strip_prefix(selector).is_some_and(|rest| rest.starts_with('.'))
}

/// The registered checks matched by `selector`, sorted by id.
pub fn select(selector: &str) -> Result<Vec<IdentityCheck>> {
    let mut chosen: Vec<IdentityCheck> = register_builtin_checks()
        .into_iter()
        .filter(|c| matches(c.id, selector))
        .collect();
    if chosen.is_empty() {
        return Err(VerifyError::UnknownSelector(selector.to_string()));
    }
    chosen.sort_by_key(|c| c.id);
    Ok(chosen)
}

fn panic_message(payload: Box<dyn std::any::Any + Send>) -> String {
    if let Some(s) = payload.downcast_ref::<&str>() {
        s.to_string()
    } else if let Some(s) = payload.downcast_ref::<String>() {
        s.clone()
    } else {
        "check panicked".to_string()
    }
}

/// Runs one check at `digits` with the stream derived from `seed`.
pub fn run_check(check: &IdentityCheck, digits: u32, seed: u64, timings: bool) -> CheckRecord {
    let start = Instant::now();
    let tolerance = check.tolerance.value(digits);
    let mut ctx = match CheckCtx::new(digits, check.extra_digits, seed, check.id) {
        Ok(ctx) => ctx,
        Err(e) => unreachable!("precision for {digits} digits was validated: {e}"),
    };
    let outcome = catch_unwind(AssertUnwindSafe(|| (check.run)(&mut ctx)));
    match outcome {
        Ok(Ok(())) => {}
        Ok(Err(e)) => ctx.fail(format!("error: {e}")),
        Err(payload) => ctx.fail(format!("panic: {}", panic_message(payload))),
    }

    let failed = !ctx.failures().is_empty() || !(ctx.max_err() < &tolerance);
    let status = if ctx.samples() == 0 {
        Status::Skip
    } else if !failed {
        Status::Pass
    } else if check.severity == Severity::Normative {
        Status::Fail
    } else {
        Status::Discrepancy
    };
    let mut notes: Vec<String> = ctx.failures().to_vec();
    notes.extend(ctx.notes().iter().cloned());
    CheckRecord {
        id: check.id.to_string(),
        status,
        severity: check.severity,
        max_abs_error: ctx.max_err().clone(),
        tolerance,
        samples: ctx.samples(),
        seconds: timings.then(|| start.elapsed().as_secs_f64()),
        note: (!notes.is_empty()).then(|| notes.join("; ")),
    }
}

/// Evaluates every matched check; the report is sorted by id and, without
/// timings, depends only on `(selector, digits, seed)`.
pub fn run_suite(config: &SuiteConfig) -> Result<Report> {
    if config.digits < MIN_DIGITS {
        return Err(VerifyError::Config(format!(
            "digits must be at least {MIN_DIGITS}, got {}",
            config.digits
        )));
    }
    let checks = select(&config.selector)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| VerifyError::Config(e.to_string()))?;
    let records: Vec<CheckRecord> = pool.install(|| {
        checks
            .par_iter()
            .map(|c| run_check(c, config.digits, config.seed, config.timings))
            .collect()
    });
    Ok(Report {
        suite: config.selector.clone(),
        digits: config.digits,
        seed: config.seed,
        checks: records,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selector_matching() {
        assert!(matches("thm8.magnitude", "thm8"));
        assert!(matches("thm8.magnitude", "thm8.magnitude"));
        assert!(matches("thm8.magnitude", "all"));
        assert!(!matches("thm80.x", "thm8"));
        assert!(!matches("thm8.magnitude", "thm8.mag"));
    }

    #[test]
    fn unknown_selector() {
        assert!(matches!(select("nosuch"), Err(VerifyError::UnknownSelector(_))));
    }

    #[test]
    fn low_precision_rejected() {
        let config = SuiteConfig::new("lemma1", 10, 1);
        assert!(matches!(run_suite(&config), Err(VerifyError::Config(_))));
    }
}
