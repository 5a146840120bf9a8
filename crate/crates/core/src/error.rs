use std::fmt;

/// Errors raised by the numeric routines.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("no convergence after {terms} terms in {context}{}", last_pair(.last))]
    NonConvergence {
        context: String,
        terms: u64,
        /// The last two approximants, when the caller can report them.
        last: Option<(String, String)>,
    },
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("internal verification failed: {0}")]
    Verification(String),
    #[error("cross-check failed: {0}")]
    CrossCheck(String),
    #[error("insufficient precision: {needed} digits required, {available} available")]
    InsufficientPrecision { needed: u32, available: u32 },
}

fn last_pair(last: &Option<(String, String)>) -> String {
    match last {
        Some((a, b)) => format!(" (last approximants {a} and {b})"),
        None => String::new(),
    }
}

impl Error {
    pub(crate) fn domain(msg: impl fmt::Display) -> Self {
        Error::Domain(msg.to_string())
    }

    pub(crate) fn no_convergence(context: impl fmt::Display, terms: u64) -> Self {
        Error::NonConvergence {
            context: context.to_string(),
            terms,
            last: None,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
