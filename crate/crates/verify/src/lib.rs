//! Executable identity checks for the `ellq-core` quantities, a seeded
//! sampler, a parallel suite runner and JSON/text reports.

mod check;
mod checks;
mod error;
mod report;
mod sampler;
mod suite;
pub mod table;

pub use check::{CheckCtx, IdentityCheck, Severity, Status, Tolerance};
pub use checks::register_builtin_checks;
pub use error::{Result, VerifyError};
pub use report::{CheckRecord, Report};
pub use sampler::Sampler;
pub use suite::{run_suite, select, SuiteConfig};
