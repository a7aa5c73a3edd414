//! Scenario runner: JSON scenarios in, CSV and JSON reports out.

// `!(x > 0.0)` is used throughout so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod checks;
pub mod error;
pub mod output;
pub mod pipeline;
pub mod scenario;
pub mod suite;

pub use error::CliError;
pub use pipeline::{run_scenario, RunOptions, ScenarioResult};
pub use scenario::{CheckId, Scenario};
pub use suite::{calibrate_dir, run_suite, SuiteOptions, SuiteReport};

/// Process exit code for an error: 2 for configuration problems, 1 otherwise.
pub fn exit_code(e: &CliError) -> i32 {
    match e {
        CliError::Config(_) => 2,
        _ => 1,
    }
}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/scenarios.md")]
mod book_scenarios {}
