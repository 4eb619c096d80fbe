//! Command-line front end and exhaustive cross-validation for `naples-core`.

pub mod cli;
pub mod golden;
pub mod harness;
pub mod output;
pub mod render;

pub use cli::cli_main;
pub use harness::{oracle_fibers, verify, CheckResult, VerificationReport};
