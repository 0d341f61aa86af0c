//! Verification suites, table dumps and demos behind the `adskit` binary.

pub mod cli;
pub mod demo;
pub mod dump;
pub mod report;
pub mod suites;

pub use report::{Check, Report, Status};
pub use suites::{run_verify, Options, Suite};
