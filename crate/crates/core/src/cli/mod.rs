//! Front end: expression grammar, presentation files, suite runner and the
//! text commands behind the `superrtt` binary.

pub mod commands;
pub mod format;
pub mod parser;
pub mod runner;

pub use runner::{run_suite, Check, Suite, SuiteOptions, SuiteReport};

/// Process exit codes.
pub mod exit {
    pub const PASS: i32 = 0;
    pub const VERIFICATION_FAILED: i32 = 1;
    pub const USAGE: i32 = 2;
}
