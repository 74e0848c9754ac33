//! Command-line front end for `kpartite-ao`.
//!
//! [`parse_args`] turns an argument vector into a [`RunConfig`]; [`run`]
//! executes it and returns the text for standard output and standard error
//! together with the process exit code.

mod args;
mod report;
mod verify;

pub use args::{parse_args, ArgsError, Mode, RunConfig, DEFAULT_VERIFY_CAP, MAX_VERIFY_CAP};
pub use report::{run, Check, CheckStatus, Outcome, Report};

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: u8 = 0;
    pub const VERIFY_MISMATCH: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const CAPACITY: u8 = 3;
}
