//! Command-line front end: `compute`, `validate` and `table`.
//!
//! Exit codes: `0` success, `1` a validated identity failed, `2` usage or
//! parse error, `3` a kernel failed to converge or raised a numerical
//! error.

pub mod args;
pub mod cache;
pub mod commands;
pub mod request;

pub use args::Cli;
pub use commands::run;

pub const EXIT_OK: u8 = 0;
pub const EXIT_IDENTITY_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_KERNEL: u8 = 3;

/// Exit code for a library error.
pub fn exit_code(err: &stieltjes_core::Error) -> u8 {
    use stieltjes_core::Error;
    match err {
        Error::NonConvergence(_) | Error::Quadrature(_) | Error::Precision(_) => EXIT_KERNEL,
        Error::Domain(_) | Error::Pole { .. } | Error::Parse(_) | Error::Config(_) => EXIT_USAGE,
    }
}
