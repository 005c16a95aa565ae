//! File formats, report rendering, randomized suites and the command layer
//! of the `hyperlift` tool.

pub mod commands;
pub mod output;
pub mod series_file;
pub mod suite;

use hyperlift_core::Error;

/// Process exit status for an error that prevented verification:
/// 2 for bad input, 3 for an internal-consistency failure, 1 otherwise.
pub fn error_status(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::UnknownIdentity(_) | Error::Domain(_) | Error::Pole { .. } => 2,
        Error::Consistency(_) => 3,
        Error::Convergence { .. } => 1,
    }
}
