//! Command-line front end for `slicefock`: series I/O, inner products and
//! kernels, and the verification suite that checks the coefficient,
//! quadrature and tensor descriptions of the Fock space against each other.

pub mod commands;
pub mod config;
pub mod error;
pub mod report;
pub mod tolerances;
pub mod verify;

pub use config::{Format, RunConfig};
pub use error::{CliError, Result, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};
pub use report::{Report, Row, Status};
