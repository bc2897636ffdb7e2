use std::fmt;

use serde::Serialize;
use slicefock::ScalarKind;

use crate::error::{CliError, Result};
use crate::tolerances;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Csv => "csv",
            Format::Json => "json",
        })
    }
}

/// Settings shared by every subcommand.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub trunc: usize,
    pub radial: usize,
    pub angular: usize,
    pub tol: f64,
    pub seed: u64,
    #[serde(serialize_with = "kind_as_str")]
    pub kind: ScalarKind,
    pub format: Format,
}

fn kind_as_str<S: serde::Serializer>(kind: &ScalarKind, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(kind)
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            trunc: 40,
            radial: 45,
            angular: 85,
            tol: tolerances::QUAD_DEFAULT,
            seed: 7,
            kind: ScalarKind::Quaternion,
            format: Format::Csv,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trunc == 0 || self.radial == 0 || self.angular == 0 {
            return Err(CliError::Usage("--trunc, --radial and --angular must be at least 1".into()));
        }
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return Err(CliError::Usage(format!("--tol must be positive, got {}", self.tol)));
        }
        Ok(())
    }
}
