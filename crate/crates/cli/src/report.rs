use std::collections::BTreeMap;

use serde::Serialize;

use crate::config::RunConfig;

/// Every operation the verification suite must exercise at least once.
pub const REQUIRED_OPS: &[&str] = &[
    "slice_decompose",
    "cl_mul",
    "cl_paravector_norm",
    "eval",
    "star_mul",
    "star_exp",
    "representation_extend",
    "fock_inner",
    "kernel",
    "reproduce",
    "kernel_gram",
    "membership",
    "quad_inner",
    "slice_independence_check",
    "nested_inner",
    "create",
    "annihilate",
    "adjoint_residual",
    "symmetrize",
    "sym_inner_induced",
    "sym_inner",
    "permanent",
    "brownian_cov",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

/// One line of a report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Row {
    pub check: String,
    pub parameters: String,
    pub values: String,
    pub residual: f64,
    pub tolerance: f64,
    pub verdict: Status,
    #[serde(skip)]
    pub ops: Vec<&'static str>,
}

impl Row {
    /// Passes iff `residual ≤ tolerance`; NaN residuals fail.
    pub fn new(check: &str, parameters: String, values: String, residual: f64, tolerance: f64) -> Row {
        let verdict = if residual <= tolerance { Status::Pass } else { Status::Fail };
        Row { check: check.into(), parameters, values, residual, tolerance, verdict, ops: Vec::new() }
    }

    pub fn ops(mut self, ops: &[&'static str]) -> Row {
        self.ops.extend_from_slice(ops);
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Status::Pass
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub config: RunConfig,
    pub rows: Vec<Row>,
    /// Operation name to the checks that exercised it.
    pub coverage: BTreeMap<&'static str, Vec<String>>,
    pub passed: bool,
}

impl Report {
    /// Appends the coverage row and fixes the overall verdict.
    pub fn new(config: RunConfig, mut rows: Vec<Row>) -> Report {
        let mut coverage: BTreeMap<&'static str, Vec<String>> = REQUIRED_OPS.iter().map(|op| (*op, Vec::new())).collect();
        for row in &rows {
            for op in &row.ops {
                let checks = coverage.entry(op).or_default();
                if !checks.contains(&row.check) {
                    checks.push(row.check.clone());
                }
            }
        }
        let missing: Vec<&str> = coverage.iter().filter(|(_, c)| c.is_empty()).map(|(op, _)| *op).collect();
        let values = if missing.is_empty() { "missing=none".to_string() } else { format!("missing={}", missing.join(";")) };
        rows.push(Row::new("coverage", format!("operations={}", REQUIRED_OPS.len()), values, missing.len() as f64, 0.0));
        let passed = rows.iter().all(Row::passed);
        Report { config, rows, coverage, passed }
    }

    pub fn to_csv(&self) -> String {
        rows_to_csv(&self.rows)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }
}

/// Fixed columns: check, parameters, values, residual, tolerance, verdict.
pub fn rows_to_csv(rows: &[Row]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8")
}

/// Summary of a randomized sweep, as printed by `tensor-check` and
/// `brownian`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepSummary {
    pub check: String,
    pub draws: usize,
    pub max_residual: f64,
    pub pass: bool,
}
