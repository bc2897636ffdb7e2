//! Subcommand bodies. Each returns the text to print and whether its checks
//! passed; the binary maps that to an exit status.

use std::fs;
use std::io::Read;

use serde::Serialize;
use serde_json::Value;
use slicefock::fock::{fock_inner_report, kernel_gram_matrix};
use slicefock::io::{AnyScalar, AnySeries};
use slicefock::sample::{random_series, RandomScalar};
use slicefock::{
    build_grid, kernel, kernel_gram, quad_inner, slice_independence_check, FockElement, Hypercomplex, ImaginaryUnit,
    Multivector, Quaternion, QuadratureGrid, ScalarKind, SliceSeries,
};

use crate::config::{Format, RunConfig};
use crate::error::{CliError, Result};
use crate::report::SweepSummary;
use crate::verify::{self, stream};

/// What a command printed and whether every check in it passed.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub output: String,
    pub passed: bool,
}

impl Outcome {
    fn ok(output: String) -> Outcome {
        Outcome { output, passed: true }
    }
}

/// Reads a file, or stdin for `-`.
pub fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(|source| CliError::Io { path: "<stdin>".into(), source })?;
        return Ok(text);
    }
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })
}

fn write_output(path: &str, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.into(), source })
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn csv_cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// One CSV line per row; scalar-valued fields are written as compact JSON.
fn to_csv<T: Serialize>(rows: &[T]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for (k, row) in rows.iter().enumerate() {
        let Value::Object(fields) = to_json(row) else { unreachable!("rows are structs") };
        if k == 0 {
            w.write_record(fields.keys()).expect("in-memory csv");
        }
        w.write_record(fields.values().map(csv_cell)).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8")
}

fn render<T: Serialize>(rows: &[T], format: Format) -> String {
    match format {
        Format::Csv => to_csv(rows),
        Format::Json => serde_json::to_string_pretty(rows).expect("serializable") + "\n",
    }
}

fn check_kind(explicit: Option<ScalarKind>, found: ScalarKind) -> Result<()> {
    match explicit {
        Some(expected) if expected != found => Err(slicefock::Error::KindMismatch { expected, found }.into()),
        _ => Ok(()),
    }
}

fn parse_point(text: &str) -> Result<AnyScalar> {
    Ok(AnyScalar::parse(text)?)
}

fn kind_mismatch(expected: ScalarKind, found: ScalarKind) -> CliError {
    slicefock::Error::KindMismatch { expected, found }.into()
}

#[derive(Serialize)]
struct EvalRow {
    point: Value,
    value: Value,
}

/// `f(p)` for a stored series.
pub fn eval(series: &str, at: &str, kind: Option<ScalarKind>, format: Format) -> Result<Outcome> {
    let f = AnySeries::parse(&read_input(series)?)?;
    let p = parse_point(at)?;
    check_kind(kind, f.kind())?;
    let value = match (&f, &p) {
        (AnySeries::Quaternion(f), AnyScalar::Quaternion(p)) => AnyScalar::Quaternion(f.eval(p)?),
        (AnySeries::Clifford(f), AnyScalar::Clifford(p)) => AnyScalar::Clifford(f.eval(p)?),
        _ => return Err(kind_mismatch(f.kind(), p.kind())),
    };
    Ok(Outcome::ok(render(&[EvalRow { point: to_json(&p), value: to_json(&value) }], format)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Coeff,
    Quad,
    Both,
}

#[derive(Serialize)]
struct InnerRow {
    method: &'static str,
    value: Value,
    difference: Option<f64>,
    paired_degree: usize,
    unpaired_norm: f64,
    warning: bool,
}

fn inner_rows<S: Hypercomplex + Serialize>(
    f: &SliceSeries<S>,
    g: &SliceSeries<S>,
    unit: Option<ImaginaryUnit<S>>,
    method: Method,
    grid: &QuadratureGrid,
    tol: f64,
) -> Result<(Vec<InnerRow>, bool)> {
    let pairing = fock_inner_report(&FockElement::new(f.clone()), &FockElement::new(g.clone()))?;
    let mut rows = Vec::new();
    let mut passed = true;
    if matches!(method, Method::Coeff | Method::Both) {
        rows.push(InnerRow {
            method: "coeff",
            value: to_json(&pairing.value),
            difference: None,
            paired_degree: pairing.paired_degree,
            unpaired_norm: pairing.unpaired_norm,
            warning: false,
        });
    }
    if matches!(method, Method::Quad | Method::Both) {
        let unit = unit.unwrap_or_else(|| ImaginaryUnit::default_for(&f.zero_scalar()));
        let q = quad_inner(f, g, &unit, grid)?;
        let difference = (method == Method::Both).then(|| q.value.distance(&pairing.value));
        if let Some(d) = difference {
            passed = d <= tol * (1.0 + pairing.value.norm()) && q.warning.is_none();
        }
        rows.push(InnerRow {
            method: "quad",
            value: to_json(&q.value),
            difference,
            paired_degree: pairing.paired_degree,
            unpaired_norm: pairing.unpaired_norm,
            warning: q.warning.is_some(),
        });
    }
    Ok((rows, passed))
}

/// `⟨f, g⟩` by coefficients, by quadrature on one slice, or both.
pub fn inner(
    f_path: &str,
    g_path: &str,
    slice: Option<&str>,
    method: Method,
    config: &RunConfig,
    kind: Option<ScalarKind>,
) -> Result<Outcome> {
    let f = AnySeries::parse(&read_input(f_path)?)?;
    let g = AnySeries::parse(&read_input(g_path)?)?;
    check_kind(kind, f.kind())?;
    let unit = slice.map(parse_point).transpose()?;
    let grid = build_grid(config.radial, config.angular)?;
    let (rows, passed) = match (&f, &g, unit) {
        (AnySeries::Quaternion(f), AnySeries::Quaternion(g), u) => {
            let u = match u {
                None => None,
                Some(AnyScalar::Quaternion(q)) => Some(ImaginaryUnit::new(q)?),
                Some(other) => return Err(kind_mismatch(ScalarKind::Quaternion, other.kind())),
            };
            inner_rows(f, g, u, method, &grid, config.tol)?
        }
        (AnySeries::Clifford(f), AnySeries::Clifford(g), u) => {
            let u = match u {
                None => None,
                Some(AnyScalar::Clifford(m)) => Some(ImaginaryUnit::new(m)?),
                Some(other) => return Err(kind_mismatch(f.kind(), other.kind())),
            };
            inner_rows(f, g, u, method, &grid, config.tol)?
        }
        _ => return Err(kind_mismatch(f.kind(), g.kind())),
    };
    Ok(Outcome { output: render(&rows, config.format), passed })
}

#[derive(Serialize)]
struct GramRow {
    q: Value,
    s: Value,
    n: usize,
    value: Value,
}

/// The truncated kernel at `q`, or `⟨k_q, k_s⟩` when `s` is given.
pub fn kernel_cmd(at: &str, s: Option<&str>, config: &RunConfig, kind: Option<ScalarKind>) -> Result<Outcome> {
    let q = parse_point(at)?;
    check_kind(kind, q.kind())?;
    let n = config.trunc;
    let Some(s) = s else {
        let series: AnySeries = match &q {
            AnyScalar::Quaternion(q) => kernel(q, n).into_series().into(),
            AnyScalar::Clifford(q) => kernel(q, n).into_series().into(),
        };
        return Ok(Outcome::ok(series.to_json() + "\n"));
    };
    let s = parse_point(s)?;
    let value = match (&q, &s) {
        (AnyScalar::Quaternion(q), AnyScalar::Quaternion(s)) => AnyScalar::Quaternion(kernel_gram(q, s, n)?),
        (AnyScalar::Clifford(q), AnyScalar::Clifford(s)) => AnyScalar::Clifford(kernel_gram(q, s, n)?),
        _ => return Err(kind_mismatch(q.kind(), s.kind())),
    };
    Ok(Outcome::ok(render(&[GramRow { q: to_json(&q), s: to_json(&s), n, value: to_json(&value) }], config.format)))
}

#[derive(Serialize)]
struct SliceRow {
    #[serde(rename = "I")]
    i: Value,
    #[serde(rename = "J")]
    j: Value,
    value: Value,
    difference: f64,
}

#[derive(Debug, Clone, Copy)]
pub struct QuadCheckArgs {
    pub deg_f: usize,
    pub deg_g: usize,
    pub slices: usize,
}

fn quad_check_for<S: RandomScalar + Serialize>(
    like: &S,
    args: QuadCheckArgs,
    config: &RunConfig,
) -> Result<(Vec<SliceRow>, bool)> {
    let grid = build_grid(config.radial, config.angular)?;
    let mut rng = stream(config.seed, 200);
    let f = random_series(like, args.deg_f, &mut rng);
    let g = random_series(like, args.deg_g, &mut rng);
    let mut rows = Vec::with_capacity(args.slices);
    let mut passed = grid.covers(args.deg_f, args.deg_g);
    for _ in 0..args.slices {
        let i = S::random_unit(like, &mut rng);
        let j = S::random_unit(like, &mut rng);
        let report = slice_independence_check(&f, &g, &i, &j, &grid, config.tol)?;
        passed &= report.pass;
        rows.push(SliceRow {
            i: to_json(i.as_scalar()),
            j: to_json(j.as_scalar()),
            value: to_json(&report.value_i),
            difference: report.difference,
        });
    }
    Ok((rows, passed))
}

/// Slice-independence sweep over `slices` random pairs `(I, J)` for one
/// random pair of series.
pub fn quad_check(args: QuadCheckArgs, config: &RunConfig) -> Result<Outcome> {
    let (rows, passed) = match config.kind {
        ScalarKind::Quaternion => quad_check_for(&Quaternion::ZERO, args, config)?,
        ScalarKind::Clifford(n) => quad_check_for(&Multivector::zero(n), args, config)?,
    };
    Ok(Outcome { output: render(&rows, config.format), passed })
}

fn summaries(rows: &[SweepSummary], format: Format) -> Outcome {
    Outcome { output: render(rows, format), passed: rows.iter().all(|r| r.pass) }
}

/// Nested-inner axioms, adjointness and the creation isometry on random
/// tensors.
pub fn tensor_check(dim: usize, max_level: usize, draws: usize, seed: u64, format: Format) -> Result<Outcome> {
    if dim == 0 || max_level == 0 || draws == 0 {
        return Err(CliError::Usage("--dim, --max-level and --draws must be at least 1".into()));
    }
    Ok(summaries(&verify::tensor_sweeps(dim, max_level, draws, seed)?, format))
}

/// `⟨X(t)𝟏, X(s)𝟏⟩ = min{t, s}` over random time pairs.
pub fn brownian(pairs: usize, tmax: f64, seed: u64, format: Format) -> Result<Outcome> {
    if pairs == 0 || !(tmax.is_finite() && tmax >= 0.0) {
        return Err(CliError::Usage("--pairs must be at least 1 and --tmax finite and non-negative".into()));
    }
    let worst = verify::brownian_sweep(pairs, tmax, &mut stream(seed, 15))?;
    let row = SweepSummary {
        check: "brownian-covariance".into(),
        draws: pairs,
        max_residual: worst,
        pass: worst <= crate::tolerances::TENSOR,
    };
    Ok(summaries(&[row], format))
}

/// Runs the suite and renders the report.
pub fn verify_cmd(config: &RunConfig) -> Result<Outcome> {
    let report = verify::run(config)?;
    let output = match config.format {
        Format::Csv => report.to_csv(),
        Format::Json => report.to_json(),
    };
    Ok(Outcome { output, passed: report.passed })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Table {
    Report,
    Gram,
}

#[derive(Serialize)]
struct GramEntry {
    i: usize,
    j: usize,
    q_i: Value,
    q_j: Value,
    value: Value,
}

fn gram_table<S: RandomScalar + Serialize>(like: &S, points: usize, config: &RunConfig) -> Result<Vec<GramEntry>> {
    let mut rng = stream(config.seed, 300);
    let qs: Vec<S> = (0..points).map(|_| S::random_point(like, &mut rng, 2.0)).collect();
    let gram = kernel_gram_matrix(&qs, config.trunc)?;
    let mut out = Vec::with_capacity(points * points);
    for (i, row) in gram.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            out.push(GramEntry { i, j, q_i: to_json(&qs[i]), q_j: to_json(&qs[j]), value: to_json(v) });
        }
    }
    Ok(out)
}

/// Writes the verification report, or the kernel Gram matrix
/// `G[i][j] = ⟨k_{q_j}, k_{q_i}⟩` of random points, to `out`.
pub fn export(table: Table, out: &str, points: usize, config: &RunConfig) -> Result<Outcome> {
    let (text, passed) = match table {
        Table::Report => {
            let o = verify_cmd(config)?;
            (o.output, o.passed)
        }
        Table::Gram => {
            if points == 0 {
                return Err(CliError::Usage("--points must be at least 1".into()));
            }
            let rows = match config.kind {
                ScalarKind::Quaternion => gram_table(&Quaternion::ZERO, points, config)?,
                ScalarKind::Clifford(n) => gram_table(&Multivector::zero(n), points, config)?,
            };
            (render(&rows, config.format), true)
        }
    };
    write_output(out, &text)?;
    Ok(Outcome { output: format!("wrote {out}\n"), passed })
}
